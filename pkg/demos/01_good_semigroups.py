"""Good semigroups, their ideals and the distance function.

Run with ``python3 demos/01_good_semigroups.py``.
"""

from goodsemi import (
    as_ideal,
    element_distance,
    filtration,
    ideal_distance,
    node,
    numerical,
    orthant,
    product,
    validate,
)
from goodsemi.lattice import Box
from goodsemi.render import render_ascii

# A numerical semigroup is a good semigroup with s = 1.
S = numerical([3, 4, 5])
print("<3,4,5>: conductor", S.gamma, "small elements", S.sorted_small())
print("validation:", validate(S))

# The node {0} u ((1,1) + N^2) is the simplest planar example.
N = node()
print("\nthe node over [-1,3] x [-1,3]:")
print(render_ascii(as_ideal(N), Box((-1, -1), (3, 3))))

# Products are good as well.
P = product(numerical([2, 3]), numerical([2, 3]))
print("<2,3> x <2,3>:", P)

# Distances count the length of saturated chains.
print("\nsaturated chain length (0,0) -> (1,1) in the node:", element_distance(as_ideal(N), (0, 0), (1, 1)))
print("dist(N \\ <3,4,5>) =", ideal_distance(orthant(S, (0,)), as_ideal(S)))
M = filtration(as_ideal(S), (3,))
print("dist(<3,4,5> \\ M) =", ideal_distance(as_ideal(S), M), "where M =", M)
