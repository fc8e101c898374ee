"""Canonical ideals and the dual K0 - E."""

from goodsemi import as_ideal, check_reflexivity, dual, filtration, is_canonical, normalized_canonical, numerical
from goodsemi.catalog import enumerate_good
from goodsemi.idealops import translate

# <3,4,5> is not symmetric: K0 has one element more than S below the conductor.
S = numerical([3, 4, 5])
K = normalized_canonical(S)
print("K0 of <3,4,5>:", K.sorted_small(), "conductor", K.gamma)
print("S symmetric?", K == as_ideal(S))
print("translate of K0 canonical?", is_canonical(S, translate(K, (5,))))

# Duality is an involution on good ideals.
M = filtration(as_ideal(S), (3,))
D = dual(S, M)
print("\nK0 - M =", D)
print("K0 - (K0 - M) = M?", check_reflexivity(S, M))

# Which planar semigroups with conductor <= (2,2) are symmetric?
print()
for T in enumerate_good(2, (2, 2)):
    flag = "symmetric" if normalized_canonical(T) == as_ideal(T) else ""
    print(f"gamma={T.gamma} small={T.sorted_small()} {flag}")
