"""Poincaré polynomials and the symmetry identity."""

from goodsemi import as_ideal, dual, filtration, node, numerical, poincare_polynomial, product
from goodsemi.poincare import check_symmetry_theorem, coefficient_table

for name, S in [("<2,3>", numerical([2, 3])), ("<3,4,5>", numerical([3, 4, 5])),
                ("node", node()), ("<2,3>^2", product(numerical([2, 3]), numerical([2, 3])))]:
    print(f"P_{name} = {poincare_polynomial(as_ideal(S))}")

# The coefficient table around the node; entries outside [mu, gamma] vanish.
lo, c = coefficient_table(as_ideal(node()), margin=1)
print("\ncoefficients of the node from", lo)
print(c)

# For M = <3,4,5> filtered at 3, P_(K-M) is the reflection of P_M.
S = numerical([3, 4, 5])
M = filtration(as_ideal(S), (3,))
print("\nP_M =", poincare_polynomial(M))
print("P_(K-M) =", poincare_polynomial(dual(S, M)))
print("reflected P_M =", poincare_polynomial(M).reflect(S.gamma))
holds, report = check_symmetry_theorem(S, M)
print("conditions:", report.conditions, "identity:", holds)
