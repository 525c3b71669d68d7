"""Kerov polynomials and free cumulants, solved exactly and cross-counted.

K_k expresses the character of a k-cycle universally in the free cumulants
R_2, R_3, ...  The linear coefficients are counted by factorization pairs,
the quadratic ones by labeled triples; both counts are compared against the
exact solver output here.
"""

from stanleychar import (
    Partition,
    count_linear_pairs,
    count_quadratic_triples,
    free_cumulant_value,
    kerov_polynomial,
    normalized_character,
)

for k in range(1, 7):
    print(f"K_{k} = {kerov_polynomial(k)}")

print()
k = 5
for i in (6, 4, 2):
    pairs = count_linear_pairs(k, i)
    solver = kerov_polynomial(k).coefficient({f"R{i}": 1})
    print(f"[R{i}] K_{k}: pair count {pairs}, solver {solver}")

triples = count_quadratic_triples(6, 2, 4)
solver = kerov_polynomial(6).coefficient({"R2": 1, "R4": 1})
print(f"[R2*R4] K_6: triple count {triples}, solver {solver}")

print()
lam = Partition((3, 1))
values = {j: free_cumulant_value(j, lam) for j in range(2, 6)}
print(f"free cumulants of {lam}: {values}")
k4 = kerov_polynomial(4)
evaluated = k4.evaluate({f"R{j}": values[j] for j in (2, 3, 4, 5)})
print(f"K_4 evaluated on them: {evaluated}")
print(f"Ch_4({lam}) directly:   {normalized_character(Partition((4,)), lam)}")
