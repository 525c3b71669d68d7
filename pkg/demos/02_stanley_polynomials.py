"""The character of a 5-cycle as a polynomial in Stanley coordinates.

With three stacked rectangles the polynomial has 121 terms; this script
prints the handful of landmark coefficients and shows the grading: all
exponent sums share the parity of k+1 and the top degree is k+1.
"""

from stanleychar import Partition, stanley_polynomial

poly = stanley_polynomial(Partition((5,)), 3)
print(f"Ch_5 on three rectangles: {len(poly.terms)} terms")

landmarks = [
    {"p1": 5, "q1": 1},
    {"p1": 4, "q1": 2},
    {"p1": 3, "q1": 3},
    {"p1": 1, "q1": 5},
    {"p1": 3, "q1": 1},
    {"p1": 1, "q1": 1},
    {"p1": 1, "p2": 1, "p3": 1, "q1": 1, "q2": 1, "q3": 1},
]
for exps in landmarks:
    mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in sorted(exps.items()))
    print(f"  [{mono}] = {poly.coefficient(exps)}")

degrees = sorted({sum(e for _, e in m) for m in poly.monomials()})
print(f"term degrees: {degrees} (all even, top = 6)")

# a single rectangle collapses the same sum to a short polynomial
print("Ch_3 on one rectangle:", stanley_polynomial(Partition((3,)), 1))
