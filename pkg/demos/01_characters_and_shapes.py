"""Normalized characters on multirectangular diagrams, two independent ways.

Builds the staircase diagram with block heights (2,3,2) and widths (11,8,5),
then evaluates a few normalized characters on it both through the
Murnaghan-Nakayama recursion and through the factorization sum, and checks
they agree.
"""

from stanleychar import (
    MultirectangularShape,
    Partition,
    evaluate_character,
    normalized_character,
)

shape = MultirectangularShape((2, 3, 2), (11, 8, 5))
lam = shape.to_diagram()
print(f"shape {shape} has diagram {lam} with {lam.size} boxes")

for parts in [(1,), (2,), (3,), (2, 2), (4,)]:
    pi = Partition(parts)
    mn = normalized_character(pi, lam)
    stanley = evaluate_character(pi, shape)
    marker = "ok" if mn == stanley else "MISMATCH"
    print(f"Ch_{pi}({lam}) = {mn}  (factorization sum: {stanley})  {marker}")

# the character vanishes as soon as the permutation needs more boxes
tiny = Partition((2, 1))
print(f"Ch_(4)({tiny}) = {normalized_character(Partition((4,)), tiny)}")
