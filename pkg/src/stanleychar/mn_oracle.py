"""Ground truth for characters: the Murnaghan-Nakayama rule.

This module is kept independent of the polynomial machinery so that it can
serve as an oracle for everything derived from factorization sums.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .perm import permutation_from_padded_partition
from .shapes import Partition


def _border_strip_removals(lam: tuple[int, ...], t: int) -> list[tuple[tuple[int, ...], int]]:
    """All ways to remove a border strip of size t from lam.

    Returns (remaining diagram, (-1)^height) pairs, computed on the beta-set:
    removing a strip of size t moves a first-column hook length h to h - t,
    and the height is the number of hook lengths jumped over.
    """
    r = len(lam)
    beta = [lam[i] + (r - 1 - i) for i in range(r)]
    bset = set(beta)
    removals = []
    for b in beta:
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        jumped = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((bset - {b}) | {nb}, reverse=True)
        new_rows = (v - (r - 1 - j) for j, v in enumerate(new_beta))
        new_lam = tuple(x for x in new_rows if x > 0)
        removals.append((new_lam, -1 if jumped % 2 else 1))
    return removals


@lru_cache(maxsize=None)
def _chi(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    t, rest = mu[0], mu[1:]
    return sum(sgn * _chi(sub, rest) for sub, sgn in _border_strip_removals(lam, t))


def irreducible_character(lam: Partition, mu: Partition) -> int:
    """The irreducible character value chi^lam on the class of cycle type mu.

    Computed by border-strip removal, peeling the largest part of mu first.
    """
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size} but |{mu}| = {mu.size}")
    return _chi(lam.parts, tuple(sorted(mu.parts, reverse=True)))


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible representation, via the same recursion."""
    return _chi(lam.parts, (1,) * lam.size)


def hook_length_dimension(lam: Partition) -> int:
    """Independent dimension check via the hook length formula."""
    conj = lam.transpose()
    result = factorial(lam.size)
    for i, row in enumerate(lam.parts):
        for j in range(row):
            result //= (row - j) + (conj.parts[j] - i) - 1
    return result


def normalized_character(pi: Partition, lam: Partition) -> int:
    """Falling-factorial normalized character of pi evaluated on lam.

    For n = |lam| >= k = |pi| this is
    n(n-1)...(n-k+1) * chi^lam(pi padded with fixed points) / chi^lam(identity),
    and 0 when n < k.  The division is always exact.
    """
    n, k = lam.size, pi.size
    if n < k:
        return 0
    padded = permutation_from_padded_partition(pi, n)
    mu = padded.cycle_type()
    falling = 1
    for i in range(k):
        falling *= n - i
    value = Fraction(falling * irreducible_character(lam, mu), dimension(lam))
    if value.denominator != 1:
        raise AssertionError(f"non-integer normalized character for pi={pi}, lam={lam}")
    return int(value)
