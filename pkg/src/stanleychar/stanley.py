"""Stanley character formulas: factorization sums over the symmetric group.

The rectangular formula sums (-1)^sigma1 q^cycles(sigma1) p^cycles(sigma2)
over all pairs sigma1 sigma2 = pi.  The multirectangular formula additionally
sums over colorings of the cycles of sigma2 with colors 1..ell; each cycle of
sigma1 inherits the maximum color among the sigma2-cycles it meets.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor

from .exactpoly import Monomial, Poly
from .perm import Permutation, enumerate_factorizations, permutation_from_padded_partition
from .shapes import MultirectangularShape, Partition

# k! * ell^k grows factorially; refuse silly inputs unless explicitly forced.
DEFAULT_DEGREE_GUARD = 8


def _pi_permutation(pi: Partition) -> Permutation:
    return permutation_from_padded_partition(pi, pi.size)


def stanley_rectangular(pi: Partition) -> Poly:
    """Character polynomial on a single p x q rectangle, in variables p1, q1."""
    acc: dict[Monomial, int] = {}
    for sigma1, sigma2 in enumerate_factorizations(_pi_permutation(pi)):
        mono_exps: dict[str, int] = {}
        if sigma2.degree:
            mono_exps["p1"] = sigma2.num_cycles()
            mono_exps["q1"] = sigma1.num_cycles()
        mono = tuple(sorted(mono_exps.items()))
        acc[mono] = acc.get(mono, 0) + sigma1.sign()
    return Poly(acc)


def _coloring_sum(
    pairs: list[tuple[Permutation, Permutation]], ell: int
) -> dict[Monomial, int]:
    acc: dict[Monomial, int] = {}
    colors = range(1, ell + 1)
    for sigma1, sigma2 in pairs:
        cycles1 = [frozenset(c) for c in sigma1.cycles()]
        cycles2 = [frozenset(c) for c in sigma2.cycles()]
        sign = sigma1.sign()
        meets = [
            [j for j, d in enumerate(cycles2) if c & d] for c in cycles1
        ]
        for f2 in itertools.product(colors, repeat=len(cycles2)):
            p_exps = [0] * (ell + 1)
            q_exps = [0] * (ell + 1)
            for color in f2:
                p_exps[color] += 1
            for incident in meets:
                q_exps[max(f2[j] for j in incident)] += 1
            mono = tuple(
                [(f"p{i}", e) for i in range(1, ell + 1) if (e := p_exps[i])]
                + [(f"q{i}", e) for i in range(1, ell + 1) if (e := q_exps[i])]
            )
            acc[mono] = acc.get(mono, 0) + sign
    return acc


def stanley_polynomial(pi: Partition, ell: int, threads: int = 1) -> Poly:
    """Character polynomial on ell stacked rectangles, in p1..p_ell, q1..q_ell."""
    if ell < 1:
        raise ValueError(f"number of rectangles must be >= 1, got {ell}")
    pairs = list(enumerate_factorizations(_pi_permutation(pi)))
    if threads <= 1 or len(pairs) < 2:
        acc = _coloring_sum(pairs, ell)
    else:
        chunk = (len(pairs) + threads - 1) // threads
        chunks = [pairs[i : i + chunk] for i in range(0, len(pairs), chunk)]
        acc = {}
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for partial in pool.map(_coloring_sum, chunks, itertools.repeat(ell)):
                for mono, c in partial.items():
                    acc[mono] = acc.get(mono, 0) + c
    return Poly(acc)


def shape_bindings(shape: MultirectangularShape, ell: int) -> dict[str, int]:
    """Numeric variable bindings for a shape, padding with zeros up to ell."""
    bindings: dict[str, int] = {}
    for i in range(1, ell + 1):
        bindings[f"p{i}"] = shape.p[i - 1] if i <= shape.ell else 0
        bindings[f"q{i}"] = shape.q[i - 1] if i <= shape.ell else 0
    return bindings


def evaluate_character(pi: Partition, shape: MultirectangularShape, threads: int = 1) -> int:
    """Exact character value on a concrete multirectangular diagram."""
    if not shape.q_non_increasing():
        raise ValueError(f"invalid Stanley coordinates, q not non-increasing: {shape}")
    ell = max(shape.ell, 1)
    poly = stanley_polynomial(pi, ell, threads=threads)
    value = poly.evaluate(shape_bindings(shape, ell))
    if value.denominator != 1:
        raise AssertionError(f"non-integer character value {value}")
    return int(value)
