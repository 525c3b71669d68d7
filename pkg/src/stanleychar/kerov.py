"""Free cumulants and Kerov character polynomials.

Free cumulants are read off as top homogeneous components of the character
polynomials, which makes the dilation limit exact: R_j is the degree-j part of
the polynomial for a (j-1)-cycle.  The Kerov polynomial for a k-cycle is found
by exact linear solving: every monomial in R_2..R_{k+1} of weight at most k+1
is expanded in Stanley coordinates and matched against the character
polynomial.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from pathlib import Path

from .exactpoly import InconsistentSystemError, Poly, make_monomial, solve_linear_exact
from .perm import enumerate_factorizations, permutation_from_padded_partition
from .shapes import Partition, to_multirect
from .stanley import shape_bindings, stanley_polynomial

CACHE_SCHEMA_VERSION = 1
CACHE_ENV_VAR = "STANLEYCHAR_CACHE"

# R-monomials are multisets of cumulant indices; weight(R_j) = j.
RMonomial = tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def free_cumulant_poly(j: int, ell: int) -> Poly:
    """The free cumulant R_j in Stanley coordinates with ell rectangles.

    The degree-j homogeneous component of the character polynomial of a
    (j-1)-cycle; dilating the shape by s scales it by exactly s^j.
    """
    if j < 2:
        raise ValueError(f"free cumulants are indexed from 2, got {j}")
    ch = stanley_polynomial(Partition((j - 1,)), ell)
    return ch.homogeneous_component(j)


def free_cumulant_value(j: int, lam: Partition) -> int:
    """The free cumulant R_j evaluated on a concrete diagram."""
    shape = to_multirect(lam)
    ell = max(shape.ell, 1)
    value = free_cumulant_poly(j, ell).evaluate(shape_bindings(shape, ell))
    if value.denominator != 1:
        raise AssertionError(f"non-integer free cumulant R_{j}({lam}) = {value}")
    return int(value)


def r_monomials_up_to_weight(max_weight: int) -> list[RMonomial]:
    """All monomials in R_2, R_3, ... of weight <= max_weight, constant included.

    A monomial is a sorted tuple of (index, exponent) pairs; its weight is the
    sum of index * exponent.
    """
    out: list[RMonomial] = []

    def rec(remaining: int, max_part: int, acc: list[int]) -> None:
        out.append(tuple((j, acc.count(j)) for j in sorted(set(acc))))
        for part in range(min(max_part, remaining), 1, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(max_weight, max_weight, [])
    return out


def r_monomial_weight(mono: RMonomial) -> int:
    return sum(j * e for j, e in mono)


def _r_monomial_poly(mono: RMonomial, ell: int) -> Poly:
    """Expand an R-monomial in Stanley coordinates with ell rectangles."""
    result = Poly.const(1)
    for j, e in mono:
        result = result * free_cumulant_poly(j, ell) ** e
    return result


def _r_monomial_as_variables(mono: RMonomial) -> Poly:
    return Poly({make_monomial({f"R{j}": e for j, e in mono}): 1})


def _default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "stanleychar"


def _cache_path(k: int, cache_dir: str | Path | None) -> Path:
    base = Path(cache_dir) if cache_dir is not None else _default_cache_dir()
    return base / f"K{k}.json"


def _load_cached(k: int, cache_dir: str | Path | None) -> Poly | None:
    path = _cache_path(k, cache_dir)
    try:
        data = json.loads(path.read_text())
        if data.get("schema_version") != CACHE_SCHEMA_VERSION or data.get("k") != k:
            return None
        return Poly.from_json_dict(data["polynomial"])
    except (OSError, ValueError, KeyError, TypeError):
        # Corrupt or missing cache entries are recomputed, never trusted.
        return None


def _store_cached(k: int, poly: Poly, cache_dir: str | Path | None) -> None:
    path = _cache_path(k, cache_dir)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "schema_version": CACHE_SCHEMA_VERSION,
            "k": k,
            "polynomial": poly.to_json_dict(),
        }
        path.write_text(json.dumps(payload))
    except OSError:
        pass  # cache is advisory


def kerov_polynomial(
    k: int, cache_dir: str | Path | None = None, use_cache: bool = True
) -> Poly:
    """The Kerov polynomial K_k expressing the k-cycle character in R_2..R_{k+1}.

    Solved exactly against the Stanley polynomial with ell = k rectangles;
    rank deficiency escalates ell, a non-integer solution is a hard error.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if use_cache:
        cached = _load_cached(k, cache_dir)
        if cached is not None:
            return cached

    basis = r_monomials_up_to_weight(k + 1)
    for ell in range(max(k, 1), max(k, 1) + 3):
        target = stanley_polynomial(Partition((k,)), ell)
        columns = [_r_monomial_poly(mono, ell) for mono in basis]
        stanley_monos = sorted(
            set(target.monomials()).union(*(set(c.monomials()) for c in columns))
        )
        rows = [[col.coefficient(dict(m)) for col in columns] for m in stanley_monos]
        rhs = [target.coefficient(dict(m)) for m in stanley_monos]
        try:
            sol = solve_linear_exact(rows, rhs)
        except InconsistentSystemError as exc:
            raise RuntimeError(
                f"character polynomial for k={k} is not expressible in free "
                f"cumulants at ell={ell}: {exc}"
            ) from exc
        if sol.unique:
            break
    else:
        raise RuntimeError(f"rank-deficient Kerov system for k={k} after escalation")

    residual = target - sum(
        (c * col for c, col in zip(sol.solution, columns)), Poly.zero()
    )
    if residual:
        raise RuntimeError(f"nonzero residual in Kerov solve for k={k}")

    result = Poly.zero()
    for coeff, mono in zip(sol.solution, basis):
        if coeff:
            if coeff.denominator != 1:
                raise RuntimeError(
                    f"non-integer Kerov coefficient {coeff} for k={k}, monomial {mono}"
                )
            result = result + coeff * _r_monomial_as_variables(mono)

    if use_cache:
        _store_cached(k, result, cache_dir)
    return result


def kerov_coefficient(k: int, mono: dict[int, int], **kwargs) -> int:
    """Coefficient of prod R_j^e in K_k, as an integer."""
    poly = kerov_polynomial(k, **kwargs)
    c = poly.coefficient({f"R{j}": e for j, e in mono.items()})
    return int(c)


def evaluate_kerov(k: int, lam: Partition, **kwargs) -> int:
    """K_k evaluated on the free cumulants of a diagram."""
    poly = kerov_polynomial(k, **kwargs)
    indices = {int(name[1:]) for name in poly.variables()}
    values = {f"R{j}": free_cumulant_value(j, lam) for j in indices}
    value = poly.evaluate(values)
    if value.denominator != 1:
        raise AssertionError(f"non-integer Kerov evaluation for k={k}, lam={lam}")
    return int(value)


# ---- combinatorial coefficient counts --------------------------------------


def _cycle_factorizations(k: int):
    """Factorization pairs of the full cycle (1,2,...,k)."""
    full = permutation_from_padded_partition(Partition((k,)) if k else Partition(), k)
    return enumerate_factorizations(full)


def count_linear_pairs(k: int, i: int) -> int:
    """Pairs sigma1 sigma2 = (1..k) with i-1 cycles in sigma1 and 1 in sigma2.

    Counts the linear coefficient of R_i in K_k.
    """
    if not 2 <= i <= k + 1:
        raise ValueError(f"i must satisfy 2 <= i <= k+1, got i={i}, k={k}")
    return sum(
        1
        for sigma1, sigma2 in _cycle_factorizations(k)
        if sigma2.num_cycles() == 1 and sigma1.num_cycles() == i - 1
    )


def _quadratic_candidates(k: int, j1: int, j2: int):
    """Pairs with two sigma2-cycles and j1+j2-2 sigma1-cycles, plus meet counts."""
    for sigma1, sigma2 in _cycle_factorizations(k):
        cycles2 = sigma2.cycles()
        if len(cycles2) != 2:
            continue
        cycles1 = sigma1.cycles()
        if len(cycles1) != j1 + j2 - 2:
            continue
        sets1 = [set(c) for c in cycles1]
        meets = tuple(sum(1 for c in sets1 if c & set(d)) for d in cycles2)
        yield meets


def _check_quadratic_args(k: int, j1: int, j2: int) -> None:
    if j1 == j2:
        raise ValueError(
            f"j1 = j2 = {j1} is not covered by the triple count; use the solver"
        )
    if j1 < 2 or j2 < 2 or k < 1:
        raise ValueError(f"need j1, j2 >= 2 and k >= 1, got j1={j1}, j2={j2}, k={k}")


def count_quadratic_triples(k: int, j1: int, j2: int) -> int:
    """Triples (sigma1, sigma2, f) counting the coefficient of R_j1 R_j2 in K_k.

    sigma1 sigma2 = (1..k); sigma2 has two cycles; sigma1 has j1+j2-2 cycles;
    f labels the two sigma2-cycles bijectively with {1, 2}; the cycle labeled
    m must meet at least j_m cycles of sigma1.
    """
    _check_quadratic_args(k, j1, j2)
    count = 0
    for meets in _quadratic_candidates(k, j1, j2):
        for need in ((j1, j2), (j2, j1)):
            if meets[0] >= need[0] and meets[1] >= need[1]:
                count += 1
    return count


def inclusion_exclusion_breakdown(k: int, j1: int, j2: int) -> tuple[int, int, int]:
    """The three inclusion-exclusion counts behind the quadratic triple count.

    Returns (unrestricted, first_restricted, second_restricted): labeled pairs
    with the right cycle counts, those where the cycle labeled 1 meets at most
    j1-1 sigma1-cycles, and those where the cycle labeled 2 meets at most
    j2-1.  The signed total (first minus the other two) equals
    count_quadratic_triples.
    """
    _check_quadratic_args(k, j1, j2)
    unrestricted = 0
    first_restricted = 0
    second_restricted = 0
    for meets in _quadratic_candidates(k, j1, j2):
        for label1, label2 in ((0, 1), (1, 0)):
            unrestricted += 1
            if meets[label1] <= j1 - 1:
                first_restricted += 1
            if meets[label2] <= j2 - 1:
                second_restricted += 1
    return unrestricted, first_restricted, second_restricted


def count_double_restricted_triples(k: int, j1: int, j2: int) -> int:
    """Triples violating both meet conditions at once; always zero."""
    _check_quadratic_args(k, j1, j2)
    count = 0
    for meets in _quadratic_candidates(k, j1, j2):
        for label1, label2 in ((0, 1), (1, 0)):
            if meets[label1] <= j1 - 1 and meets[label2] <= j2 - 1:
                count += 1
    return count


def quadratic_coefficient_by_formula(f_poly: Poly, j1: int, j2: int) -> int:
    """Quadratic Kerov coefficient read off the two-rectangle polynomial.

    For any f_poly expressible in free cumulants, the coefficient of
    R_j1 R_j2 equals the p1 p2 q1^(j1-1) q2^(j2-1) coefficient minus the
    p1 p2 q2^(j1+j2-2) coefficient.
    """
    _check_quadratic_args(k=1, j1=j1, j2=j2)
    straight = f_poly.coefficient({"p1": 1, "p2": 1, "q1": j1 - 1, "q2": j2 - 1})
    collapsed = f_poly.coefficient({"p1": 1, "p2": 1, "q2": j1 + j2 - 2})
    value = straight - collapsed
    if value.denominator != 1:
        raise AssertionError(f"non-integer quadratic coefficient {value}")
    return int(value)
