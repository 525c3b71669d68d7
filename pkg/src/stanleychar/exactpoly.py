"""Sparse multivariate polynomials with exact rational coefficients.

Indeterminates are named strings: "p1", "p2", ... and "q1", "q2", ... for
Stanley coordinates (index >= 1), "R2", "R3", ... for free cumulants
(index >= 2), plus the unindexed "s" and "gamma".  A monomial is stored as a
tuple of (name, exponent) pairs sorted in the canonical variable order
p < q < R < s < gamma with ascending index.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction]

_VAR_RE = re.compile(r"^(p|q|R)([0-9]+)$")
_FAMILY_RANK = {"p": 0, "q": 1, "R": 2}


def var_key(name: str) -> tuple[int, int]:
    """Canonical sort key for indeterminate names; validates the name."""
    if name == "s":
        return (3, 0)
    if name == "gamma":
        return (4, 0)
    m = _VAR_RE.match(name)
    if m is None:
        raise ValueError(f"unknown indeterminate {name!r}")
    family, index = m.group(1), int(m.group(2))
    if family in ("p", "q") and index < 1:
        raise ValueError(f"{family}-variables are indexed from 1: {name!r}")
    if family == "R" and index < 2:
        raise ValueError(f"R-variables are indexed from 2: {name!r}")
    return (_FAMILY_RANK[family], index)


def make_monomial(exps: Mapping[str, int]) -> Monomial:
    """Canonical monomial from a name -> exponent mapping; drops zero exponents."""
    items = []
    for name, e in exps.items():
        var_key(name)
        e = int(e)
        if e < 0:
            raise ValueError(f"negative exponent for {name}")
        if e:
            items.append((name, e))
    return tuple(sorted(items, key=lambda t: var_key(t[0])))


def monomial_weight(mono: Monomial, s_weight: int = 0, gamma_weight: int = 0) -> int:
    """Weighted degree: p and q count 1, R(j) counts j, s and gamma as requested."""
    total = 0
    for name, e in mono:
        if name == "s":
            total += s_weight * e
        elif name == "gamma":
            total += gamma_weight * e
        elif name[0] == "R":
            total += int(name[1:]) * e
        else:
            total += e
    return total


def _mono_sort_key(mono: Monomial) -> tuple:
    # Canonical rendering order: weighted degree descending (R graded by index,
    # s and gamma counting 1), then fewer factors first, then lexicographic
    # with larger exponents on earlier variables first.
    exp_degree = sum(e for _, e in mono)
    lex = tuple((var_key(name), -e) for name, e in mono)
    return (-monomial_weight(mono, s_weight=1, gamma_weight=1), exp_degree, lex)


class Poly:
    """Immutable sparse polynomial over the named indeterminates.

    Coefficients are exact rationals; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(
        self,
        terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] | None = None,
    ) -> None:
        clean: dict[Monomial, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coeff in items:
                mono = make_monomial(dict(mono))
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                acc = clean.get(mono, Fraction(0)) + coeff
                if acc:
                    clean[mono] = acc
                else:
                    clean.pop(mono, None)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Poly is immutable")

    # ---- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Poly":
        return cls({make_monomial({name: exp}): 1})

    # ---- basic queries ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def monomials(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def coefficient(self, mono: Mapping[str, int] | Monomial) -> Fraction:
        """Exact coefficient of a monomial, 0 if absent."""
        return self.terms.get(make_monomial(dict(mono)), Fraction(0))

    def variables(self) -> set[str]:
        return {name for mono in self.terms for name, _ in mono}

    def total_degree(self) -> int:
        """Maximal exponent-sum over the terms (0 for the zero polynomial)."""
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; error otherwise."""
        if any(mono for mono in self.terms):
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((), Fraction(0))

    # ---- ring arithmetic --------------------------------------------------

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            s = acc.get(mono, Fraction(0)) + c
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
        out = Poly.__new__(Poly)
        object.__setattr__(out, "terms", acc)
        return out

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        out = Poly.__new__(Poly)
        object.__setattr__(out, "terms", {m: -c for m, c in self.terms.items()})
        return out

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly.zero()
            out = Poly.__new__(Poly)
            object.__setattr__(out, "terms", {m: v * c for m, v in self.terms.items()})
            return out
        if not isinstance(other, Poly):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                combined = dict(d1)
                for name, e in m2:
                    combined[name] = combined.get(name, 0) + e
                mono = tuple(sorted(combined.items(), key=lambda t: var_key(t[0])))
                s = acc.get(mono, Fraction(0)) + c1 * c2
                if s:
                    acc[mono] = s
                else:
                    acc.pop(mono, None)
        out = Poly.__new__(Poly)
        object.__setattr__(out, "terms", acc)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # ---- graded structure -------------------------------------------------

    def homogeneous_component(
        self, d: int, s_weight: int = 0, gamma_weight: int = 0
    ) -> "Poly":
        """Sum of the terms of weighted degree exactly d."""
        return Poly(
            {
                m: c
                for m, c in self.terms.items()
                if monomial_weight(m, s_weight, gamma_weight) == d
            }
        )

    # ---- substitution and evaluation --------------------------------------

    def substitute(self, bindings: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Simultaneous substitution with exact expansion."""
        polys = {
            name: v if isinstance(v, Poly) else Poly.const(v)
            for name, v in bindings.items()
        }
        powers: dict[tuple[str, int], Poly] = {}
        result = Poly.zero()
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for name, e in mono:
                if name in polys:
                    key = (name, e)
                    if key not in powers:
                        powers[key] = polys[name] ** e
                    factor = powers[key]
                else:
                    factor = Poly.var(name, e)
                term = term * factor
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Full numeric evaluation; every variable must be bound."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            prod = coeff
            for name, e in mono:
                prod *= Fraction(values[name]) ** e
            total += prod
        return total

    # ---- rendering and serialization --------------------------------------

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.terms, key=_mono_sort_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for i, mono in enumerate(self.sorted_monomials()):
            c = self.terms[mono]
            mag = abs(c)
            factors: list[str] = []
            if mag != 1 or not mono:
                factors.append(str(mag))
            for name, e in mono:
                factors.append(name if e == 1 else f"{name}^{e}")
            body = "*".join(factors)
            if i == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        """Repo-wide JSON polynomial schema, terms in canonical order."""
        return {
            "terms": [
                {"coeff": str(self.terms[m]), "exps": {name: e for name, e in m}}
                for m in self.sorted_monomials()
            ]
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Poly":
        terms = []
        for entry in data["terms"]:
            terms.append((make_monomial(entry["exps"]), Fraction(entry["coeff"])))
        return cls(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls.from_json_dict(json.loads(text))


# ---- exact linear algebra --------------------------------------------------


class InconsistentSystemError(ValueError):
    """Raised when a linear system has no exact solution."""


@dataclass(frozen=True)
class LinearSolution:
    """A particular exact solution with rank information."""

    solution: tuple[Fraction, ...]
    rank: int
    unique: bool


def solve_linear_exact(
    rows: Iterable[Iterable[Scalar]], rhs: Iterable[Scalar]
) -> LinearSolution:
    """Solve A x = b exactly over the rationals by Gaussian elimination.

    Returns a particular solution (free variables set to 0), the rank of A and
    whether the solution is unique.  An inconsistent system raises
    InconsistentSystemError, never a least-squares answer.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    b = [Fraction(x) for x in rhs]
    m = len(a)
    if len(b) != m:
        raise ValueError("matrix and right-hand side sizes differ")
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")

    pivot_cols: list[int] = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if a[r][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        b[row], b[pivot] = b[pivot], b[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        b[row] *= inv
        for r in range(m):
            if r != row and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
                b[r] -= factor * b[row]
        pivot_cols.append(col)
        row += 1
        if row == m:
            break

    rank = len(pivot_cols)
    for r in range(rank, m):
        if b[r]:
            raise InconsistentSystemError(f"inconsistent system at row {r}")

    solution = [Fraction(0)] * n
    for r, col in enumerate(pivot_cols):
        solution[col] = b[r]
    return LinearSolution(tuple(solution), rank, rank == n)
