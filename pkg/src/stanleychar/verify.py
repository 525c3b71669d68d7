"""Cross-verification suites: every identity the library implements, re-checked
at desk scale against the Murnaghan-Nakayama oracle and brute-force counts."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from . import kerov, maps, mn_oracle, stanley
from .exactpoly import Poly
from .jack import jack_fixture
from .perm import Permutation, enumerate_factorizations
from .shapes import MultirectangularShape, Partition, partitions_of, to_multirect


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = "" if self.ok else f"  {json.dumps(self.detail, sort_keys=True)}"
        return f"{status} {self.name}{suffix}"


def _compare(name: str, got, expected) -> CheckResult:
    return CheckResult(name, got == expected, {"got": str(got), "expected": str(expected)})


# ---- fixtures ---------------------------------------------------------------

EQ1_COEFFICIENTS = [
    ({"p1": 5, "q1": 1}, 1),
    ({"p1": 4, "q1": 2}, -10),
    ({"p1": 3, "q1": 3}, 20),
    ({"p1": 2, "q1": 4}, -10),
    ({"p1": 1, "q1": 5}, 1),
    ({"p1": 3, "q1": 1}, 15),
    ({"p1": 2, "q1": 2}, -40),
    ({"p1": 1, "q1": 3}, 15),
    ({"p1": 1, "q1": 1}, 8),
    ({"p1": 1, "p2": 1, "p3": 1, "q1": 1, "q2": 1, "q3": 1}, 25),
]

KEROV_FIXTURES = {
    1: {(2,): 1},
    2: {(3,): 1},
    3: {(4,): 1, (2,): 1},
    4: {(5,): 1, (3,): 5},
    5: {(6,): 1, (4,): 15, (2, 2): 5, (2,): 8},
}


def _kerov_fixture_poly(k: int) -> Poly:
    terms = {}
    for indices, coeff in KEROV_FIXTURES[k].items():
        exps: dict[str, int] = {}
        for j in indices:
            exps[f"R{j}"] = exps.get(f"R{j}", 0) + 1
        terms[tuple(exps.items())] = coeff
    return Poly(terms)


# ---- suites -----------------------------------------------------------------


def suite_eq1(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Displayed three-rectangle coefficients for the 5-cycle character."""
    poly = stanley.stanley_polynomial(Partition((5,)), 3, threads=threads)
    results = []
    for exps, expected in EQ1_COEFFICIENTS:
        mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in sorted(exps.items()))
        results.append(_compare(f"eq1 coefficient [{mono}]", poly.coefficient(exps), expected))
    return results


def suite_kerov(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Displayed Kerov polynomials K_1..K_5, term for term."""
    return [
        _compare(f"kerov K_{k}", kerov.kerov_polynomial(k), _kerov_fixture_poly(k))
        for k in sorted(KEROV_FIXTURES)
    ]


def _small_shapes() -> list[MultirectangularShape]:
    shapes = []
    for p1, p2 in itertools.product(range(4), repeat=2):
        for q1 in range(4):
            for q2 in range(q1 + 1):
                shapes.append(MultirectangularShape((p1, p2), (q1, q2)))
    return shapes


def suite_oracle(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Factorization-sum character values against the Murnaghan-Nakayama rule."""
    shapes = _small_shapes()
    results = []
    for k in range(1, kmax + 1):
        mismatch: dict | None = None
        checked = 0
        for pi in partitions_of(k):
            poly = stanley.stanley_polynomial(pi, 2, threads=threads)
            for shape in shapes:
                got = poly.evaluate(stanley.shape_bindings(shape, 2))
                expected = mn_oracle.normalized_character(pi, shape.to_diagram())
                checked += 1
                if got != expected:
                    mismatch = {
                        "pi": str(pi),
                        "shape": str(shape),
                        "got": str(got),
                        "expected": expected,
                    }
                    break
            if mismatch:
                break
        results.append(
            CheckResult(
                f"oracle equivalence k={k} ({checked} comparisons)",
                mismatch is None,
                mismatch or {},
            )
        )
    return results


def suite_linear(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Linear Kerov coefficients: pair counts vs solver vs rectangular terms."""
    results = []
    for k in range(1, kmax + 1):
        kk = kerov.kerov_polynomial(k)
        rect = stanley.stanley_rectangular(Partition((k,)))
        mismatch = None
        for i in range(2, k + 2):
            pairs = kerov.count_linear_pairs(k, i)
            solver = kk.coefficient({f"R{i}": 1})
            coeff = rect.coefficient({"p1": 1, "q1": i - 1})
            if not pairs == solver == coeff:
                mismatch = {"i": i, "pairs": pairs, "solver": str(solver), "rect": str(coeff)}
                break
        results.append(CheckResult(f"linear coefficients k={k}", mismatch is None, mismatch or {}))
    return results


def suite_quadratic(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Quadratic Kerov coefficients: triple counts, coefficient formula, solver,
    and the inclusion-exclusion breakdown."""
    results = []
    for k in range(1, kmax + 1):
        ch2 = stanley.stanley_polynomial(Partition((k,)), 2, threads=threads)
        kk = kerov.kerov_polynomial(k)
        mismatch = None
        for j1 in range(2, k + 2):
            for j2 in range(j1 + 1, k + 2 - j1):
                triples = kerov.count_quadratic_triples(k, j1, j2)
                formula = kerov.quadratic_coefficient_by_formula(ch2, j1, j2)
                solver = kk.coefficient({f"R{j1}": 1, f"R{j2}": 1})
                unres, first, second = kerov.inclusion_exclusion_breakdown(k, j1, j2)
                double = kerov.count_double_restricted_triples(k, j1, j2)
                span = j1 + j2 - 2
                eq12 = -sum(
                    ch2.coefficient({"p1": 1, "p2": 1, "q1": span - b, "q2": b})
                    for b in range(1, span + 1)
                )
                eq13 = sum(
                    ch2.coefficient({"p1": 1, "p2": 1, "q1": span - a, "q2": a})
                    for a in range(1, j1)
                )
                eq14 = sum(
                    ch2.coefficient({"p1": 1, "p2": 1, "q1": span - b, "q2": b})
                    for b in range(1, j2)
                )
                # The signed second and third summands (carrying the explicit -1)
                # are what the coefficient sums eq13 and eq14 reproduce.
                checks = {
                    "triples=formula": triples == formula,
                    "triples=solver": triples == solver,
                    "signed total": unres - first - second == triples,
                    "unrestricted=eq12": unres == eq12,
                    "-first=eq13": -first == eq13,
                    "-second=eq14": -second == eq14,
                    "double restriction vanishes": double == 0,
                }
                if not all(checks.values()):
                    mismatch = {
                        "j1": j1,
                        "j2": j2,
                        "failed": [name for name, ok in checks.items() if not ok],
                        "triples": triples,
                        "formula": formula,
                        "solver": str(solver),
                        "breakdown": [unres, first, second],
                        "eq12_14": [str(eq12), str(eq13), str(eq14)],
                    }
                    break
            if mismatch:
                break
        results.append(CheckResult(f"quadratic coefficients k={k}", mismatch is None, mismatch or {}))
    return results


def suite_swap(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Swap symmetry of p-square-free coefficients with positive q-exponents."""
    results = []
    for k in range(1, kmax + 1):
        ch2 = stanley.stanley_polynomial(Partition((k,)), 2, threads=threads)
        mismatch = None
        for j1 in range(2, k + 2):
            for j2 in range(2, k + 2):
                a = ch2.coefficient({"p1": 1, "p2": 1, "q1": j1 - 1, "q2": j2 - 1})
                b = ch2.coefficient({"p1": 1, "p2": 1, "q1": j2 - 1, "q2": j1 - 1})
                if a != b:
                    mismatch = {"j1": j1, "j2": j2, "got": str(a), "swapped": str(b)}
                    break
            if mismatch:
                break
        results.append(CheckResult(f"swap symmetry k={k}", mismatch is None, mismatch or {}))
    return results


def suite_cumulant(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Leading structure of free cumulants on one and two rectangles."""
    results = []
    for k in range(1, kmax + 1):
        r1 = kerov.free_cumulant_poly(k + 1, 1)
        mismatch = None
        if r1.coefficient({"p1": 1, "q1": k}) != 1:
            mismatch = {"which": "unit p q^k coefficient", "got": str(r1.coefficient({"p1": 1, "q1": k}))}
        else:
            for mono in r1.monomials():
                exps = dict(mono)
                if exps != {"p1": 1, "q1": k} and exps.get("p1", 0) < 2:
                    mismatch = {"which": "term not divisible by p^2", "mono": exps}
                    break
        results.append(CheckResult(f"cumulant single-rectangle k={k}", mismatch is None, mismatch or {}))

        r2 = kerov.free_cumulant_poly(k + 1, 2)
        mismatch = None
        for j1 in range(1, k + 1):
            j2 = k + 1 - j1
            if j2 < 2:
                continue
            exps = {"p1": 1, "p2": 1, "q2": j2 - 1}
            if j1 > 1:
                exps["q1"] = j1 - 1
            got = r2.coefficient(exps)
            if got != -k:
                mismatch = {"j1": j1, "j2": j2, "got": str(got), "expected": -k}
                break
        results.append(CheckResult(f"cumulant cross-term k={k}", mismatch is None, mismatch or {}))
    return results


def suite_dilation(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Exact dilation behavior: the character of a dilated diagram is a
    polynomial in the scale whose top coefficient is the free cumulant."""
    diagrams = [lam for n in range(0, 7) for lam in partitions_of(n)]
    results = []
    for k in range(1, min(kmax, 5) + 1):
        mismatch = None
        for lam in diagrams:
            shape = to_multirect(lam)
            ell = max(shape.ell, 1)
            poly = stanley.stanley_polynomial(Partition((k,)), ell, threads=threads)
            bindings = {
                name: Poly.var("s") * value
                for name, value in stanley.shape_bindings(shape, ell).items()
            }
            s_poly = poly.substitute(bindings)
            top = s_poly.coefficient({"s": k + 1})
            expected = kerov.free_cumulant_value(k + 1, lam)
            if s_poly.total_degree() > k + 1 or top != expected:
                mismatch = {
                    "lam": str(lam),
                    "degree": s_poly.total_degree(),
                    "top": str(top),
                    "expected": expected,
                }
                break
        results.append(CheckResult(f"dilation limit k={k}", mismatch is None, mismatch or {}))
    return results


def suite_maps(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Map combinatorics: the torus fixture, the signed embedding sum, and the
    planar/minimal factorization correspondence."""
    results = []

    sigma1 = Permutation.from_cycles([(1, 5, 4, 2), (3,)], 5)
    sigma2 = Permutation.from_cycles([(2, 3, 5), (1, 4)], 5)
    torus = maps.build_map(sigma1, sigma2)
    fixture_ok = (
        (sigma1 * sigma2) == Permutation.from_cycles([(1, 2, 3, 4, 5)], 5)
        and torus.euler_characteristic() == 0
        and torus.genus_per_component() == [1]
    )
    results.append(
        CheckResult(
            "maps torus fixture",
            fixture_ok,
            {} if fixture_ok else {"chi": torus.euler_characteristic()},
        )
    )

    diagrams = [lam for n in range(0, 9) for lam in partitions_of(n)]
    for k in range(1, min(kmax, 4) + 1):
        mismatch = None
        for pi in partitions_of(k):
            for lam in diagrams:
                got = maps.signed_embedding_sum(pi, lam)
                expected = mn_oracle.normalized_character(pi, lam)
                if got != expected:
                    mismatch = {"pi": str(pi), "lam": str(lam), "got": got, "expected": expected}
                    break
            if mismatch:
                break
        results.append(CheckResult(f"maps embedding sum k={k}", mismatch is None, mismatch or {}))

    for k in range(1, kmax + 1):
        full = Permutation.from_cycles([tuple(range(1, k + 1))], k)
        mismatch = None
        for s1, s2 in enumerate_factorizations(full):
            m = maps.build_map(s1, s2)
            minimal = s1.num_cycles() + s2.num_cycles() == k + 1
            components = m.components()
            planar = m.genus_per_component() == [0]
            if len(components) != 1 or minimal != planar:
                mismatch = {
                    "sigma1": str(s1),
                    "components": len(components),
                    "minimal": minimal,
                    "planar": planar,
                }
                break
        results.append(CheckResult(f"maps planar=minimal k={k}", mismatch is None, mismatch or {}))
    return results


def suite_positivity(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """Every Kerov coefficient is a non-negative integer."""
    results = []
    for k in range(1, kmax + 1):
        poly = kerov.kerov_polynomial(k)
        bad = [
            dict(m)
            for m, c in poly.terms.items()
            if c.denominator != 1 or c < 0
        ]
        results.append(CheckResult(f"positivity K_{k}", not bad, {"bad": bad} if bad else {}))
    return results


def suite_jack(kmax: int = 6, threads: int = 1) -> list[CheckResult]:
    """The embedded deformed 3-cycle polynomial and its gamma = 0 limit."""
    fixture = jack_fixture()
    results = []
    gamma0 = fixture.substitute({"gamma": 0})
    results.append(
        _compare(
            "jack gamma=0 specialization",
            gamma0,
            stanley.stanley_polynomial(Partition((3,)), 2),
        )
    )
    gamma2_rows = [
        fixture.coefficient({"p1": 1, "q1": 1, "gamma": 2}),
        fixture.coefficient({"p2": 1, "q2": 1, "gamma": 2}),
    ]
    results.append(_compare("jack gamma^2 row", gamma2_rows, [2, 2]))
    gamma_rows = [
        fixture.coefficient({"p1": 2, "q1": 1, "gamma": 1}),
        fixture.coefficient({"p1": 1, "q1": 2, "gamma": 1}),
        fixture.coefficient({"p1": 1, "p2": 1, "q2": 1, "gamma": 1}),
        fixture.coefficient({"p2": 2, "q2": 1, "gamma": 1}),
        fixture.coefficient({"p2": 1, "q2": 2, "gamma": 1}),
    ]
    results.append(_compare("jack gamma row", gamma_rows, [-3, 3, -6, -3, 3]))
    return results


SUITES = {
    "eq1": suite_eq1,
    "kerov": suite_kerov,
    "oracle": suite_oracle,
    "linear": suite_linear,
    "quadratic": suite_quadratic,
    "swap": suite_swap,
    "cumulant": suite_cumulant,
    "dilation": suite_dilation,
    "maps": suite_maps,
    "positivity": suite_positivity,
    "jack-fixture": suite_jack,
}


def run_suites(
    names: list[str], kmax: int = 6, threads: int = 1
) -> tuple[str, bool, dict | None]:
    """Run the named suites and render a deterministic report.

    Returns (report text, all passed, machine-readable first mismatch or None).
    """
    lines: list[str] = []
    passed = 0
    total = 0
    first_failure: dict | None = None
    for name in names:
        for result in SUITES[name](kmax=kmax, threads=threads):
            lines.append(result.line())
            total += 1
            if result.ok:
                passed += 1
            elif first_failure is None:
                first_failure = {"suite": name, "check": result.name, **result.detail}
    lines.append(f"passed {passed}/{total}")
    return "\n".join(lines), passed == total, first_failure


def resolve_suites(name: str) -> list[str]:
    if name == "all":
        return list(SUITES)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {['all'] + list(SUITES)}")
    return [name]
