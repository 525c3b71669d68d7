from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stanleychar.exactpoly import (
    InconsistentSystemError,
    Poly,
    make_monomial,
    solve_linear_exact,
)


def P(name):
    return Poly.var(name)


def small_polys():
    monos = st.dictionaries(
        st.sampled_from(["p1", "p2", "q1", "s"]),
        st.integers(min_value=1, max_value=3),
        max_size=2,
    )
    term = st.tuples(monos, st.integers(min_value=-5, max_value=5))
    return st.lists(term, max_size=4).map(
        lambda ts: sum((Poly({make_monomial(m): c}) for m, c in ts), Poly.zero())
    )


def test_square_expansion():
    x, y = P("p1"), P("q1")
    assert (x + y) * (x + y) == x * x + 2 * x * y + y * y


def test_additive_identity():
    f = 3 * P("p1") - P("q1")
    assert f + Poly.zero() == f
    assert f + 0 == f


def test_rectangular_ch3_evaluation():
    # p*q^3 + p^3*q + p*q - 3 p^2 q^2 at p=1, q=3 equals 6
    p, q = P("p1"), P("q1")
    f = p * q**3 + p**3 * q + p * q - 3 * p**2 * q**2
    assert f.evaluate({"p1": 1, "q1": 3}) == 6


def test_coefficient():
    f = 2 * P("p1") * P("q1") ** 2 - Fraction(1, 2) * P("s")
    assert f.coefficient({"p1": 1, "q1": 2}) == 2
    assert f.coefficient({"s": 1}) == Fraction(-1, 2)
    assert f.coefficient({"p1": 7}) == 0
    assert Poly.zero().coefficient({"p1": 1}) == 0


def test_homogeneous_component():
    p, q = P("p1"), P("q1")
    f = p * q**3 + p**3 * q + p * q - 3 * p**2 * q**2
    top = f.homogeneous_component(4)
    assert top == p * q**3 + p**3 * q - 3 * p**2 * q**2
    assert f.homogeneous_component(2) == p * q
    # components sum back to f
    total = sum(
        (f.homogeneous_component(d) for d in range(6)), Poly.zero()
    )
    assert total == f


def test_homogeneous_already_homogeneous():
    f = P("p1") * P("q1")
    assert f.homogeneous_component(2) == f


def test_r_weighting():
    f = Poly.var("R4") + Poly.var("R2", 2)
    assert f.homogeneous_component(4) == f


def test_substitute():
    f = P("s") * P("p1") + P("q1")
    assert f.substitute({"s": 1}) == P("p1") + P("q1")
    assert f.substitute({"s": 0, "p1": 5, "q1": 7}) == Poly.const(7)
    g = f.substitute({"p1": P("p1") + P("p2")})
    assert g.coefficient({"s": 1, "p2": 1}) == 1


def test_canonical_rendering():
    f = Poly.var("R6") + 15 * Poly.var("R4") + 5 * Poly.var("R2", 2) + 8 * Poly.var("R2")
    assert str(f) == "R6 + 15*R4 + 5*R2^2 + 8*R2"
    assert str(Poly.zero()) == "0"
    assert str(-P("p1") + 2) == "-p1 + 2"


def test_json_round_trip():
    f = P("p1") ** 2 * P("q1") - Fraction(7, 3) * Poly.var("gamma")
    assert Poly.from_json(f.to_json()) == f


def test_invalid_variable_names():
    with pytest.raises(ValueError):
        Poly.var("x1")
    with pytest.raises(ValueError):
        Poly.var("R1")
    with pytest.raises(ValueError):
        Poly.var("p0")


@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


@given(small_polys(), small_polys())
def test_coefficient_additive(f, g):
    for mono in list(f.monomials()) + list(g.monomials()):
        m = dict(mono)
        assert (f + g).coefficient(m) == f.coefficient(m) + g.coefficient(m)


def test_solve_identity():
    sol = solve_linear_exact([[1, 0], [0, 1]], [3, Fraction(1, 4)])
    assert sol.solution == (3, Fraction(1, 4))
    assert sol.unique and sol.rank == 2


def test_solve_half():
    sol = solve_linear_exact([[2]], [1])
    assert sol.solution == (Fraction(1, 2),)


def test_solve_recovers_full_column_rank():
    a = [[1, 2], [3, 5], [0, 1]]
    x = [Fraction(3, 7), -2]
    b = [sum(Fraction(r[j]) * x[j] for j in range(2)) for r in a]
    sol = solve_linear_exact(a, b)
    assert list(sol.solution) == x
    assert sol.unique


def test_solve_inconsistent():
    with pytest.raises(InconsistentSystemError):
        solve_linear_exact([[1], [1]], [1, 2])


def test_solve_underdetermined_reports_non_unique():
    sol = solve_linear_exact([[1, 1]], [2])
    assert not sol.unique
    assert sol.rank == 1
