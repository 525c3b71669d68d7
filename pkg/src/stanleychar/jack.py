"""The two-rectangle deformed character for a 3-cycle, as embedded data.

The one-parameter deformation (variable gamma) specializes at gamma = 0 to
the ordinary two-rectangle character polynomial of a 3-cycle, which makes it
a useful cross-check fixture.
"""

from __future__ import annotations

from .exactpoly import Poly

_CH3_GAMMA_TERMS: list[tuple[int, dict[str, int]]] = [
    (1, {"p1": 3, "q1": 1}),
    (-3, {"p1": 2, "q1": 2}),
    (1, {"p1": 1, "q1": 3}),
    (3, {"p1": 2, "p2": 1, "q2": 1}),
    (3, {"p1": 1, "p2": 2, "q2": 1}),
    (1, {"p2": 3, "q2": 1}),
    (-3, {"p1": 1, "p2": 1, "q1": 1, "q2": 1}),
    (-3, {"p1": 1, "p2": 1, "q2": 2}),
    (-3, {"p2": 2, "q2": 2}),
    (1, {"p2": 1, "q2": 3}),
    (-3, {"p1": 2, "q1": 1, "gamma": 1}),
    (3, {"p1": 1, "q1": 2, "gamma": 1}),
    (-6, {"p1": 1, "p2": 1, "q2": 1, "gamma": 1}),
    (-3, {"p2": 2, "q2": 1, "gamma": 1}),
    (3, {"p2": 1, "q2": 2, "gamma": 1}),
    (2, {"p1": 1, "q1": 1, "gamma": 2}),
    (2, {"p2": 1, "q2": 1, "gamma": 2}),
    (1, {"p1": 1, "q1": 1}),
    (1, {"p2": 1, "q2": 1}),
]


def jack_fixture() -> Poly:
    """The 19-term deformed character polynomial in p1, p2, q1, q2, gamma."""
    return Poly((tuple(exps.items()), coeff) for coeff, exps in _CH3_GAMMA_TERMS)
