import itertools

import pytest

from stanleychar.exactpoly import Poly
from stanleychar.mn_oracle import normalized_character
from stanleychar.shapes import MultirectangularShape, Partition, partitions_of
from stanleychar.stanley import (
    evaluate_character,
    stanley_polynomial,
    stanley_rectangular,
)


def brute_force_rectangular(k):
    """Independent oracle: sum the signed q^cycles(s1) p^cycles(s2) monomials
    with plain itertools, no library permutation code."""

    def cycle_count(images):
        seen, count = set(), 0
        for start in range(1, k + 1):
            if start in seen:
                continue
            count += 1
            x = start
            while x not in seen:
                seen.add(x)
                x = images[x - 1]
        return count

    pi = tuple(range(2, k + 1)) + (1,) if k else ()  # the k-cycle, one-line
    acc = {}
    for s1 in itertools.permutations(range(1, k + 1)):
        inv = [0] * k
        for i, y in enumerate(s1, 1):
            inv[y - 1] = i
        s2 = tuple(inv[pi[x - 1] - 1] for x in range(1, k + 1))
        c1, c2 = cycle_count(s1), cycle_count(s2)
        sign = (-1) ** (k - c1)
        acc[(c2, c1)] = acc.get((c2, c1), 0) + sign
    return Poly(
        {(("p1", pe), ("q1", qe)): c for (pe, qe), c in acc.items() if c}
    )


def test_rectangular_trivial():
    assert stanley_rectangular(Partition((1,))) == Poly.var("p1") * Poly.var("q1")


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_rectangular_against_brute_force(k):
    assert stanley_rectangular(Partition((k,))) == brute_force_rectangular(k)


def test_rectangular_ch2_ch3():
    p, q = Poly.var("p1"), Poly.var("q1")
    assert stanley_rectangular(Partition((2,))) == p * q**2 - p**2 * q
    assert stanley_rectangular(Partition((3,))) == p * q**3 - 3 * p**2 * q**2 + p**3 * q + p * q


def test_ell_one_matches_rectangular():
    for k in range(1, 5):
        for pi in partitions_of(k):
            assert stanley_polynomial(pi, 1) == stanley_rectangular(pi)


def test_empty_partition():
    assert stanley_polynomial(Partition(), 2) == Poly.const(1)


def test_ell_stability():
    for pi in partitions_of(3):
        two = stanley_polynomial(pi, 2)
        assert two.substitute({"p2": 0, "q2": 0}) == stanley_polynomial(pi, 1)


def test_depends_only_on_cycle_type():
    # realize (2,1) with cycles in two different positions
    from stanleychar.perm import Permutation
    from stanleychar.stanley import _coloring_sum
    from stanleychar.perm import enumerate_factorizations

    for target in [
        Permutation.from_cycles([(1, 2)], 3),
        Permutation.from_cycles([(2, 3)], 3),
    ]:
        acc = _coloring_sum(list(enumerate_factorizations(target)), 2)
        assert Poly(acc) == stanley_polynomial(Partition((2, 1)), 2)


@pytest.mark.parametrize("k", range(1, 7))
def test_grading(k):
    pi = Partition((k,))
    poly = stanley_polynomial(pi, 2)
    bound = k + len(pi)
    for mono in poly.monomials():
        degree = sum(e for _, e in mono)
        assert degree <= bound
        assert degree % 2 == bound % 2
    assert poly.total_degree() == k + 1


def test_evaluate_character_examples():
    assert evaluate_character(Partition((2,)), MultirectangularShape((1,), (2,))) == 2
    assert evaluate_character(Partition((3,)), MultirectangularShape((1, 1), (2, 1))) == -3
    # more rows than boxes: the zero branch
    assert evaluate_character(Partition((4,)), MultirectangularShape((1, 1), (2, 1))) == 0


def test_evaluate_character_invalid_shape():
    with pytest.raises(ValueError):
        evaluate_character(Partition((2,)), MultirectangularShape((1, 1), (1, 2)))


def test_threads_do_not_change_result():
    pi = Partition((4,))
    assert stanley_polynomial(pi, 2, threads=3) == stanley_polynomial(pi, 2, threads=1)


def test_oracle_equivalence_small():
    shapes = [
        MultirectangularShape((p1, p2), (q1, q2))
        for p1 in range(3)
        for p2 in range(3)
        for q1 in range(4)
        for q2 in range(q1 + 1)
    ]
    for k in range(1, 5):
        for pi in partitions_of(k):
            for shape in shapes:
                assert evaluate_character(pi, shape) == normalized_character(
                    pi, shape.to_diagram()
                )
