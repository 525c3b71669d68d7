import pytest

from stanleychar.maps import build_map, count_embeddings, signed_embedding_sum
from stanleychar.mn_oracle import normalized_character
from stanleychar.perm import Permutation, enumerate_factorizations
from stanleychar.shapes import Partition, partitions_of, to_multirect
from stanleychar.stanley import stanley_polynomial, shape_bindings


def torus_map():
    sigma1 = Permutation.from_cycles([(1, 5, 4, 2), (3,)], 5)
    sigma2 = Permutation.from_cycles([(2, 3, 5), (1, 4)], 5)
    return build_map(sigma1, sigma2)


def test_torus_fixture_counts():
    m = torus_map()
    assert len(m.white_vertices) == 2
    assert len(m.black_vertices) == 2
    assert len(m.faces) == 1
    assert m.euler_characteristic() == 0
    assert m.genus_per_component() == [1]


def test_sphere():
    k = 5
    m = build_map(Permutation.identity(k), Permutation.from_cycles([tuple(range(1, k + 1))], k))
    assert len(m.white_vertices) == k
    assert len(m.black_vertices) == 1
    assert len(m.faces) == 1
    assert m.euler_characteristic() == 2
    assert m.genus_per_component() == [0]


def test_single_edge():
    m = build_map(Permutation.identity(1), Permutation.identity(1))
    assert len(m.white_vertices) == len(m.black_vertices) == len(m.faces) == 1
    assert m.euler_characteristic() == 2


def test_degree_mismatch():
    with pytest.raises(ValueError):
        build_map(Permutation.identity(2), Permutation.identity(3))


def test_sym3_euler_distribution():
    pi = Permutation.from_cycles([(1, 2, 3)], 3)
    chis = [
        build_map(s1, s2).euler_characteristic()
        for s1, s2 in enumerate_factorizations(pi)
    ]
    assert sorted(chis) == [0, 2, 2, 2, 2, 2]


def test_single_edge_embeddings():
    m = build_map(Permutation.identity(1), Permutation.identity(1))
    assert count_embeddings(m, Partition((1,))) == 1
    assert count_embeddings(m, Partition((3, 1))) == 4
    assert count_embeddings(m, Partition()) == 0


def test_torus_embeddings_contains_figure_assignment():
    # the documented embedding sends both black vertices into (3,1):
    # the 3-cycle to the long row, the 2-cycle to the short one; counting by
    # hand over all 4 row assignments gives 3*3 + 3*1 + 1*... enumerate instead
    m = torus_map()
    total = count_embeddings(m, Partition((3, 1)))
    # independent brute force over boxes per edge
    lam = Partition((3, 1))
    boxes = [(r, c) for r in (1, 2) for c in range(1, lam[r - 1] + 1)]
    count = 0
    for b1 in (1, 2):
        for b2 in (1, 2):
            rows = {m.black_vertices[0]: b1, m.black_vertices[1]: b2}
            for c1 in range(1, lam[0] + 1):
                for c2 in range(1, lam[0] + 1):
                    cols = {m.white_vertices[0]: c1, m.white_vertices[1]: c2}
                    ok = True
                    for edge in range(1, 6):
                        black = next(v for v in m.black_vertices if edge in v)
                        white = next(v for v in m.white_vertices if edge in v)
                        if (rows[black], cols[white]) not in boxes:
                            ok = False
                            break
                    if ok:
                        count += 1
    assert total == count
    assert total > 0


def test_embeddings_match_coloring_sum():
    # for a multirectangular diagram the embedding count equals the coloring
    # sum of the character formula, pair by pair
    diagrams = [lam for n in range(0, 9) for lam in partitions_of(n)]
    for k in (1, 2, 3):
        full = Permutation.from_cycles([tuple(range(1, k + 1))], k)
        for s1, s2 in enumerate_factorizations(full):
            m = build_map(s1, s2)
            for lam in diagrams[:30]:
                shape = to_multirect(lam)
                ell = max(shape.ell, 1)
                bindings = shape_bindings(shape, ell)
                import itertools

                cycles1 = [set(c) for c in m.white_vertices]
                cycles2 = [set(c) for c in m.black_vertices]
                total = 0
                for f2 in itertools.product(range(1, ell + 1), repeat=len(cycles2)):
                    prod = 1
                    for d, color in zip(cycles2, f2):
                        prod *= bindings[f"p{color}"]
                    for c in cycles1:
                        color = max(f2[j] for j, d in enumerate(cycles2) if c & d)
                        prod *= bindings[f"q{color}"]
                    total += prod
                assert count_embeddings(m, lam) == total


def test_signed_embedding_sum_examples():
    assert signed_embedding_sum(Partition((3,)), Partition((2, 1))) == -3
    assert signed_embedding_sum(Partition((4,)), Partition((2, 1))) == 0
    for lam in partitions_of(5):
        assert signed_embedding_sum(Partition((1,)), lam) == 5


@pytest.mark.parametrize("k", [1, 2, 3])
def test_signed_embedding_sum_is_character(k):
    diagrams = [lam for n in range(0, 7) for lam in partitions_of(n)]
    for pi in partitions_of(k):
        for lam in diagrams:
            assert signed_embedding_sum(pi, lam) == normalized_character(pi, lam)


def test_connectivity_for_cycles():
    for k in range(1, 6):
        full = Permutation.from_cycles([tuple(range(1, k + 1))], k)
        for s1, s2 in enumerate_factorizations(full):
            assert len(build_map(s1, s2).components()) == 1


def test_dot_export():
    dot = torus_map().to_dot()
    assert dot.startswith("graph bipartite_map {")
    assert dot.count(" -- ") == 5
    assert '"(1,5,4,2)"' in dot
