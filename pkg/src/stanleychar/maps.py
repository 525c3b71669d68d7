"""Bipartite maps on oriented surfaces from factorization pairs.

A pair (sigma1, sigma2) of degree k is drawn as a bipartite graph with k
labeled edges: white vertices are the cycles of sigma1, black vertices the
cycles of sigma2, and faces the cycles of the product sigma1 * sigma2.
Embeddings send white vertices to columns and black vertices to rows of a
Young diagram, each edge landing on the box at their crossing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .perm import Permutation, enumerate_factorizations, permutation_from_padded_partition
from .shapes import Partition


@dataclass(frozen=True)
class BipartiteMap:
    sigma1: Permutation
    sigma2: Permutation

    def __post_init__(self) -> None:
        if self.sigma1.degree != self.sigma2.degree:
            raise ValueError(
                f"degree mismatch: {self.sigma1.degree} vs {self.sigma2.degree}"
            )

    @property
    def degree(self) -> int:
        """Number of edges."""
        return self.sigma1.degree

    @cached_property
    def white_vertices(self) -> tuple[tuple[int, ...], ...]:
        return self.sigma1.cycles()

    @cached_property
    def black_vertices(self) -> tuple[tuple[int, ...], ...]:
        return self.sigma2.cycles()

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return (self.sigma1 * self.sigma2).cycles()

    def components(self) -> list[frozenset[int]]:
        """Orbits of the group generated by sigma1 and sigma2 on the edge labels."""
        parent = list(range(self.degree + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            parent[find(x)] = find(y)

        for x in range(1, self.degree + 1):
            union(x, self.sigma1(x))
            union(x, self.sigma2(x))
        groups: dict[int, set[int]] = {}
        for x in range(1, self.degree + 1):
            groups.setdefault(find(x), set()).add(x)
        return [frozenset(g) for g in sorted(groups.values(), key=min)]

    def euler_characteristic(self) -> int:
        """Vertices - edges + faces, summed over connected components."""
        return (
            len(self.white_vertices)
            + len(self.black_vertices)
            + len(self.faces)
            - self.degree
        )

    def genus_per_component(self) -> list[int]:
        """Genus of each connected component, from chi = 2 - 2g."""
        genera = []
        for comp in self.components():
            whites = sum(1 for c in self.white_vertices if comp & set(c))
            blacks = sum(1 for c in self.black_vertices if comp & set(c))
            faces = sum(1 for c in self.faces if comp & set(c))
            chi = whites + blacks + faces - len(comp)
            if chi % 2 or chi > 2:
                raise AssertionError(f"impossible Euler characteristic {chi}")
            genera.append((2 - chi) // 2)
        return genera

    def to_dot(self) -> str:
        """Plain DOT export of the incidence structure (no layout guarantees)."""
        lines = ["graph bipartite_map {"]
        for i, cycle in enumerate(self.white_vertices):
            label = ",".join(str(x) for x in cycle)
            lines.append(f'  w{i} [shape=circle, label="({label})"];')
        for i, cycle in enumerate(self.black_vertices):
            label = ",".join(str(x) for x in cycle)
            lines.append(f'  b{i} [shape=circle, style=filled, label="({label})"];')
        for edge in range(1, self.degree + 1):
            w = next(i for i, c in enumerate(self.white_vertices) if edge in c)
            b = next(i for i, c in enumerate(self.black_vertices) if edge in c)
            lines.append(f'  w{w} -- b{b} [label="{edge}"];')
        lines.append("}")
        return "\n".join(lines)


def build_map(sigma1: Permutation, sigma2: Permutation) -> BipartiteMap:
    return BipartiteMap(sigma1, sigma2)


def count_embeddings(m: BipartiteMap, lam: Partition) -> int:
    """Number of incidence-preserving embeddings of the map into lam.

    Black vertices are assigned rows directly; each white vertex then has one
    column choice per column reaching all its incident rows, i.e. the minimum
    incident row length.  Assignments need not be injective.
    """
    if m.degree == 0:
        return 1
    rows = lam.parts
    if not rows:
        return 0
    whites = [set(c) for c in m.white_vertices]
    blacks = [set(c) for c in m.black_vertices]
    white_blacks = [
        [j for j, b in enumerate(blacks) if w & b] for w in whites
    ]
    total = 0
    for assignment in itertools.product(range(len(rows)), repeat=len(blacks)):
        count = 1
        for incident in white_blacks:
            count *= min(rows[assignment[j]] for j in incident)
            if count == 0:
                break
        total += count
    return total


def signed_embedding_sum(pi: Partition, lam: Partition) -> int:
    """Sum of sign(sigma1) * embeddings over all factorizations of pi.

    Equals the normalized character of pi on lam.
    """
    full = permutation_from_padded_partition(pi, pi.size)
    return sum(
        sigma1.sign() * count_embeddings(BipartiteMap(sigma1, sigma2), lam)
        for sigma1, sigma2 in enumerate_factorizations(full)
    )
