"""Permutations of {1..k}: cycle structure, signs and factorization enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .shapes import Partition


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation: images[i-1] is the image of i.

    The degree-0 permutation (empty images) is allowed.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        k = len(images)
        if sorted(images) != list(range(1, k + 1)):
            raise ValueError(f"not a bijection of {{1..{k}}}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_cycles(cls, cycles: list[tuple[int, ...]], degree: int) -> "Permutation":
        """Build a permutation of given degree from disjoint cycles."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} outside {{1..{degree}}}")
                if x in seen:
                    raise ValueError(f"cycles are not disjoint at point {x}")
                seen.add(x)
            for i, x in enumerate(cycle):
                images[x - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: the right factor acts first, x -> self(other(x))."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Canonical cycle decomposition: each cycle starts at its minimum,
        cycles sorted by minimum. Fixed points appear as 1-cycles."""
        seen: set[int] = set()
        cycles: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            cycles.append(tuple(cycle))
        return tuple(cycles)

    def num_cycles(self) -> int:
        return len(self.cycles())

    def cycle_type(self) -> Partition:
        return Partition(tuple(sorted((len(c) for c in self.cycles()), reverse=True)))

    def sign(self) -> int:
        """(-1)^(degree - number of cycles)."""
        return -1 if (self.degree - self.num_cycles()) % 2 else 1

    def __str__(self) -> str:
        if self.degree == 0:
            return "()"
        return "".join(
            "(" + ",".join(str(x) for x in c) + ")" for c in self.cycles()
        )


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Product with the right factor acting first."""
    return a.compose(b)


def enumerate_factorizations(
    pi: Permutation,
) -> Iterator[tuple[Permutation, Permutation]]:
    """All k! pairs (sigma1, sigma2) with sigma1 * sigma2 == pi.

    sigma1 runs over Sym(k) in lexicographic one-line order and sigma2 is
    derived as sigma1^-1 * pi, so the stream is deterministic and free of
    duplicates.
    """
    k = pi.degree
    for images in itertools.permutations(range(1, k + 1)):
        sigma1 = Permutation(images)
        yield sigma1, sigma1.inverse() * pi


def permutation_from_padded_partition(mu: Partition, n: int) -> Permutation:
    """A permutation in Sym(n) with cycle type mu padded by n - |mu| fixed points.

    Cycles occupy consecutive integers starting from 1.
    """
    if mu.size > n:
        raise ValueError(f"partition {mu} does not fit into degree {n}")
    cycles = []
    start = 1
    for part in mu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, n)
