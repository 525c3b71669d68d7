"""Integer partitions, Young diagrams and multirectangular (Stanley) coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """A partition stored as a non-increasing tuple of positive row lengths.

    The empty tuple is the empty partition.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"row lengths must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"row lengths must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def transpose(self) -> "Partition":
        """Conjugate partition (columns become rows); an involution."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for row in self.parts:
            for j in range(row):
                cols[j] += 1
        return Partition(tuple(cols))

    def dilate(self, s: int) -> "Partition":
        """Scale the diagram by s in both directions."""
        if s < 1:
            raise ValueError(f"dilation factor must be >= 1, got {s}")
        return Partition(tuple(row * s for row in self.parts for _ in range(s)))

    def contains_box(self, row: int, col: int) -> bool:
        """Whether the 1-based box (row, col) lies inside the diagram."""
        return 1 <= row <= len(self.parts) and 1 <= col <= self.parts[row - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


@dataclass(frozen=True)
class MultirectangularShape:
    """Stanley coordinates: p[i] rows of width q[i], stacked widest block at the bottom.

    p and q must have equal length; zero entries are allowed and contribute no
    rows.  q need not be non-increasing for symbolic work, but converting to a
    concrete diagram requires it.
    """

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self) -> None:
        p = tuple(int(x) for x in self.p)
        q = tuple(int(x) for x in self.q)
        if len(p) != len(q):
            raise ValueError(f"p and q must have equal length: {p} vs {q}")
        if any(x < 0 for x in p + q):
            raise ValueError(f"Stanley coordinates must be non-negative: p={p}, q={q}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def ell(self) -> int:
        """Number of rectangles."""
        return len(self.p)

    @property
    def boxes(self) -> int:
        return sum(pi * qi for pi, qi in zip(self.p, self.q))

    def q_non_increasing(self) -> bool:
        """Whether successive positive widths never increase (ignoring empty blocks)."""
        widths = [qi for pi, qi in zip(self.p, self.q) if pi > 0 and qi > 0]
        return all(widths[i] >= widths[i + 1] for i in range(len(widths) - 1))

    def to_diagram(self) -> Partition:
        """The concrete Young diagram: q1 repeated p1 times, then q2 etc."""
        if not self.q_non_increasing():
            raise ValueError(f"invalid Stanley coordinates, q not non-increasing: {self}")
        rows = [qi for pi, qi in zip(self.p, self.q) if qi > 0 for _ in range(pi)]
        return Partition(tuple(rows))

    def __str__(self) -> str:
        return f"p={tuple(self.p)} q={tuple(self.q)}"


def to_diagram(shape: MultirectangularShape) -> Partition:
    """Functional alias for MultirectangularShape.to_diagram."""
    return shape.to_diagram()


def to_multirect(lam: Partition) -> MultirectangularShape:
    """Canonical Stanley coordinates of a diagram.

    q lists the distinct row lengths in decreasing order and p their
    multiplicities, so to_diagram inverts this exactly.
    """
    q: list[int] = []
    p: list[int] = []
    for row in lam.parts:
        if q and q[-1] == row:
            p[-1] += 1
        else:
            q.append(row)
            p.append(1)
    return MultirectangularShape(tuple(p), tuple(q))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first, in lexicographically decreasing order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def rec(remaining: int, cap: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    for parts in rec(n, max_part, []):
        yield Partition(parts)
