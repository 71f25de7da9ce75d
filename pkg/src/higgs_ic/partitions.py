"""Integer partitions and arm/leg statistics of their Young diagrams.

Partitions index the terms of the twisted Higgs point-count series; each
cell of a diagram contributes a factor built from its arm and leg lengths.
Enumeration order is fixed (size-major, then reverse-lexicographic within a
size) so that downstream series and cached results are byte-stable.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple


class Cell(NamedTuple):
    """0-based (row, col) position inside a Young diagram."""

    row: int
    col: int


class Partition:
    """Weakly decreasing sequence of positive integers; may be empty."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def cells(self) -> Iterator[Cell]:
        for r, width in enumerate(self.parts):
            for c in range(width):
                yield Cell(r, c)

    def _check(self, cell: Cell) -> None:
        r, c = cell
        if not (0 <= r < len(self.parts) and 0 <= c < self.parts[r]):
            raise ValueError(f"cell {cell} outside diagram of {self}")

    def arm(self, cell: Cell) -> int:
        """Number of cells strictly to the right of `cell` in its row."""
        self._check(cell)
        return self.parts[cell.row] - cell.col - 1

    def leg(self, cell: Cell) -> int:
        """Number of cells strictly below `cell` in its column."""
        self._check(cell)
        return sum(1 for p in self.parts[cell.row + 1:] if p > cell.col)

    def arm_leg_multiset(self) -> list[tuple[int, int]]:
        """(arm, leg) over all cells, in row-major cell order."""
        out = []
        for r, width in enumerate(self.parts):
            below = self.parts[r + 1:]
            for c in range(width):
                leg = sum(1 for p in below if p > c)
                out.append((width - c - 1, leg))
        return out

    def hook(self, cell: Cell) -> int:
        return self.arm(cell) + self.leg(cell) + 1

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1,..,1) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition()
        return

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for k in range(min(cap, remaining), 0, -1):
            prefix.append(k)
            yield from rec(remaining - k, k, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of every size 0..n, size-major then reverse-lex."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for m in range(n + 1):
        yield from partitions_of(m)


def count_partitions(n: int) -> int:
    """Independent partition counter (Euler recurrence-free brute table)."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for cap in range(n + 1):
        table[cap][0] = 1
    for cap in range(1, n + 1):
        for m in range(1, n + 1):
            table[cap][m] = table[cap - 1][m] + (table[cap][m - cap] if m >= cap else 0)
    return table[n][n]
