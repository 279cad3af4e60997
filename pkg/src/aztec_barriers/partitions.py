"""Balanced zig/zag partitions of {1, ..., 2k} and their tableau weights.

A tiling's spine pattern splits the 2k spine squares into k zig positions
and k zag positions.  The number of tilings carrying a given pattern factors
into one product weight per side, and each weight counts column-strict
tableaux of a shape read off the positions.  This module owns the partition
and shape types, the exact product weight, and a brute-force tableau
enumerator that serves as the weight's independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class BalancedPartition:
    """A split of {1, ..., 2k} into k zig positions ``a`` and k zag positions ``b``."""

    k: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if len(self.a) != self.k or len(self.b) != self.k:
            raise ValueError("both sides must hold exactly k positions")
        if list(self.a) != sorted(self.a) or list(self.b) != sorted(self.b):
            raise ValueError("positions must be listed in increasing order")
        if sorted(self.a + self.b) != list(range(1, 2 * self.k + 1)):
            raise ValueError("sides must partition {1, ..., 2k}")

    @classmethod
    def from_zigs(cls, zigs: Iterable[int], k: int | None = None) -> "BalancedPartition":
        """Build a partition from its zig side; the zag side is the complement."""
        a = tuple(sorted(zigs))
        if k is None:
            k = len(a)
        members = set(a)
        b = tuple(x for x in range(1, 2 * k + 1) if x not in members)
        return cls(k, a, b)


@dataclass(frozen=True, eq=False)
class Shape:
    """Weakly decreasing row lengths; trailing zeros are kept but ignored by equality."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise ValueError("row lengths must be non-negative")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("row lengths must be weakly decreasing")

    @property
    def rows(self) -> tuple[int, ...]:
        """Positive-length rows only."""
        return tuple(p for p in self.parts if p > 0)

    def box_count(self) -> int:
        return sum(self.parts)

    def __eq__(self, other):
        if isinstance(other, Shape):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Shape{self.parts!r}"


def shape_of_zigs(p: BalancedPartition) -> Shape:
    """Row lengths (a_k - k, ..., a_2 - 2, a_1 - 1) read off the zig positions.

    The zig side is strictly increasing, so the result is weakly decreasing
    and non-negative; it always has exactly k entries, possibly trailing zeros.
    """
    return Shape(tuple(p.a[i] - (i + 1) for i in range(p.k - 1, -1, -1)))


def weight(values: Sequence[int], k: int | None = None) -> int:
    """Number of column-strict tableaux attached to a set of zig positions.

    Computed as the product of (values[j] - values[i]) / (j - i) over all
    index pairs i < j, accumulating numerator and denominator separately as
    big integers; the single division at the end must be exact, and anything
    else signals an arithmetic bug rather than bad input.

    When ``k`` is given the input is additionally checked to be a k-subset of
    {1, ..., 2k}; omit it for position sets drawn from other ranges.
    """
    vals = tuple(values)
    if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
        raise ValueError("positions must be strictly increasing")
    if vals and vals[0] < 1:
        raise ValueError("positions must be at least 1")
    if k is not None:
        if len(vals) != k:
            raise ValueError(f"expected {k} positions, got {len(vals)}")
        if vals and vals[-1] > 2 * k:
            raise ValueError(f"positions must lie in [1, {2 * k}]")
    numerator = 1
    denominator = 1
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            numerator *= vals[j] - vals[i]
            denominator *= j - i
    count, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError("pair-product weight did not divide exactly")
    return count


def _row_lengths(shape: Shape | Sequence[int]) -> tuple[int, ...]:
    if isinstance(shape, Shape):
        return shape.rows
    return Shape(tuple(shape)).rows


def iter_ssyt(shape: Shape | Sequence[int], max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every semistandard filling of ``shape`` with entries in [1, max_entry].

    Rows weakly increase left to right, columns strictly increase top to
    bottom.  Cells are filled in row-major order by backtracking, so the
    stream is deterministic (lexicographic).  Desk-scale oracle; not meant
    for shapes beyond a few dozen boxes.
    """
    rows = _row_lengths(shape)
    if not rows:
        yield ()
        return
    if len(rows) > max_entry:
        return
    grid = [[0] * width for width in rows]
    cells = [(r, c) for r, width in enumerate(rows) for c in range(width)]

    def fill(pos: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if pos == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[pos]
        low = grid[r][c - 1] if c > 0 else 1
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        for value in range(low, max_entry + 1):
            grid[r][c] = value
            yield from fill(pos + 1)

    yield from fill(0)


def ssyt_count(shape: Shape | Sequence[int], max_entry: int) -> int:
    """Exhaustive count of the fillings produced by :func:`iter_ssyt`.

    Returns 0 when the shape has more positive rows than ``max_entry`` allows.
    """
    return sum(1 for _ in iter_ssyt(shape, max_entry))


def enumerate_balanced(
    k: int, fixed_evens: Iterable[int] | None = None
) -> Iterator[BalancedPartition]:
    """Yield every balanced partition of {1, ..., 2k} exactly once.

    Ordered lexicographically by the zig side.  When ``fixed_evens`` is given,
    only partitions whose zig side meets {2, 4, ..., 2k} in exactly that
    subset are produced.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    evens = frozenset(range(2, 2 * k + 1, 2))
    wanted: frozenset[int] | None = None
    if fixed_evens is not None:
        wanted = frozenset(fixed_evens)
        if not wanted <= evens:
            raise ValueError(f"fixed evens must be a subset of {{2, 4, ..., {2 * k}}}")
    for a in combinations(range(1, 2 * k + 1), k):
        if wanted is not None and evens.intersection(a) != wanted:
            continue
        yield BalancedPartition.from_zigs(a, k)
