"""Aztec diamond regions with zig/zag/zip barriers.

The diamond of order n is the set of 2n(n+1) unit cells (i, j), lower-left
corners, with |i + 1/2| + |j + 1/2| <= n.  The spine is the run of 2k cells
on the main diagonal (k = ceil(n/2)), numbered 1..2k from southwest to
northeast.  Barrier strings use one character per spine square: 'i' for zig
(barriers on the square's bottom and right edges), 'a' for zag (left and
top), '.' for zip (none).

Counting is a broken-profile sweep over the bounding box with exact big
integers; enumeration is backtracking, kept to small orders.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .partitions import BalancedPartition, weight

ZIG = "i"
ZAG = "a"
ZIP = "."

COUNT_CEILING = 10
ENUM_CEILING = 5

Cell = tuple[int, int]
Domino = tuple[Cell, Cell]
Tiling = tuple[Domino, ...]


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError("order must be a positive integer")


def spine_k(n: int) -> int:
    """Half the spine length: ceil(n/2)."""
    _check_order(n)
    return (n + 1) // 2


def diamond_cells(n: int) -> frozenset[Cell]:
    """All cells of the order-n diamond."""
    _check_order(n)
    return frozenset(
        (i, j)
        for i in range(-n, n)
        for j in range(-n, n)
        if abs(2 * i + 1) + abs(2 * j + 1) <= 2 * n
    )


def spine_cells(n: int) -> tuple[Cell, ...]:
    """The diagonal cells (i, i) inside the diamond, southwest to northeast.

    Spine square number s (1-based) sits at i = s - 1 - k.
    """
    k = spine_k(n)
    return tuple((i, i) for i in range(-k, k))


def normalize_barriers(n: int, barriers: str | None) -> str:
    """Validate a barrier string for order n; ``None`` means all-zip."""
    length = 2 * spine_k(n)
    if barriers is None:
        return ZIP * length
    if len(barriers) != length:
        raise ValueError(
            f"barrier string must have one character per spine square "
            f"({length} for order {n}), got {len(barriers)}"
        )
    bad = set(barriers) - {ZIG, ZAG, ZIP}
    if bad:
        raise ValueError(
            f"barrier characters must be 'i' (zig), 'a' (zag) or '.' (zip); got {sorted(bad)!r}"
        )
    return barriers


def blocked_edges(n: int, barriers: str | None = None) -> frozenset[frozenset[Cell]]:
    """Cell adjacencies no domino may occupy under the given barriers.

    A zig at a spine square cuts the square off from its south and east
    neighbours, a zag from its north and west neighbours, zip cuts nothing.
    Adjacencies leading outside the diamond are dropped; the boundary
    already blocks them.
    """
    cfg = normalize_barriers(n, barriers)
    cells = diamond_cells(n)
    blocked: set[frozenset[Cell]] = set()
    for (i, j), mark in zip(spine_cells(n), cfg):
        if mark == ZIG:
            partners = ((i, j - 1), (i + 1, j))
        elif mark == ZAG:
            partners = ((i, j + 1), (i - 1, j))
        else:
            continue
        for other in partners:
            if other in cells:
                blocked.add(frozenset(((i, j), other)))
    return frozenset(blocked)


def count_tilings(n: int, barriers: str | None = None) -> int:
    """Exact number of domino tilings compatible with the barriers.

    Sweeps bounding-box cells bottom row first, west to east, carrying a
    2n-bit coverage profile: while cell (x, y) is being processed, profile
    bit t records whether cell (t, y) (for t < x) or cell (t, y - 1) (for
    t >= x) is already covered.  Cells outside the diamond count as covered
    and never join a domino, which also discards barrier-free transitions
    into them.  All accumulators are exact big integers.
    """
    _check_order(n)
    if n > COUNT_CEILING:
        raise ValueError(f"order {n} exceeds the exact-count ceiling {COUNT_CEILING}")
    cfg = normalize_barriers(n, barriers)

    width = 2 * n
    region = [
        [abs(2 * (x - n) + 1) + abs(2 * (y - n) + 1) <= 2 * n for x in range(width)]
        for y in range(width)
    ]
    # Blocked adjacencies in shifted coordinates, keyed by the later cell of
    # the sweep: (x, y) for the vertical pair below it / the horizontal pair
    # to its west.
    blocked_vertical: set[Cell] = set()
    blocked_horizontal: set[Cell] = set()
    for edge in blocked_edges(n, cfg):
        (i1, j1), (i2, j2) = sorted(edge)
        if i1 == i2:
            blocked_vertical.add((i1 + n, j2 + n))
        else:
            blocked_horizontal.add((i2 + n, j1 + n))

    full = (1 << width) - 1
    counts = [0] * (full + 1)
    counts[full] = 1
    for y in range(width):
        row = region[y]
        for x in range(width):
            bit = 1 << x
            west = bit >> 1
            nxt = [0] * (full + 1)
            if row[x]:
                may_pair_south = (x, y) not in blocked_vertical
                may_pair_west = x > 0 and (x, y) not in blocked_horizontal
                for mask, ways in enumerate(counts):
                    if not ways:
                        continue
                    if mask & bit:
                        # South neighbour already covered: leave (x, y) open...
                        nxt[mask ^ bit] += ways
                        # ...or close it with a horizontal domino to the west.
                        if may_pair_west and not mask & west:
                            nxt[mask | west] += ways
                    elif may_pair_south:
                        # South neighbour still open: the only rescue is a
                        # vertical domino through (x, y).
                        nxt[mask | bit] += ways
            else:
                for mask, ways in enumerate(counts):
                    if ways and mask & bit:
                        nxt[mask] += ways
            counts = nxt
    return counts[full]


def enumerate_tilings(n: int, barriers: str | None = None) -> Iterator[Tiling]:
    """Yield every compatible tiling exactly once, deterministically.

    Backtracks over cells in sweep order (bottom row first, west to east),
    pairing the first open cell horizontally before vertically.  Each domino
    is a sorted cell pair and each tiling a sorted domino tuple, so streams
    are reproducible.  Restricted to n <= ENUM_CEILING.
    """
    _check_order(n)
    if n > ENUM_CEILING:
        raise ValueError(f"order {n} exceeds the enumeration ceiling {ENUM_CEILING}")
    cells = diamond_cells(n)
    blocked = blocked_edges(n, barriers)
    order = sorted(cells, key=lambda c: (c[1], c[0]))
    covered: set[Cell] = set()
    chosen: list[Domino] = []

    def place(pos: int) -> Iterator[Tiling]:
        while pos < len(order) and order[pos] in covered:
            pos += 1
        if pos == len(order):
            yield tuple(sorted(chosen))
            return
        cell = order[pos]
        i, j = cell
        for partner in ((i + 1, j), (i, j + 1)):
            if (
                partner in cells
                and partner not in covered
                and frozenset((cell, partner)) not in blocked
            ):
                covered.add(cell)
                covered.add(partner)
                chosen.append((cell, partner))
                yield from place(pos + 1)
                chosen.pop()
                covered.discard(cell)
                covered.discard(partner)

    yield from place(0)


def spine_signature(tiling: Iterable[Domino], n: int) -> str:
    """The zig/zag mark of every spine square under a tiling.

    A square whose domino partner lies west or north of it gets a zig, east
    or south a zag.  Spine cells never pair with each other (diagonal cells
    share no edge), so the marks are always defined for a genuine tiling.
    """
    partner: dict[Cell, Cell] = {}
    for c1, c2 in tiling:
        partner[c1] = c2
        partner[c2] = c1
    marks = []
    for i, j in spine_cells(n):
        try:
            p = partner[(i, j)]
        except KeyError:
            raise ValueError(f"tiling does not cover spine cell {(i, j)}") from None
        if p in ((i - 1, j), (i, j + 1)):
            marks.append(ZIG)
        elif p in ((i + 1, j), (i, j - 1)):
            marks.append(ZAG)
        else:
            raise ValueError(f"cell {(i, j)} paired with non-neighbour {p}")
    return "".join(marks)


def signature_partition(signature: str) -> BalancedPartition:
    """The balanced partition carrying a full signature's zig positions."""
    if set(signature) - {ZIG, ZAG}:
        raise ValueError("full signatures use only 'i' and 'a'")
    if len(signature) % 2:
        raise ValueError("signatures have even length")
    zigs = tuple(pos for pos, ch in enumerate(signature, start=1) if ch == ZIG)
    k = len(signature) // 2
    if len(zigs) != k:
        raise ValueError("a signature carries equally many zigs and zags")
    return BalancedPartition.from_zigs(zigs, k)


def partition_signature(p: BalancedPartition) -> str:
    """Inverse of :func:`signature_partition`."""
    zigs = set(p.a)
    return "".join(ZIG if pos in zigs else ZAG for pos in range(1, 2 * p.k + 1))


def signature_class_size(p: BalancedPartition, n: int) -> int:
    """Number of order-n tilings whose full spine signature has zigs at ``p.a``.

    Equals weight(a) * weight(b) * 2^(k'(k'+1)) with k' = floor(n/2); the
    power of two absorbs everything away from the spine.
    """
    if p.k != spine_k(n):
        raise ValueError(
            f"partition is sized for k={p.k}, order {n} needs k={spine_k(n)}"
        )
    half = n // 2
    return weight(p.a, p.k) * weight(p.b, p.k) * (1 << (half * (half + 1)))


def barrier_sweep(n: int, rotated: bool = False) -> list[tuple[tuple[int, ...], int]]:
    """Tiling counts for every zig/zag assignment on alternating spine squares.

    Sweeps the even spine positions (the odd ones when ``rotated``): each
    subset receives zigs, the remaining swept positions zags, everything
    else zip.  Returns (zig positions, count) pairs, subsets ordered by
    their bitmask over the swept positions.  Every count comes out equal;
    that invariance is what the verify suite pins down.
    """
    length = 2 * spine_k(n)
    start = 1 if rotated else 2
    positions = list(range(start, length + 1, 2))
    swept = set(positions)
    results = []
    for bits in range(1 << len(positions)):
        zig_at = {positions[t] for t in range(len(positions)) if bits >> t & 1}
        cfg = "".join(
            ZIG if pos in zig_at else ZAG if pos in swept else ZIP
            for pos in range(1, length + 1)
        )
        results.append((tuple(sorted(zig_at)), count_tilings(n, cfg)))
    return results


def tiling_to_obj(tiling: Tiling) -> list[list[list[int]]]:
    """JSON-ready form: a sorted list of domino cell pairs [[i1,j1],[i2,j2]]."""
    return [[[c[0], c[1]] for c in domino] for domino in tiling]


def tiling_from_obj(obj: Sequence[Sequence[Sequence[int]]]) -> Tiling:
    """Parse the JSON form back into a canonical (sorted) tiling."""
    dominoes = []
    for pair in obj:
        (i1, j1), (i2, j2) = pair
        c1 = (int(i1), int(j1))
        c2 = (int(i2), int(j2))
        dominoes.append((c1, c2) if c1 <= c2 else (c2, c1))
    return tuple(sorted(dominoes))
