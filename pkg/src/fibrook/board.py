"""Ferrers boards and tiling placements, in two flavors.

A board is a sequence of column heights b_1 <= ... <= b_n (weakly
increasing for the rook model; arbitrary nonnegative heights are allowed
for the file model, where columns never interact).

File placements choose k columns and tile each chosen column to its full
height. Rook-style placements add cancellation: processing the chosen
columns left to right, the s-th tiling removes from every column j to its
right the top b_{j-(s-1)} - b_{j-s} cells (original heights, 1-based), so
each tiling it meets later is shorter. The bookkeeping has a closed form
on Ferrers boards: the s-th tiled column i_s has exactly b_{i_s-(s-1)}
uncanceled cells, and the untiled columns keep the k smallest heights
b_1, ..., b_{n-k} in left-to-right order. `uncanceled_heights` runs the
literal per-cell simulation; the closed rule feeds everything else, and
the tests assert they agree.

The two placement polynomials can each be computed two independent ways:
"recursion" peels the last column (file: by whether it is tiled; rook: the
shortened tiling in the k-th chosen column has b_{n-(k-1)} cells), while
"enumeration" walks every subset of columns and multiplies per-column
weight sums obtained by exhaustively listing tilings. Mixed and augmented
placement sums re-derive the product formulas column by column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from fibrook.poly import PQRPoly
from fibrook.tiling import (
    TileFamily,
    Tiling,
    enumerate_tilings,
    parse_tiling,
    tiling_weight,
    tiling_weight_sum,
    weight_poly,
)

# ──────────────────────────────────────────────────────────────────────────
# boards
# ──────────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class FerrersBoard:
    """Column heights, left to right. Non-Ferrers profiles are allowed but
    flagged; the rook model requires weakly increasing heights."""

    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        hts = tuple(int(h) for h in self.heights)
        if any(h < 0 for h in hts):
            raise ValueError("column heights must be nonnegative")
        object.__setattr__(self, "heights", hts)

    @classmethod
    def staircase(cls, n: int) -> FerrersBoard:
        """The board with heights (0, 1, ..., n-1)."""
        if n < 0:
            raise ValueError("staircase needs n >= 0")
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.heights)

    @property
    def is_ferrers(self) -> bool:
        return all(a <= b for a, b in zip(self.heights, self.heights[1:]))

    def dropped_last(self) -> FerrersBoard:
        if not self.heights:
            raise ValueError("the empty board has no last column")
        return FerrersBoard(self.heights[:-1])

    def __str__(self) -> str:
        return "F(" + ",".join(str(h) for h in self.heights) + ")"


_BOARD_RE = re.compile(r"^F\(\s*(.*?)\s*\)$")


def parse_board(text: str) -> FerrersBoard:
    """Parse the text form "F(0,1,2,3)"; "F()" is the empty board."""
    m = _BOARD_RE.match(text.strip())
    if m is None:
        raise ValueError(f"bad board text {text!r}, expected like 'F(0,1,2)'")
    inner = m.group(1)
    if not inner:
        return FerrersBoard(())
    try:
        heights = tuple(int(part) for part in inner.split(","))
    except ValueError as exc:
        raise ValueError(f"bad board text {text!r}") from exc
    return FerrersBoard(heights)


# ──────────────────────────────────────────────────────────────────────────
# cancellation bookkeeping
# ──────────────────────────────────────────────────────────────────────────


def _require_ferrers(board: FerrersBoard, what: str) -> None:
    if not board.is_ferrers:
        raise ValueError(f"{what} needs weakly increasing heights, got {board}")


def _check_columns(board: FerrersBoard, chosen) -> tuple[int, ...]:
    cols = tuple(chosen)
    if list(cols) != sorted(set(cols)):
        raise ValueError("chosen columns must be strictly increasing")
    if cols and (cols[0] < 1 or cols[-1] > board.n):
        raise ValueError(f"chosen columns out of range for {board}")
    return cols


def _cancellation_simulation(
    board: FerrersBoard, cols: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # literal per-cell bookkeeping; returns (tiling heights, untiled heights)
    b = board.heights
    n = board.n
    remaining = list(b)
    tiled_heights = []
    for s, col in enumerate(cols):  # s tilings already placed to the left
        tiled_heights.append(remaining[col - 1])
        for j in range(col + 1, n + 1):
            cut = b[j - s - 1] - b[j - s - 2]
            remaining[j - 1] -= cut
            if remaining[j - 1] < 0:
                raise AssertionError("cancellation removed more cells than a column has")
    chosen_set = set(cols)
    untiled = tuple(remaining[c - 1] for c in range(1, n + 1) if c not in chosen_set)
    return tuple(tiled_heights), untiled


def uncanceled_heights(board: FerrersBoard, chosen) -> tuple[int, ...]:
    """Heights left in the untiled columns once every tiling has canceled.

    Runs the per-cell simulation. On a Ferrers board the result is always
    the |chosen| smallest board heights, in left-to-right order.
    """
    _require_ferrers(board, "cancellation")
    cols = _check_columns(board, chosen)
    return _cancellation_simulation(board, cols)[1]


def rook_tiling_heights(board: FerrersBoard, chosen) -> tuple[int, ...]:
    """Uncanceled height of each chosen column at the moment it is tiled.

    Closed form of the cancellation rule: the s-th chosen column i_s (1-based
    s) keeps b_{i_s - (s-1)} cells.
    """
    _require_ferrers(board, "cancellation")
    cols = _check_columns(board, chosen)
    return tuple(board.heights[col - 1 - s] for s, col in enumerate(cols))


# ──────────────────────────────────────────────────────────────────────────
# placements
# ──────────────────────────────────────────────────────────────────────────


def _check_entries(board: FerrersBoard, entries) -> tuple[tuple[int, Tiling], ...]:
    pairs = tuple((int(c), t) for c, t in entries)
    cols = tuple(c for c, _ in pairs)
    if list(cols) != sorted(set(cols)):
        raise ValueError("placement columns must be strictly increasing")
    if cols and (cols[0] < 1 or cols[-1] > board.n):
        raise ValueError(f"placement columns out of range for {board}")
    return pairs


def _entries_str(entries: tuple[tuple[int, Tiling], ...]) -> str:
    return ";".join(f"{c}:{t}" for c, t in entries)


def _entries_weight(entries: tuple[tuple[int, Tiling], ...]) -> PQRPoly:
    ones = twos = threes = 0
    for _, t in entries:
        a, b, c = t.height_counts()
        ones += a
        twos += b
        threes += c
    return PQRPoly.term(1, e_q=ones, e_p=twos, e_r=threes)


@dataclass(frozen=True)
class FilePlacement:
    """k chosen columns, each tiled to its full board height."""

    board: FerrersBoard
    entries: tuple[tuple[int, Tiling], ...]

    def __post_init__(self) -> None:
        pairs = _check_entries(self.board, self.entries)
        for col, t in pairs:
            want = self.board.heights[col - 1]
            if t.height != want:
                raise ValueError(
                    f"column {col} has height {want}, tiling covers {t.height}"
                )
        object.__setattr__(self, "entries", pairs)

    @property
    def k(self) -> int:
        return len(self.entries)

    def weight(self) -> PQRPoly:
        return _entries_weight(self.entries)

    def __str__(self) -> str:
        return _entries_str(self.entries)


@dataclass(frozen=True)
class RookPlacement:
    """k chosen columns tiled under cancellation: the s-th tiling covers the
    b_{i_s-(s-1)} cells its column still has."""

    board: FerrersBoard
    entries: tuple[tuple[int, Tiling], ...]

    def __post_init__(self) -> None:
        _require_ferrers(self.board, "a rook-style placement")
        pairs = _check_entries(self.board, self.entries)
        want = rook_tiling_heights(self.board, tuple(c for c, _ in pairs))
        for (col, t), h in zip(pairs, want):
            if t.height != h:
                raise ValueError(
                    f"column {col} has {h} uncanceled cells, tiling covers {t.height}"
                )
        object.__setattr__(self, "entries", pairs)

    @property
    def k(self) -> int:
        return len(self.entries)

    def weight(self) -> PQRPoly:
        return _entries_weight(self.entries)

    def __str__(self) -> str:
        return _entries_str(self.entries)


def parse_placement(board: FerrersBoard, text: str, model: str = "file"):
    """Parse "2:1;4:1,2" (column:tiling pairs) into a placement object."""
    entries: list[tuple[int, Tiling]] = []
    text = text.strip()
    if text:
        for chunk in text.split(";"):
            col_text, _, tiling_text = chunk.partition(":")
            entries.append((int(col_text), parse_tiling(tiling_text)))
    if model == "file":
        return FilePlacement(board, tuple(entries))
    if model == "rook":
        return RookPlacement(board, tuple(entries))
    raise ValueError(f"unknown placement model {model!r}")


def enumerate_file_placements(
    board: FerrersBoard, fam: TileFamily, k: int
) -> list[FilePlacement]:
    """Every file placement with k tiled columns, in a fixed order
    (column subsets in ascending order, tilings lexicographic)."""
    if k < 0:
        return []
    cols = [c for c in range(1, board.n + 1) if board.heights[c - 1] > 0]
    out: list[FilePlacement] = []
    for combo in combinations(cols, k):
        pools = [enumerate_tilings(fam, board.heights[c - 1]) for c in combo]
        for choice in product(*pools):
            out.append(FilePlacement(board, tuple(zip(combo, choice))))
    return out


def enumerate_rook_placements(
    board: FerrersBoard, fam: TileFamily, k: int
) -> list[RookPlacement]:
    """Every rook-style placement with k tiled columns, fixed order as above."""
    _require_ferrers(board, "a rook-style placement")
    if k < 0:
        return []
    out: list[RookPlacement] = []
    for combo in combinations(range(1, board.n + 1), k):
        hts = rook_tiling_heights(board, combo)
        if any(h == 0 for h in hts):
            continue
        pools = [enumerate_tilings(fam, h) for h in hts]
        for choice in product(*pools):
            out.append(RookPlacement(board, tuple(zip(combo, choice))))
    return out


# ──────────────────────────────────────────────────────────────────────────
# placement polynomials, two independent modes
# ──────────────────────────────────────────────────────────────────────────


@lru_cache(maxsize=None)
def _file_rec(heights: tuple[int, ...], fam_heights: tuple[int, ...], k: int) -> PQRPoly:
    if k < 0 or k > len(heights):
        return PQRPoly.zero()
    if k == 0:
        return PQRPoly.one()
    fam = TileFamily(fam_heights)
    body = heights[:-1]
    keep = _file_rec(body, fam_heights, k)
    use = weight_poly(fam, heights[-1]) * _file_rec(body, fam_heights, k - 1)
    return keep + use


@lru_cache(maxsize=None)
def _rook_rec(heights: tuple[int, ...], fam_heights: tuple[int, ...], k: int) -> PQRPoly:
    if k < 0 or k > len(heights):
        return PQRPoly.zero()
    if k == 0:
        return PQRPoly.one()
    fam = TileFamily(fam_heights)
    body = heights[:-1]
    keep = _rook_rec(body, fam_heights, k)
    # with the last column tiled, cancellation has cut it down to b_{n-(k-1)} cells
    use = weight_poly(fam, heights[len(heights) - k]) * _rook_rec(body, fam_heights, k - 1)
    return keep + use


@lru_cache(maxsize=None)
def _file_enum_sums(
    heights: tuple[int, ...], fam_heights: tuple[int, ...]
) -> tuple[PQRPoly, ...]:
    fam = TileFamily(fam_heights)
    n = len(heights)
    sums = [PQRPoly.zero() for _ in range(n + 1)]
    col_weight = [tiling_weight_sum(fam, h) for h in heights]

    def walk(start: int, count: int, acc: PQRPoly) -> None:
        sums[count] = sums[count] + acc
        for j in range(start, n):
            w = col_weight[j]
            if w:
                walk(j + 1, count + 1, acc * w)

    walk(0, 0, PQRPoly.one())
    return tuple(sums)


@lru_cache(maxsize=None)
def _rook_enum_sums(
    heights: tuple[int, ...], fam_heights: tuple[int, ...]
) -> tuple[PQRPoly, ...]:
    fam = TileFamily(fam_heights)
    n = len(heights)
    sums = [PQRPoly.zero() for _ in range(n + 1)]

    def walk(start: int, count: int, acc: PQRPoly) -> None:
        sums[count] = sums[count] + acc
        for j in range(start, n):
            # the (count+1)-th chosen column keeps heights[j - count] cells
            w = tiling_weight_sum(fam, heights[j - count])
            if w:
                walk(j + 1, count + 1, acc * w)

    walk(0, 0, PQRPoly.one())
    return tuple(sums)


def file_poly(
    board: FerrersBoard, fam: TileFamily, k: int, mode: str = "recursion"
) -> PQRPoly:
    """Total weight of the k-column file placements on `board`.

    mode="recursion" peels the last column; mode="enumeration" walks the
    column subsets and multiplies exhaustively enumerated per-column sums.
    """
    if mode == "recursion":
        return _file_rec(board.heights, fam.heights, k)
    if mode == "enumeration":
        if k < 0 or k > board.n:
            return PQRPoly.zero()
        return _file_enum_sums(board.heights, fam.heights)[k]
    raise ValueError(f"unknown mode {mode!r}")


def rook_poly(
    board: FerrersBoard, fam: TileFamily, k: int, mode: str = "recursion"
) -> PQRPoly:
    """Total weight of the k-column rook-style placements on `board`."""
    _require_ferrers(board, "a rook-style placement")
    if mode == "recursion":
        return _rook_rec(board.heights, fam.heights, k)
    if mode == "enumeration":
        if k < 0 or k > board.n:
            return PQRPoly.zero()
        return _rook_enum_sums(board.heights, fam.heights)[k]
    raise ValueError(f"unknown mode {mode!r}")


# ──────────────────────────────────────────────────────────────────────────
# mixed and augmented placements
# ──────────────────────────────────────────────────────────────────────────


def mixed_file_sum(board: FerrersBoard, fam: TileFamily, x: int) -> PQRPoly:
    """Sum of weights over mixed placements with x rook rows below the board.

    Every column takes either a full-height tiling (its weight) or a rook in
    one of x interchangeable rows (weight 1, tracked as a multiplicity
    factor). The total factors column by column, so it must equal
    prod_i (x + W_{b_i}) and hence sum_k file_poly(k) * x^(n-k).
    """
    if x < 0:
        raise ValueError("x must be >= 0")
    n = board.n
    acc: dict[tuple[int, int, int], int] = {}

    def walk(i: int, exps: tuple[int, int, int], mult: int) -> None:
        if i == n:
            acc[exps] = acc.get(exps, 0) + mult
            return
        if x:
            walk(i + 1, exps, mult * x)
        for t in enumerate_tilings(fam, board.heights[i]):
            a, b, c = t.height_counts()
            walk(i + 1, (exps[0] + a, exps[1] + b, exps[2] + c), mult)

    walk(0, (0, 0, 0), 1)
    return PQRPoly(acc)


def mixed_file_sum_row_explicit(board: FerrersBoard, fam: TileFamily, x: int) -> PQRPoly:
    """Same sum with the x rook rows enumerated one by one (oracle for small n)."""
    if x < 0:
        raise ValueError("x must be >= 0")
    options = []
    for h in board.heights:
        column = [("rook", row) for row in range(1, x + 1)]
        column += [("tiling", t) for t in enumerate_tilings(fam, h)]
        options.append(column)
    total = PQRPoly.zero()
    for choice in product(*options):
        w = PQRPoly.one()
        for kind, payload in choice:
            if kind == "tiling":
                w = w * tiling_weight(payload)
        total = total + w
    return total


def aug_mixed_sum(board: FerrersBoard, fam: TileFamily, x: int) -> PQRPoly:
    """Signed sum over placements on the board augmented below the rook rows
    with a mirrored copy of itself.

    Per column: a board tiling (which cancels, so later columns shrink), a
    rook in one of x rows, or a tiling of the mirrored column below (same
    number of cells, no cancellation) carrying sign -1. Signs cancel
    everything but one rook per column, so the total is the constant x^n.
    """
    _require_ferrers(board, "the augmented board")
    if x < 0:
        raise ValueError("x must be >= 0")
    n = board.n
    acc: dict[tuple[int, int, int], int] = {}

    def walk(i: int, tiled: int, exps: tuple[int, int, int], mult: int) -> None:
        if i == n:
            acc[exps] = acc.get(exps, 0) + mult
            return
        if x:
            walk(i + 1, tiled, exps, mult * x)
        height = board.heights[i - tiled]
        for t in enumerate_tilings(fam, height):
            a, b, c = t.height_counts()
            bumped = (exps[0] + a, exps[1] + b, exps[2] + c)
            walk(i + 1, tiled + 1, bumped, mult)  # tiling above: cancels later columns
            walk(i + 1, tiled, bumped, -mult)  # mirrored tiling below: no cancellation

    walk(0, 0, (0, 0, 0), 1)
    return PQRPoly(acc)


def aug_mixed_sum_row_explicit(board: FerrersBoard, fam: TileFamily, x: int) -> PQRPoly:
    """Augmented sum with rook rows and mirrored tilings enumerated one by one."""
    _require_ferrers(board, "the augmented board")
    if x < 0:
        raise ValueError("x must be >= 0")
    n = board.n
    total = PQRPoly.zero()

    def walk(i: int, tiled: int, w: PQRPoly, sign: int) -> None:
        nonlocal total
        if i == n:
            total = total + (w if sign > 0 else -w)
            return
        for _row in range(1, x + 1):
            walk(i + 1, tiled, w, sign)
        height = board.heights[i - tiled]
        for t in enumerate_tilings(fam, height):
            tw = tiling_weight(t)
            walk(i + 1, tiled + 1, w * tw, sign)
            walk(i + 1, tiled, w * tw, -sign)

    walk(0, 0, PQRPoly.one(), 1)
    return total
