"""Column tilings by tiles of height 1, 2 or 3 and their weight polynomials.

A tiling of a height-n column stacks tiles bottom to top; the bottom tile
always has height 1. Weights are multiplicative: q per height-1 tile, p per
height-2 tile, r per height-3 tile. With tile heights {1, 2} the tilings of
height n are counted by the Fibonacci number F_n, and the weight sum
satisfies W_n = q W_{n-1} + p W_{n-2}; allowing height 3 as well gives
tribonacci counts and the three-term analogue of the recursion.

Reading the height-{1,2} tilings of a fixed height as root-to-leaf paths of
a plane binary tree (top tile first; height 1 = left branch, height 2 =
right branch) orders them left to right; `tree_rank` computes a tiling's
position in that order without building the tree, and the rank generating
function is the q-analogue [F_n]_q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from fibrook.poly import PQRPoly

_ALLOWED_HEIGHTS = (1, 2, 3)
_SLOT_FOR_HEIGHT = {1: 0, 2: 1, 3: 2}  # exponent slots (e_q, e_p, e_r)


# ──────────────────────────────────────────────────────────────────────────
# integer counting sequences
# ──────────────────────────────────────────────────────────────────────────


@lru_cache(maxsize=None)
def fibonacci_number(n: int) -> int:
    """F_n with F_0 = 0, F_1 = F_2 = 1."""
    if n < 0:
        raise ValueError("fibonacci_number needs n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# ──────────────────────────────────────────────────────────────────────────
# tile families and tilings
# ──────────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class TileFamily:
    """The set of tile heights a tiling may use; must contain height 1."""

    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        hts = tuple(self.heights)
        if hts != tuple(sorted(set(hts))):
            raise ValueError("tile heights must be strictly increasing and distinct")
        if 1 not in hts:
            raise ValueError("a tile family must contain height 1")
        if any(h not in _ALLOWED_HEIGHTS for h in hts):
            raise ValueError("tile heights must be drawn from {1, 2, 3}")
        object.__setattr__(self, "heights", hts)

    @property
    def label(self) -> str:
        return {(1, 2): "fib", (1, 2, 3): "trib"}.get(self.heights, str(self.heights))


FIBONACCI = TileFamily((1, 2))
TRIBONACCI = TileFamily((1, 2, 3))


@dataclass(frozen=True)
class Tiling:
    """A stack of tiles listed bottom to top; the bottom tile has height 1."""

    tiles: tuple[int, ...]

    def __post_init__(self) -> None:
        tiles = tuple(self.tiles)
        if not tiles:
            raise ValueError("a tiling has at least one tile")
        if tiles[0] != 1:
            raise ValueError("the bottom tile must have height 1")
        if any(h not in _ALLOWED_HEIGHTS for h in tiles):
            raise ValueError("tile heights must be drawn from {1, 2, 3}")
        object.__setattr__(self, "tiles", tiles)

    @property
    def height(self) -> int:
        return sum(self.tiles)

    def height_counts(self) -> tuple[int, int, int]:
        """(number of height-1 tiles, height-2 tiles, height-3 tiles)."""
        counts = [0, 0, 0]
        for h in self.tiles:
            counts[_SLOT_FOR_HEIGHT[h]] += 1
        return tuple(counts)

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.tiles)


def parse_tiling(text: str) -> Tiling:
    """Parse the text form "1,2,1" (tiles bottom to top)."""
    try:
        tiles = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad tiling text {text!r}") from exc
    return Tiling(tiles)


@lru_cache(maxsize=None)
def _stacks(heights: tuple[int, ...], remaining: int) -> tuple[tuple[int, ...], ...]:
    # all tile sequences with the given total, free choice of every tile
    if remaining == 0:
        return ((),)
    out = []
    for h in heights:
        if h <= remaining:
            out.extend((h,) + rest for rest in _stacks(heights, remaining - h))
    return tuple(out)


def enumerate_tilings(fam: TileFamily, n: int) -> list[Tiling]:
    """All tilings of a height-n column, lexicographic by tile sequence.

    There are none for n <= 0 (the bottom tile needs height 1 to stand on
    the floor, so height 0 admits no tiling here).
    """
    if n < 1:
        return []
    return [Tiling((1,) + rest) for rest in _stacks(fam.heights, n - 1)]


def tiling_weight(t: Tiling) -> PQRPoly:
    """q^(#height-1) p^(#height-2) r^(#height-3) as a one-term polynomial."""
    ones, twos, threes = t.height_counts()
    return PQRPoly.term(1, e_q=ones, e_p=twos, e_r=threes)


_TILE_WEIGHT = {
    1: PQRPoly.variable("q"),
    2: PQRPoly.variable("p"),
    3: PQRPoly.variable("r"),
}


@lru_cache(maxsize=None)
def _weight_poly(heights: tuple[int, ...], n: int) -> PQRPoly:
    if n < 1:
        return PQRPoly.zero()
    if n == 1:
        return _TILE_WEIGHT[1]
    total = PQRPoly.zero()
    for h in heights:
        tail = _weight_poly(heights, n - h)
        if tail:
            total = total + _TILE_WEIGHT[h] * tail
    return total


def weight_poly(fam: TileFamily, n: int) -> PQRPoly:
    """Total weight of all height-n tilings, computed by the tiling recursion.

    Peeling the top tile gives W_n = sum over tile heights h of w_h * W_{n-h}
    with W_1 = q and W_m = 0 for m <= 0; for the {1,2} family this is
    W_n = q W_{n-1} + p W_{n-2}, the weighted Fibonacci recursion.
    """
    if n < 0:
        raise ValueError("weight_poly needs n >= 0")
    return _weight_poly(fam.heights, n)


@lru_cache(maxsize=None)
def _weight_sum_enumerated(heights: tuple[int, ...], n: int) -> PQRPoly:
    total: dict[tuple[int, int, int], int] = {}
    for t in enumerate_tilings(TileFamily(heights), n):
        key = t.height_counts()
        total[key] = total.get(key, 0) + 1
    return PQRPoly(total)


def tiling_weight_sum(fam: TileFamily, n: int) -> PQRPoly:
    """Total weight of all height-n tilings, by exhaustive enumeration.

    Same value as `weight_poly` but computed independently of the recursion;
    board enumeration uses this one so the two placement-polynomial modes
    stay genuinely independent.
    """
    return _weight_sum_enumerated(fam.heights, n)


def tiling_count(fam: TileFamily, n: int) -> int:
    """How many height-n tilings the family admits."""
    return weight_poly(fam, n).eval_at(1, 1, 1)


# ──────────────────────────────────────────────────────────────────────────
# tree ranks for the {1, 2} family
# ──────────────────────────────────────────────────────────────────────────


def tree_rank(t: Tiling) -> int:
    """Position of a {1,2}-tiling among all tilings of its height.

    The tilings of height n are the leaves of a plane tree: follow the tiles
    top to bottom, branching left on a height-1 tile and right on a height-2
    tile. Every right branch at remaining height m skips the whole left
    subtree, which holds F_{m-1} leaves (the completions starting with a
    height-1 tile), so the leaf index is the sum of F_{m-1} over the
    height-2 tiles.
    """
    if any(h == 3 for h in t.tiles):
        raise ValueError("tree_rank is defined for height-{1,2} tilings only")
    rank = 0
    remaining = t.height
    for h in reversed(t.tiles):  # top to bottom
        if h == 2:
            rank += fibonacci_number(remaining - 1)
        remaining -= h
    return rank


def rank_generating_poly(n: int) -> PQRPoly:
    """Sum of q^rank over all {1,2}-tilings of height n; equals [F_n]_q."""
    if n < 1:
        return PQRPoly.zero()
    out: dict[tuple[int, int, int], int] = {}
    for t in enumerate_tilings(FIBONACCI, n):
        key = (tree_rank(t), 0, 0)
        out[key] = out.get(key, 0) + 1
    return PQRPoly(out)
