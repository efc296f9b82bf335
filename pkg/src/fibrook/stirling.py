"""Connection-coefficient triangles between the power and factorial bases.

For a tile family with weight sums W_1, W_2, ... (W_m is the total weight
of the height-m tilings) define the falling and rising factorial bases

    down_n(x) = x (x - W_1) ... (x - W_{n-1}),
    up_n(x)   = x (x + W_1) ... (x + W_{n-1}).

The triangles built here are the coefficients connecting these bases to
the powers x^n. All satisfy two-term recursions from the boundary
T[0][0] = 1, T[n][k] = 0 outside 0 <= k <= n:

    kind "cf"/"cp":  T[n+1][k] = T[n][k-1] + W_n T[n][k]   (up_n = sum cf x^k)
    kind "sf"/"sp":  T[n+1][k] = T[n][k-1] - W_n T[n][k]   (down_n = sum sf x^k)
    kind "Sf"/"Sp":  T[n+1][k] = T[n][k-1] + W_k T[n][k]   (x^n = sum Sf down_k)
    kind "Lf":       T[n+1][k] = T[n][k-1] + (W_k + W_n) T[n][k]
                                                (up_n = sum Lf down_k)

Lowercase kinds use the {1,2} family, the trailing-p kinds use {1,2,3}.
The same numbers fall out of staircase-board placements: cf[n][k] counts
file placements of n-k tilings on the staircase with n columns, Sf[n][k]
counts the rook-style placements, and `triangle_from_boards` rebuilds the
triangles that way.

The Sf/sf matrices are mutually inverse. `involution` realizes the
orthogonality bijectively: on pairs (rook-style placement of n-j tilings
on the n-staircase, file placement of j-k tilings on the j-staircase),
signed by (-1)^(j-k), it flips the sign while preserving total weight, by
moving a tiling between the last columns of the two boards, recursing on
shrunken boards when both last columns are empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from fibrook.board import (
    FerrersBoard,
    FilePlacement,
    RookPlacement,
    enumerate_file_placements,
    enumerate_rook_placements,
    file_poly,
    rook_poly,
)
from fibrook.poly import PQRPoly, XPoly, xpoly_product
from fibrook.tiling import FIBONACCI, TRIBONACCI, TileFamily, weight_poly

TRIANGLE_KINDS = ("cf", "sf", "Sf", "Lf", "cp", "sp", "Sp")

_FAMILY_FOR_KIND = {
    "cf": FIBONACCI,
    "sf": FIBONACCI,
    "Sf": FIBONACCI,
    "Lf": FIBONACCI,
    "cp": TRIBONACCI,
    "sp": TRIBONACCI,
    "Sp": TRIBONACCI,
}


def family_for_kind(kind: str) -> TileFamily:
    try:
        return _FAMILY_FOR_KIND[kind]
    except KeyError:
        raise ValueError(f"unknown triangle kind {kind!r}") from None


# ──────────────────────────────────────────────────────────────────────────
# triangles
# ──────────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class CoeffTriangle:
    """Rows 0..N of one coefficient family; row n holds entries k = 0..n."""

    kind: str
    N: int
    rows: tuple[tuple[PQRPoly, ...], ...]

    @property
    def family(self) -> TileFamily:
        return family_for_kind(self.kind)

    def entry(self, n: int, k: int) -> PQRPoly:
        if n < 0 or n > self.N:
            raise ValueError(f"row {n} not in triangle (N={self.N})")
        if k < 0 or k > n:
            return PQRPoly.zero()
        return self.rows[n][k]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "N": self.N,
            "entries": [[str(e) for e in row] for row in self.rows],
        }

    def csv_rows(self) -> Iterator[tuple[int, int, str]]:
        for n, row in enumerate(self.rows):
            for k, e in enumerate(row):
                yield (n, k, str(e))


def build_triangle(kind: str, N: int) -> CoeffTriangle:
    """Rows 0..N of the `kind` triangle by its two-term recursion."""
    fam = family_for_kind(kind)
    if N < 0:
        raise ValueError("N must be >= 0")
    zero = PQRPoly.zero()
    rows: list[list[PQRPoly]] = [[PQRPoly.one()]]
    for n in range(N):
        prev = rows[n]

        def at(k: int) -> PQRPoly:
            return prev[k] if 0 <= k <= n else zero

        new_row: list[PQRPoly] = []
        for k in range(n + 2):
            if kind in ("cf", "cp"):
                step = weight_poly(fam, n) * at(k)
            elif kind in ("sf", "sp"):
                step = -(weight_poly(fam, n) * at(k))
            elif kind in ("Sf", "Sp"):
                step = weight_poly(fam, k) * at(k)
            else:  # Lf
                step = (weight_poly(fam, k) + weight_poly(fam, n)) * at(k)
            new_row.append(at(k - 1) + step)
        rows.append(new_row)
    return CoeffTriangle(kind, N, tuple(tuple(row) for row in rows))


def triangle_from_boards(kind: str, N: int) -> CoeffTriangle:
    """Rebuild a cf/cp or Sf/Sp triangle from staircase-board placements.

    Entry (n, k) is the total weight of the placements of n-k tilings on
    the n-column staircase: file placements for cf/cp, rook-style for
    Sf/Sp, both computed in enumeration mode so the result is independent
    of every recursion in this module.
    """
    if kind not in ("cf", "cp", "Sf", "Sp"):
        raise ValueError(f"kind {kind!r} has no placement interpretation here")
    fam = family_for_kind(kind)
    counted = file_poly if kind in ("cf", "cp") else rook_poly
    rows = []
    for n in range(N + 1):
        board = FerrersBoard.staircase(n)
        rows.append(
            tuple(counted(board, fam, n - k, mode="enumeration") for k in range(n + 1))
        )
    return CoeffTriangle(kind, N, tuple(rows))


# ──────────────────────────────────────────────────────────────────────────
# factorial bases and expansions
# ──────────────────────────────────────────────────────────────────────────


def falling_factorial_basis(fam: TileFamily, k: int) -> XPoly:
    """x (x - W_1) ... (x - W_{k-1}); the empty product 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return XPoly.one()
    factors = [(1, PQRPoly.zero())]
    factors += [(-1, weight_poly(fam, i)) for i in range(1, k)]
    return xpoly_product(factors)


def rising_factorial_basis(fam: TileFamily, k: int) -> XPoly:
    """x (x + W_1) ... (x + W_{k-1}); the empty product 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return XPoly.one()
    factors = [(1, PQRPoly.zero())]
    factors += [(1, weight_poly(fam, i)) for i in range(1, k)]
    return xpoly_product(factors)


def verify_basis_expansions(N: int, fam: TileFamily) -> dict:
    """Check every basis-expansion identity for the family up to row N.

    For {1,2}: down_n = sum_k sf[n][k] x^k, x^n = sum_k Sf[n][k] down_k,
    up_n = sum_k Lf[n][k] down_k and up_n = sum_k cf[n][k] x^k.
    For {1,2,3}: up_n = sum_k cp[n][k] x^k and x^n = sum_k Sp[n][k] down_k.
    """
    def basis(label: str, m: int) -> XPoly:
        if label == "power":
            return XPoly.x_power(m)
        if label == "falling":
            return falling_factorial_basis(fam, m)
        return rising_factorial_basis(fam, m)

    if fam == FIBONACCI:
        cases = [
            ("falling-in-powers", "sf", "falling", "power"),
            ("power-in-falling", "Sf", "power", "falling"),
            ("rising-in-falling", "Lf", "rising", "falling"),
            ("rising-in-powers", "cf", "rising", "power"),
        ]
    elif fam == TRIBONACCI:
        cases = [
            ("rising-in-powers", "cp", "rising", "power"),
            ("power-in-falling", "Sp", "power", "falling"),
        ]
    else:
        raise ValueError(f"no triangles are defined for family {fam}")

    counterexamples = []
    for name, kind, lhs_label, rhs_label in cases:
        tri = build_triangle(kind, N)
        for n in range(N + 1):
            lhs = basis(lhs_label, n)
            rhs = XPoly.zero()
            for k in range(n + 1):
                coeff = tri.entry(n, k)
                if not coeff.is_zero:
                    rhs = rhs + basis(rhs_label, k) * coeff
            if lhs != rhs:
                counterexamples.append(
                    {"identity": name, "n": n, "lhs": str(lhs), "rhs": str(rhs)}
                )
    return {
        "check": "basis-expansions",
        "range": f"family={fam.label}, n<={N}",
        "status": "PASS" if not counterexamples else "FAIL",
        "counterexamples": counterexamples,
    }


def matrix_inverse_check(N: int, fam: TileFamily) -> dict:
    """Check sum_j Sf[n][j] sf[j][k] = [n == k] (and the {1,2,3} analogue)."""
    big, small = ("Sf", "sf") if fam == FIBONACCI else ("Sp", "sp")
    tri_big = build_triangle(big, N)
    tri_small = build_triangle(small, N)
    counterexamples = []
    for n in range(N + 1):
        for k in range(N + 1):
            total = PQRPoly.zero()
            for j in range(k, n + 1):
                total = total + tri_big.entry(n, j) * tri_small.entry(j, k)
            want = PQRPoly.one() if n == k else PQRPoly.zero()
            if total != want:
                counterexamples.append({"n": n, "k": k, "value": str(total)})
    return {
        "check": "matrix-inverse",
        "range": f"family={fam.label}, n,k<={N}",
        "status": "PASS" if not counterexamples else "FAIL",
        "counterexamples": counterexamples,
    }


# ──────────────────────────────────────────────────────────────────────────
# the sign-reversing involution behind the inverse
# ──────────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class PlacementPair:
    """A term of sum_j Sf[n][j] sf[j][k]: a rook-style placement of n-j
    tilings on the n-staircase and a file placement of j-k tilings on the
    j-staircase, signed by (-1)^(j-k)."""

    j: int
    rook: RookPlacement
    file: FilePlacement

    def sign(self) -> int:
        return -1 if len(self.file.entries) % 2 else 1

    def weight(self) -> PQRPoly:
        return self.rook.weight() * self.file.weight()


def involution_domain(n: int, k: int) -> Iterator[PlacementPair]:
    """All pairs behind the (n, k) entry of the product Sf * sf."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    for j in range(k, n + 1):
        rooks = enumerate_rook_placements(FerrersBoard.staircase(n), FIBONACCI, n - j)
        files = enumerate_file_placements(FerrersBoard.staircase(j), FIBONACCI, j - k)
        for rp in rooks:
            for fp in files:
                yield PlacementPair(j, rp, fp)


def _pair_checked(n: int, k: int, pair: PlacementPair) -> None:
    j = pair.j
    if not k <= j <= n:
        raise ValueError(f"pair has j={j} outside {k}..{n}")
    if pair.rook.board != FerrersBoard.staircase(n):
        raise ValueError("rook part lives on the wrong board")
    if pair.file.board != FerrersBoard.staircase(j):
        raise ValueError("file part lives on the wrong board")
    if len(pair.rook.entries) != n - j:
        raise ValueError("rook part has the wrong number of tilings")
    if len(pair.file.entries) != j - k:
        raise ValueError("file part has the wrong number of tilings")


def involution(n: int, k: int, pair: PlacementPair) -> PlacementPair:
    """The sign-reversing, weight-preserving involution on the (n, k) pairs.

    Sends j to j +- 1, so it cancels the signed pairs in matched couples;
    only the all-empty pair at j = n = k would survive, and for k < n there
    is none, which is exactly the inverse-matrix identity off the diagonal.

    Case 1: the rook part tiles the last staircase column. As the
    rightmost of n-j tilings it has b_{j+1} = j uncanceled cells, exactly
    the height of the new last column when the file board grows to j+1, so
    move it there. Case 2 (the exact inverse): the rook part leaves column
    n empty but the file part tiles its own last column, of height j-1;
    moved onto column n of the rook board it again fits exactly, because
    the rightmost of n-j+1 tilings keeps b_{n-(n-j)} = j-1 cells. Case 3:
    both last columns empty; drop both last columns, recurse at
    (n-1, k-1), and put the empty columns back. The recursion terminates
    because a file placement of j-1 tilings on the j-staircase (the k = 1
    shape) cannot avoid its last column: only j-2 earlier columns are
    nonempty. Raises on pairs outside the domain.
    """
    if not 1 <= k < n:
        raise ValueError("the involution is defined for 1 <= k < n")
    _pair_checked(n, k, pair)
    j = pair.j
    rook_entries = pair.rook.entries
    file_entries = pair.file.entries

    if rook_entries and rook_entries[-1][0] == n:
        moved = rook_entries[-1][1]
        new_rook = RookPlacement(pair.rook.board, rook_entries[:-1])
        new_file = FilePlacement(
            FerrersBoard.staircase(j + 1), file_entries + ((j + 1, moved),)
        )
        return PlacementPair(j + 1, new_rook, new_file)

    if file_entries and file_entries[-1][0] == j:
        moved = file_entries[-1][1]
        new_file = FilePlacement(FerrersBoard.staircase(j - 1), file_entries[:-1])
        new_rook = RookPlacement(pair.rook.board, rook_entries + ((n, moved),))
        return PlacementPair(j - 1, new_rook, new_file)

    # both last columns empty: the pair restricts to staircases one smaller
    inner = PlacementPair(
        j - 1,
        RookPlacement(FerrersBoard.staircase(n - 1), rook_entries),
        FilePlacement(FerrersBoard.staircase(j - 1), file_entries),
    )
    image = involution(n - 1, k - 1, inner)
    return PlacementPair(
        image.j + 1,
        RookPlacement(FerrersBoard.staircase(n), image.rook.entries),
        FilePlacement(FerrersBoard.staircase(image.j + 1), image.file.entries),
    )


def involution_verify(n: int, k: int) -> dict:
    """Exhaustively check the involution on the full (n, k) domain.

    Confirms: the map stays inside the domain, is a fixed-point-free
    involution, flips the sign, preserves the weight, and therefore the
    signed weight sum over the domain vanishes.
    """
    if not 1 <= k < n:
        raise ValueError("the involution is defined for 1 <= k < n")
    domain = list(involution_domain(n, k))
    index = {pair: i for i, pair in enumerate(domain)}
    signed_total = PQRPoly.zero()
    counterexamples = []
    per_j: dict[int, int] = {}
    for pair in domain:
        per_j[pair.j] = per_j.get(pair.j, 0) + 1
        signed_total = signed_total + pair.sign() * pair.weight()
        image = involution(n, k, pair)
        problems = []
        if image not in index:
            problems.append("image outside domain")
        if image == pair:
            problems.append("fixed point")
        if image.sign() != -pair.sign():
            problems.append("sign not flipped")
        if image.weight() != pair.weight():
            problems.append("weight changed")
        if involution(n, k, image) != pair:
            problems.append("not an involution")
        if problems:
            counterexamples.append({"pair": f"j={pair.j} {pair.rook};{pair.file}",
                                    "problems": problems})
    ok = not counterexamples and signed_total.is_zero
    return {
        "check": "involution",
        "range": f"n={n}, k={k}",
        "status": "PASS" if ok else "FAIL",
        "domain_size": len(domain),
        "pairs_per_j": {str(j): per_j[j] for j in sorted(per_j)},
        "signed_sum": str(signed_total),
        "counterexamples": counterexamples,
    }
