"""Coefficient triangles, basis expansions, inversion, and the involution."""

import pytest

from fibrook.board import FerrersBoard, parse_placement
from fibrook.poly import P, Q, PQRPoly, XPoly
from fibrook.stirling import (
    TRIANGLE_KINDS,
    PlacementPair,
    build_triangle,
    family_for_kind,
    falling_factorial_basis,
    involution,
    involution_domain,
    involution_verify,
    matrix_inverse_check,
    rising_factorial_basis,
    triangle_from_boards,
    verify_basis_expansions,
)
from fibrook.tiling import FIBONACCI, TRIBONACCI


# triangles --------------------------------------------------------------------


FROZEN_ENTRIES = [
    ("Sf", 3, 1, "q^2"),
    ("Sf", 4, 2, "q^2 + q^3 + q^4"),
    ("Sf", 4, 3, "q + p*q + q^2 + q^3"),
    ("Sf", 5, 1, "q^4"),
    ("cf", 4, 1, "p*q^4 + q^6"),
    ("cf", 4, 2, "p*q^2 + q^3 + p*q^3 + q^4 + q^5"),
    ("sf", 4, 1, "-p*q^4 - q^6"),
    ("Lf", 2, 1, "2*q"),
    ("Lf", 3, 1, "2*q^2 + 2*q^3"),
    ("Sp", 3, 1, "q^2"),
    ("Sp", 5, 3, "q^2 + p*q^2 + q^3 + p^2*q^2 + p*q^3 + 2*q^4 + 2*p*q^4 + q^5 + q^6"),
    ("cp", 5, 4, "q + q*r + p*q + q^2 + 2*p*q^2 + q^3 + q^4"),
]


@pytest.mark.parametrize("kind,n,k,text", FROZEN_ENTRIES)
def test_frozen_triangle_entries(kind: str, n: int, k: int, text: str):
    tri = build_triangle(kind, n)
    assert str(tri.entry(n, k)) == text


def test_triangle_boundaries():
    tri = build_triangle("Sf", 6)
    assert tri.entry(0, 0) == 1
    for n in range(1, 7):
        assert tri.entry(n, 0) == 0
        assert tri.entry(n, n) == 1
    assert tri.entry(4, 7) == 0
    assert tri.entry(4, -1) == 0
    with pytest.raises(ValueError):
        tri.entry(7, 0)
    with pytest.raises(ValueError):
        build_triangle("zz", 3)


def test_kind_families():
    assert set(TRIANGLE_KINDS) == {"cf", "sf", "Sf", "Lf", "cp", "sp", "Sp"}
    assert family_for_kind("cf") == FIBONACCI
    assert family_for_kind("Sp") == TRIBONACCI


def test_signed_kind_is_signed_unsigned_kind():
    for small, big in (("sf", "cf"), ("sp", "cp")):
        tri_s = build_triangle(small, 10)
        tri_c = build_triangle(big, 10)
        for n in range(11):
            for k in range(n + 1):
                want = tri_c.entry(n, k) * ((-1) ** ((n - k) % 2))
                assert tri_s.entry(n, k) == want


@pytest.mark.parametrize("kind", ["cf", "cp", "Sf", "Sp"])
def test_triangles_match_staircase_placements(kind: str):
    assert triangle_from_boards(kind, 7).rows == build_triangle(kind, 7).rows


def test_triangle_from_boards_rejects_other_kinds():
    with pytest.raises(ValueError):
        triangle_from_boards("Lf", 3)


def test_json_and_csv_views():
    tri = build_triangle("Sf", 2)
    assert tri.to_json_dict() == {
        "kind": "Sf",
        "N": 2,
        "entries": [["1"], ["0", "1"], ["0", "q", "1"]],
    }
    assert list(tri.csv_rows()) == [
        (0, 0, "1"),
        (1, 0, "0"),
        (1, 1, "1"),
        (2, 0, "0"),
        (2, 1, "q"),
        (2, 2, "1"),
    ]


# basis expansions ----------------------------------------------------------------


def test_factorial_bases():
    up3 = rising_factorial_basis(FIBONACCI, 3)
    assert up3.coefficient(2) == Q + Q**2
    assert up3.coefficient(1) == Q**3
    down3 = falling_factorial_basis(FIBONACCI, 3)
    assert down3.coefficient(2) == -(Q + Q**2)
    assert down3.coefficient(1) == Q**3
    assert rising_factorial_basis(FIBONACCI, 0) == XPoly.one()


def test_rising_factorial_expands_in_cf_row():
    # x (x + q) (x + q^2) = q^3 x + (q + q^2) x^2 + x^3 reads off row 3 of cf
    tri = build_triangle("cf", 3)
    up3 = rising_factorial_basis(FIBONACCI, 3)
    for k in range(4):
        assert up3.coefficient(k) == tri.entry(3, k)


@pytest.mark.parametrize("fam,N", [(FIBONACCI, 10), (TRIBONACCI, 8)])
def test_basis_expansions_verified(fam, N):
    report = verify_basis_expansions(N, fam)
    assert report["status"] == "PASS"
    assert report["counterexamples"] == []


# matrix inversion -----------------------------------------------------------------


@pytest.mark.parametrize("fam", [FIBONACCI, TRIBONACCI])
def test_triangles_are_mutually_inverse(fam):
    report = matrix_inverse_check(8, fam)
    assert report["status"] == "PASS"


def test_inverse_by_hand_row_three():
    Sf = build_triangle("Sf", 3)
    sf = build_triangle("sf", 3)
    for k in range(4):
        total = PQRPoly.zero()
        for j in range(4):
            total = total + Sf.entry(3, j) * sf.entry(j, k)
        assert total == (1 if k == 3 else 0)


# the involution -------------------------------------------------------------------


def _pair(n: int, j: int, rook_text: str, file_text: str) -> PlacementPair:
    rook = parse_placement(FerrersBoard.staircase(n), rook_text, model="rook")
    file = parse_placement(FerrersBoard.staircase(j), file_text, model="file")
    return PlacementPair(j, rook, file)


def test_involution_base_case_swaps_the_two_pairs():
    a = _pair(2, 1, "2:1", "")
    b = _pair(2, 2, "", "2:1")
    assert involution(2, 1, a) == b
    assert involution(2, 1, b) == a
    assert a.sign() == 1 and b.sign() == -1
    assert a.weight() == b.weight() == Q


def test_involution_moves_a_tiling_between_boards():
    # rook part tiles the last staircase column: its height-3 tiling moves
    # onto the new last column when the file board grows from B_3 to B_4
    pair = _pair(6, 3, "4:1,2;5:1,2;6:1,2", "2:1")
    image = involution(6, 2, pair)
    assert image.j == 4
    assert str(image.rook) == "4:1,2;5:1,2"
    assert str(image.file) == "2:1;4:1,2"
    assert involution(6, 2, image) == pair
    assert image.sign() == -pair.sign()
    assert image.weight() == pair.weight() == P**3 * Q**4


def test_involution_recursive_case():
    # neither last column is used, so the pair shrinks to (n-1, k-1),
    # where the rook part does use the last column
    pair = _pair(5, 3, "3:1,1;4:1,1", "2:1")
    image = involution(5, 2, pair)
    assert image.j == 4
    assert str(image.rook) == "3:1,1"
    assert str(image.file) == "2:1;3:1,1"
    assert involution(5, 2, image) == pair
    assert image.weight() == pair.weight() == Q**5


def test_involution_rejects_bad_input():
    with pytest.raises(ValueError):
        involution(3, 3, _pair(3, 3, "", ""))  # needs k < n
    with pytest.raises(ValueError):
        involution(4, 2, _pair(5, 3, "4:1,1;5:1,1", "2:1"))  # wrong boards


def test_involution_domain_size():
    pairs = list(involution_domain(2, 1))
    assert len(pairs) == 2
    report = involution_verify(5, 2)
    assert report["status"] == "PASS"
    assert report["domain_size"] == 78
    assert report["pairs_per_j"] == {"2": 4, "3": 22, "4": 35, "5": 17}
    assert report["signed_sum"] == "0"


@pytest.mark.parametrize("n", range(2, 7))
def test_involution_verified_small_range(n: int):
    for k in range(1, n):
        assert involution_verify(n, k)["status"] == "PASS"
