"""Closed forms, coefficient formulas, fibonomials, sequences, shape checks."""

from math import comb

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fibrook.identities import (
    CLOSED_FORM_KINDS,
    SEQUENCE_NAMES,
    cf_col2_p_coefficient_at_q1,
    cf_column_coefficient_formula,
    check_closed_forms,
    check_fibonomials,
    check_log_concavity,
    check_sequences,
    check_series_columns,
    closed_form,
    fibonomial,
    fibonomial_quotient,
    log_concave,
    p_coefficient_sequence,
    sequence_export,
    sf_column_series,
    sf_p_coefficient_formula,
    sf_q1_coefficient,
    unimodal,
)
from fibrook.poly import P, Q, PQRPoly
from fibrook.stirling import build_triangle


# generating series -----------------------------------------------------------


def test_series_matches_triangle_columns():
    tri = build_triangle("Sf", 10)
    for k in range(1, 6):
        series = sf_column_series(k, 10)
        for n in range(11):
            assert series.coefficient(n) == tri.entry(n, k)


def test_series_frozen_coefficient():
    assert str(sf_column_series(2, 4).coefficient(3)) == "q + q^2"
    with pytest.raises(ValueError):
        sf_column_series(0, 5)
    with pytest.raises(ValueError):
        sf_column_series(3, 2)


# closed forms ------------------------------------------------------------------


def test_closed_form_frozen_values():
    assert closed_form("Sf_n1", 5) == Q**4
    assert closed_form("Sf_n2", 4) == Q**2 + Q**3 + Q**4
    assert closed_form("cf_n1", 4) == P * Q**4 + Q**6
    assert str(closed_form("col_nm1", 4)) == "q + p*q + q^2 + q^3"
    with pytest.raises(ValueError):
        closed_form("Sf_n2", 1)
    with pytest.raises(ValueError):
        closed_form("nope", 5)


def test_closed_forms_match_triangles():
    assert set(CLOSED_FORM_KINDS) == {"Sf_n1", "Sf_n2", "cf_n1", "col_nm1"}
    Sf = build_triangle("Sf", 14)
    cf = build_triangle("cf", 14)
    for n in range(1, 15):
        assert closed_form("Sf_n1", n) == Sf.entry(n, 1)
        assert closed_form("cf_n1", n) == cf.entry(n, 1)
        if n >= 2:
            assert closed_form("Sf_n2", n) == Sf.entry(n, 2)
            # both triangles agree one step below the diagonal
            shared = closed_form("col_nm1", n)
            assert cf.entry(n, n - 1) == shared
            assert Sf.entry(n, n - 1) == shared


# p-coefficients of Sf ------------------------------------------------------------


def test_sf_p_formula_matches_triangle():
    tri = build_triangle("Sf", 12)
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert sf_p_coefficient_formula(n, k, 0) == tri.entry(n, k).coefficient("p", 0)
            if 3 <= k < n:
                assert sf_p_coefficient_formula(n, k, 1) == tri.entry(n, k).coefficient("p", 1)


def test_sf_p_formula_frozen_and_domain():
    assert str(sf_p_coefficient_formula(5, 3, 1)) == "q^2 + q^3 + 2*q^4"
    with pytest.raises(ValueError):
        sf_p_coefficient_formula(4, 4, 1)  # needs k < n
    with pytest.raises(ValueError):
        sf_p_coefficient_formula(5, 3, 2)  # no displayed formula


def test_sf_q1_values_match_triangle():
    tri = build_triangle("Sf", 14)
    for n in range(3, 15):
        for k in range(3, min(n, 6)):
            coeffs = p_coefficient_sequence(tri.entry(n, k))
            if k == 3:
                stated = range(len(coeffs))
            elif k == 4:
                stated = range(len(coeffs))
            else:
                stated = range(min(len(coeffs), 5))
            for s in stated:
                assert sf_q1_coefficient(n, k, s) == coeffs[s]
        # the two all-column formulas
        for k in range(1, n + 1):
            coeffs = p_coefficient_sequence(tri.entry(n, k))
            assert sf_q1_coefficient(n, k, 0) == coeffs[0]
            if 3 <= k < n and len(coeffs) > 1:
                assert sf_q1_coefficient(n, k, 1) == coeffs[1]


def test_sf_q1_frozen_spot_values():
    assert sf_q1_coefficient(5, 3, 1) == 4
    assert sf_q1_coefficient(7, 5, 2) == 31
    assert sf_q1_coefficient(9, 4, 2) == 7 * comb(8, 5)
    with pytest.raises(ValueError):
        sf_q1_coefficient(8, 6, 2)


# cf columns -----------------------------------------------------------------------


def test_cf_column_formulas_match_triangle():
    tri = build_triangle("cf", 14)
    for n in range(1, 15):
        entry1 = tri.entry(n, 1)
        for s in range(4):
            assert cf_column_coefficient_formula(n, 1, s) == entry1.coefficient("p", s)
        entry2 = tri.entry(n, 2)
        for s in range(2):
            assert cf_column_coefficient_formula(n, 2, s) == entry2.coefficient("p", s)


def test_cf_column_frozen_values():
    assert cf_column_coefficient_formula(5, 1, 2) == 2 * Q**6
    assert cf_column_coefficient_formula(6, 1, 3) == 9 * Q**9
    assert cf_column_coefficient_formula(4, 2, 1) == Q**2 + Q**3
    assert cf_column_coefficient_formula(3, 1, 1) == 0  # below threshold
    with pytest.raises(ValueError):
        cf_column_coefficient_formula(5, 3, 0)


def test_cf_col2_count_at_q1():
    cf = build_triangle("cf", 10)
    for n in range(4, 11):
        want = cf.entry(n, 2).coefficient("p", 1).eval_at(1)
        assert cf_col2_p_coefficient_at_q1(n) == want
    assert cf_col2_p_coefficient_at_q1(4) == 2
    assert cf_col2_p_coefficient_at_q1(7) == 50
    with pytest.raises(ValueError):
        cf_col2_p_coefficient_at_q1(3)


# fibonomials -----------------------------------------------------------------------


def test_fibonomial_rows():
    rows = [[fibonomial(n, k) for k in range(n + 1)] for n in range(6)]
    assert rows == [
        [1],
        [1, 1],
        [1, 1, 1],
        [1, 2, 2, 1],
        [1, 3, 6, 3, 1],
        [1, 5, 15, 15, 5, 1],
    ]


def test_fibonomial_matches_quotient_and_symmetry():
    for n in range(21):
        for k in range(n + 1):
            value = fibonomial(n, k)
            assert value == fibonomial_quotient(n, k)
            assert value == fibonomial(n, n - k)
            assert isinstance(value, int) and value >= 1
    with pytest.raises(ValueError):
        fibonomial(3, 4)


# log-concavity and unimodality ------------------------------------------------------


def test_shape_predicates_on_known_sequences():
    assert log_concave([1, 2, 3, 2, 1])
    assert unimodal([1, 2, 3, 2, 1])
    assert not log_concave([1, 1, 4, 1])
    assert unimodal([1, 1, 4, 1])
    assert not unimodal([1, 3, 2, 3, 1])
    assert log_concave([0, 0, 2, 5, 3, 0])  # padding zeros are stripped
    assert not log_concave([1, 0, 1])
    assert log_concave([])
    assert unimodal([])
    assert unimodal([7])


@given(st.lists(st.integers(1, 40), min_size=1, max_size=8))
def test_log_concave_positive_implies_unimodal(seq):
    assume(log_concave(seq))
    assert unimodal(seq)


def test_triangle_p_coefficients_are_well_shaped():
    tri = build_triangle("Sf", 16)
    for n in range(3, 17):
        for k in (3, 4):
            seq = p_coefficient_sequence(tri.entry(n, k))
            assert log_concave(seq)
            assert unimodal(seq)


# bundled sequences -------------------------------------------------------------------


def test_sequence_registry():
    assert SEQUENCE_NAMES == ("A006002", "A086602", "cfn1p3")
    with pytest.raises(KeyError):
        sequence_export("nope")


def test_a086602_prefix():
    report = sequence_export("A086602")
    assert report.status == "MATCH"
    assert report.generated == (2, 12, 39, 95, 195, 357, 602, 954)
    assert report.warn is None
    # the generating formula is the q=1 count of p^2 tilings in cf[n][1]
    cf = build_triangle("cf", 12)
    for i, n in enumerate(range(5, 13)):
        assert report.generated[i] == cf.entry(n, 1).coefficient("p", 2).eval_at(1)


def test_cfn1p3_prefix():
    report = sequence_export("cfn1p3")
    assert report.status == "MATCH"
    assert report.generated[:4] == (9, 75, 331, 1055)
    cf = build_triangle("cf", 10)
    for i, n in enumerate(range(6, 11)):
        assert report.generated[i] == cf.entry(n, 1).coefficient("p", 3).eval_at(1)


def test_a006002_match_with_variant_warning():
    report = sequence_export("A006002")
    assert report.status == "MATCH"
    assert report.generated[:6] == (2, 9, 24, 50, 90, 147)
    assert report.generated == tuple(
        (n - 2) * comb(n - 2, 2) for n in range(4, 4 + len(report.generated))
    )
    assert report.warn is not None
    assert "50" in report.warn


# report plumbing ----------------------------------------------------------------------


def test_check_reports_pass():
    assert check_series_columns(8, 4)["status"] == "PASS"
    assert check_closed_forms(10)["status"] == "PASS"
    assert check_fibonomials(12)["status"] == "PASS"


def test_check_sequences_warns_but_passes():
    report = check_sequences()
    assert report["status"] == "WARN"
    assert report["counterexamples"] == []
    assert len(report["warnings"]) == 1


def test_check_log_concavity_small():
    report = check_log_concavity(sf_N=12, sf_kmax=4, empirical_N=10, empirical_kmax=6, cf_N=10)
    assert report["status"] in ("PASS", "WARN")
    assert report["counterexamples"] == []
