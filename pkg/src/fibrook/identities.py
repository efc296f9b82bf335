"""Closed forms, coefficient formulas, sequences and shape properties.

Everything here is a prediction about the triangles of `fibrook.stirling`,
and every check treats the triangle recursion as the source of truth: the
formulas are evaluated independently and compared entrywise. The checks
return JSON-ready report dicts {check, range, status, counterexamples}.

Covered: the generating function for a fixed column of the Sf triangle,
the small-column closed forms, the p^0 and p^1 coefficient extractions,
the q = 1 binomial specializations, the first two cf columns, Fibonacci
binomial coefficients (with the quotient cross-check), log-concavity and
unimodality of coefficient sequences, and bundled integer-sequence
fixtures exported by name.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from pathlib import Path

from fibrook.poly import PQRPoly, TSeries, q_binomial, q_factorial, q_int
from fibrook.stirling import CoeffTriangle, build_triangle
from fibrook.tiling import FIBONACCI, fibonacci_number, weight_poly

_FIXTURE_DIR = Path(__file__).parent / "fixtures"


# ──────────────────────────────────────────────────────────────────────────
# generating function for one column of the Sf triangle
# ──────────────────────────────────────────────────────────────────────────


def sf_column_series(k: int, order: int) -> TSeries:
    """Sum over n of Sf[n][k] t^n as a truncated series:
    t^k / ((1 - W_1 t)(1 - W_2 t) ... (1 - W_k t))."""
    if k < 1:
        raise ValueError("column index k must be >= 1")
    if order < k:
        raise ValueError("order must be >= k")
    series = TSeries.one(order)
    for i in range(1, k + 1):
        series = series * TSeries.geometric(weight_poly(FIBONACCI, i), order)
    return series.shifted(k)


# ──────────────────────────────────────────────────────────────────────────
# closed forms for the extreme columns
# ──────────────────────────────────────────────────────────────────────────

CLOSED_FORM_KINDS = ("Sf_n1", "Sf_n2", "cf_n1", "col_nm1")


def closed_form(kind: str, n: int) -> PQRPoly:
    """Closed forms: Sf_n1 = q^(n-1) (n >= 1), Sf_n2 = q^(n-2) [n-1]_q
    (n >= 2), cf_n1 = W_1 W_2 ... W_{n-1} (n >= 1), and col_nm1 =
    W_1 + ... + W_{n-1} (n >= 2), the shared value of the cf and Sf
    triangles at k = n-1."""
    if kind == "Sf_n1":
        if n < 1:
            raise ValueError("Sf_n1 needs n >= 1")
        return PQRPoly.term(1, e_q=n - 1)
    if kind == "Sf_n2":
        if n < 2:
            raise ValueError("Sf_n2 needs n >= 2")
        return PQRPoly.term(1, e_q=n - 2) * q_int(n - 1)
    if kind == "cf_n1":
        if n < 1:
            raise ValueError("cf_n1 needs n >= 1")
        out = PQRPoly.one()
        for i in range(1, n):
            out = out * weight_poly(FIBONACCI, i)
        return out
    if kind == "col_nm1":
        if n < 2:
            raise ValueError("col_nm1 needs n >= 2")
        out = PQRPoly.zero()
        for i in range(1, n):
            out = out + weight_poly(FIBONACCI, i)
        return out
    raise ValueError(f"unknown closed form kind {kind!r}")


# ──────────────────────────────────────────────────────────────────────────
# low p-degree coefficients of Sf, as polynomials in q
# ──────────────────────────────────────────────────────────────────────────


def sf_p_coefficient_formula(n: int, k: int, s: int) -> PQRPoly:
    """The coefficient of p^s in Sf[n][k] for s in {0, 1}, in closed form.

    s = 0 (n >= k >= 1): tilings use height-1 tiles only, giving
        q^(n-k) * qbinom(n-1, k-1).
    s = 1 (n > k >= 3): one height-2 tile; summing over its position gives
        q^(n-k) * sum over m of m q^(m-1) *
        sum over i of q^(i(m+1)) qbinom(i+k-m-2, i) qbinom(m+n-k-i, m+1).
    """
    if s == 0:
        if not 1 <= k <= n:
            raise ValueError("s=0 needs n >= k >= 1")
        return PQRPoly.term(1, e_q=n - k) * q_binomial(n - 1, k - 1)
    if s == 1:
        if not 3 <= k < n:
            raise ValueError("s=1 needs n > k >= 3")
        total = PQRPoly.zero()
        for m in range(1, k - 1):
            inner = PQRPoly.zero()
            for i in range(0, n - k):
                inner = inner + (
                    PQRPoly.term(1, e_q=i * (m + 1))
                    * q_binomial(i + k - m - 2, i)
                    * q_binomial(m + n - k - i, m + 1)
                )
            total = total + m * PQRPoly.term(1, e_q=m - 1) * inner
        return PQRPoly.term(1, e_q=n - k) * total
    raise ValueError("only s in {0, 1} have displayed formulas")


def sf_q1_coefficient(n: int, k: int, s: int) -> int:
    """Predicted integer coefficient of p^s in Sf[n][k] with q set to 1.

    Columns 3, 4 and 5 have binomial forms for every stated s; for other
    columns only s = 0 (from the qbinom formula) and s = 1 (the product
    C(k-1, 2) C(n-1, k)) are available.
    """
    if k == 3:
        if n < 3 or s < 0:
            raise ValueError("column 3 needs n >= 3 and s >= 0")
        return comb(n - 1, s + 2)
    if k == 4:
        if n < 4 or s < 0:
            raise ValueError("column 4 needs n >= 4 and s >= 0")
        return (2 ** (s + 1) - 1) * comb(n - 1, s + 3)
    if k == 5:
        if n < 5:
            raise ValueError("column 5 needs n >= 5")
        if s == 0:
            return comb(n - 1, 4)
        if s == 1:
            return 6 * comb(n - 1, 5)
        if s == 2:
            return 25 * comb(n - 1, 6) + comb(n - 1, 5)
        if s == 3:
            return 90 * comb(n - 1, 7) + 9 * comb(n - 1, 6)
        if s == 4:
            return 301 * comb(n - 1, 8) + 52 * comb(n - 1, 7) + comb(n - 1, 6)
        raise ValueError("column 5 has stated formulas for s <= 4 only")
    if s == 0:
        if not 1 <= k <= n:
            raise ValueError("s=0 needs n >= k >= 1")
        return comb(n - 1, k - 1)
    if s == 1:
        if not 3 <= k <= n:
            raise ValueError("s=1 needs n >= k >= 3")
        return comb(k - 1, 2) * comb(n - 1, k)
    raise ValueError(f"no stated formula for column {k} at s={s}")


# ──────────────────────────────────────────────────────────────────────────
# the first two columns of cf
# ──────────────────────────────────────────────────────────────────────────


def cf_column_coefficient_formula(n: int, col: int, s: int) -> PQRPoly:
    """The coefficient of p^s in cf[n][col] for col=1 (s <= 3), col=2 (s <= 1).

    Column 1 collects a single q-power; column 2 at s = 1 is a two-part sum.
    Below each formula's threshold the coefficient is zero.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if col == 1:
        if s == 0:
            return PQRPoly.term(1, e_q=comb(n, 2))
        if s == 1:
            c = comb(n - 2, 2) if n >= 4 else 0
            return PQRPoly.term(c, e_q=comb(n, 2) - 2) if c else PQRPoly.zero()
        if s == 2:
            c = 3 * comb(n - 1, 4) - comb(n - 3, 2) if n >= 5 else 0
            return PQRPoly.term(c, e_q=comb(n, 2) - 4) if c else PQRPoly.zero()
        if s == 3:
            c = 15 * comb(n, 6) - 6 * comb(n - 2, 4) + comb(n - 4, 4) if n >= 6 else 0
            return PQRPoly.term(c, e_q=comb(n, 2) - 6) if c else PQRPoly.zero()
        raise ValueError("column 1 has stated formulas for s <= 3 only")
    if col == 2:
        if s == 0:
            if n < 2:
                return PQRPoly.zero()
            return PQRPoly.term(1, e_q=comb(n - 1, 2)) * q_int(n - 1)
        if s == 1:
            if n < 4:
                return PQRPoly.zero()
            first = PQRPoly.term(comb(n - 2, 2), e_q=comb(n, 2) - 3)
            ramp = PQRPoly.zero()
            for i in range(0, n - 2):
                ramp = ramp + PQRPoly.term(comb(n - 3, 2) + i, e_q=i)
            return first + PQRPoly.term(1, e_q=comb(n - 1, 2) - 2) * ramp
        raise ValueError("column 2 has stated formulas for s <= 1 only")
    raise ValueError("only columns 1 and 2 have stated formulas")


def cf_col2_p_coefficient_at_q1(n: int) -> int:
    """Total number of weight contributions to p^1 in cf[n][2]: (n-2) C(n-2, 2)."""
    if n < 4:
        raise ValueError("needs n >= 4")
    return (n - 2) * comb(n - 2, 2)


# ──────────────────────────────────────────────────────────────────────────
# Fibonacci binomial coefficients
# ──────────────────────────────────────────────────────────────────────────


@lru_cache(maxsize=None)
def fibonomial(n: int, k: int) -> int:
    """Fibonacci binomial by Gould's recursion
    C_F(n,k) = F_{k+1} C_F(n-1,k) + F_{n-k-1} C_F(n-1,k-1),
    with C_F(n,0) = C_F(n,n) = 1."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0 or k == n:
        return 1
    return fibonacci_number(k + 1) * fibonomial(n - 1, k) + fibonacci_number(
        n - k - 1
    ) * fibonomial(n - 1, k - 1)


def fibonomial_quotient(n: int, k: int) -> int:
    """The quotient definition n_F! / (k_F! (n-k)_F!), exact division enforced."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")

    def fib_factorial(m: int) -> int:
        out = 1
        for i in range(1, m + 1):
            out *= fibonacci_number(i)
        return out

    num = fib_factorial(n)
    den = fib_factorial(k) * fib_factorial(n - k)
    quotient, remainder = divmod(num, den)
    if remainder:
        raise AssertionError(f"fibonomial({n},{k}) is not integral, which is impossible")
    return quotient


# ──────────────────────────────────────────────────────────────────────────
# shape properties of coefficient sequences
# ──────────────────────────────────────────────────────────────────────────


def _strip_zeros(seq: list[int]) -> list[int]:
    lo, hi = 0, len(seq)
    while lo < hi and seq[lo] == 0:
        lo += 1
    while hi > lo and seq[hi - 1] == 0:
        hi -= 1
    return seq[lo:hi]


def log_concave(seq) -> bool:
    """a_i^2 >= a_{i-1} a_{i+1} for the zero-stripped sequence (out-of-range
    terms count as 0, so the endpoints never fail)."""
    inner = _strip_zeros(list(seq))
    return all(
        inner[i] * inner[i] >= inner[i - 1] * inner[i + 1]
        for i in range(1, len(inner) - 1)
    )


def unimodal(seq) -> bool:
    """Weakly rises to a single peak, then weakly falls (after zero-stripping)."""
    inner = _strip_zeros(list(seq))
    if not inner:
        return True
    i = 0
    while i + 1 < len(inner) and inner[i] <= inner[i + 1]:
        i += 1
    while i + 1 < len(inner) and inner[i] >= inner[i + 1]:
        i += 1
    return i == len(inner) - 1


def p_coefficient_sequence(entry: PQRPoly) -> list[int]:
    """Integer coefficients of p^0, p^1, ... after setting q = 1 (and r = 1)."""
    at_q1 = entry.substitute(q=1, r=1)
    return [c.as_int() for c in at_q1.coefficients_in("p")]


# ──────────────────────────────────────────────────────────────────────────
# bundled integer sequences
# ──────────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class SequenceFixture:
    name: str
    values: tuple[int, ...]
    start_n: int
    source: str


@dataclass(frozen=True)
class SequenceReport:
    fixture: SequenceFixture
    generated: tuple[int, ...]
    status: str  # MATCH or MISMATCH
    warn: str | None = None


def _read_fixture(filename: str) -> tuple[int, ...]:
    text = (_FIXTURE_DIR / filename).read_text(encoding="utf-8")
    return tuple(int(line) for line in text.split())


def _a086602(n: int) -> int:
    return 3 * comb(n - 1, 4) - comb(n - 3, 2)


def _cfn1p3(n: int) -> int:
    return 15 * comb(n, 6) - 6 * comb(n - 2, 4) + comb(n - 4, 4)


def _a006002(n: int) -> int:
    return (n - 2) * comb(n - 2, 2)


_SEQUENCES = {
    "A086602": (
        _a086602,
        5,
        "A086602.txt",
        "3*C(n-1,4) - C(n-3,2), n >= 5; the p^2 count in cf[n][1]; OEIS A086602",
        None,
    ),
    "cfn1p3": (
        _cfn1p3,
        6,
        "cfn1p3.txt",
        "15*C(n,6) - 6*C(n-2,4) + C(n-4,4), n >= 6; the p^3 count in cf[n][1]",
        None,
    ),
    "A006002": (
        _a006002,
        4,
        "A006002.txt",
        "(n-2)*C(n-2,2), n >= 4; the p^1 count in cf[n][2] at q = 1; OEIS A006002",
        "A006002_variant.txt",
    ),
}

SEQUENCE_NAMES = tuple(sorted(_SEQUENCES))


def sequence_export(name: str) -> SequenceReport:
    """Regenerate a registered sequence from its formula and compare with the
    bundled fixture prefix. A registered variant transcription that is known
    to disagree produces a WARN note, never a failure."""
    if name not in _SEQUENCES:
        raise KeyError(f"unknown sequence {name!r}; known: {', '.join(SEQUENCE_NAMES)}")
    fn, start_n, fixture_file, source, variant_file = _SEQUENCES[name]
    values = _read_fixture(fixture_file)
    generated = tuple(fn(n) for n in range(start_n, start_n + len(values)))
    fixture = SequenceFixture(name, values, start_n, source)
    status = "MATCH" if generated == values else "MISMATCH"
    warn = None
    if variant_file is not None:
        variant = _read_fixture(variant_file)
        if variant != values[: len(variant)]:
            missing = sorted(set(values) - set(variant))
            warn = (
                "a previously circulated transcription of this sequence reads "
                + ",".join(str(v) for v in variant[:6])
                + ",...; it omits "
                + ",".join(str(v) for v in missing)
                + " relative to the formula values"
            )
    return SequenceReport(fixture, generated, status, warn)


# ──────────────────────────────────────────────────────────────────────────
# verification reports
# ──────────────────────────────────────────────────────────────────────────


def check_series_columns(N: int = 12, kmax: int = 6) -> dict:
    """Series coefficients equal triangle entries: t^n coefficient = Sf[n][k]."""
    tri = build_triangle("Sf", N)
    bad = []
    for k in range(1, kmax + 1):
        series = sf_column_series(k, N)
        for n in range(N + 1):
            want = tri.entry(n, k)
            got = series.coefficient(n)
            if got != want:
                bad.append({"n": n, "k": k, "series": str(got), "triangle": str(want)})
    return {
        "check": "sf-column-series",
        "range": f"k<={kmax}, order {N}",
        "status": "PASS" if not bad else "FAIL",
        "counterexamples": bad,
    }


def check_closed_forms(N: int = 20) -> dict:
    """The four extreme-column closed forms against the triangles."""
    sf_tri = build_triangle("Sf", N)
    cf_tri = build_triangle("cf", N)
    bad = []
    for n in range(1, N + 1):
        cases = [("Sf_n1", sf_tri.entry(n, 1), closed_form("Sf_n1", n))]
        if n >= 2:
            cases.append(("Sf_n2", sf_tri.entry(n, 2), closed_form("Sf_n2", n)))
        cases.append(("cf_n1", cf_tri.entry(n, 1), closed_form("cf_n1", n)))
        if n >= 2:
            shared = closed_form("col_nm1", n)
            cases.append(("col_nm1(cf)", cf_tri.entry(n, n - 1), shared))
            cases.append(("col_nm1(Sf)", sf_tri.entry(n, n - 1), shared))
        for label, got, want in cases:
            if got != want:
                bad.append({"form": label, "n": n, "triangle": str(got), "formula": str(want)})
    return {
        "check": "closed-forms",
        "range": f"n<={N}",
        "status": "PASS" if not bad else "FAIL",
        "counterexamples": bad,
    }


def check_sf_p_coefficients(N: int = 12) -> dict:
    """p^0 and p^1 coefficient formulas for Sf against the triangle."""
    tri = build_triangle("Sf", N)
    bad = []
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            want = tri.entry(n, k).coefficient("p", 0)
            got = sf_p_coefficient_formula(n, k, 0)
            if got != want:
                bad.append({"n": n, "k": k, "s": 0, "formula": str(got), "triangle": str(want)})
    for n in range(4, N + 1):
        for k in range(3, n):
            want = tri.entry(n, k).coefficient("p", 1)
            got = sf_p_coefficient_formula(n, k, 1)
            if got != want:
                bad.append({"n": n, "k": k, "s": 1, "formula": str(got), "triangle": str(want)})
    return {
        "check": "sf-p-coefficients",
        "range": f"s=0: k<=n<={N}; s=1: 3<=k<n<={N}",
        "status": "PASS" if not bad else "FAIL",
        "counterexamples": bad,
    }


def check_q1_specializations(N: int = 20, N_single: int = 14) -> dict:
    """Binomial formulas for Sf columns 3..5 at q = 1, plus the single-p
    product formula for every column."""
    tri = build_triangle("Sf", max(N, N_single))
    bad = []
    for k in (3, 4, 5):
        for n in range(k, N + 1):
            coeffs = p_coefficient_sequence(tri.entry(n, k))
            smax = (n - 1) if k != 5 else 4
            for s in range(0, smax + 1):
                got = sf_q1_coefficient(n, k, s)
                have = coeffs[s] if s < len(coeffs) else 0
                if got != have:
                    bad.append({"n": n, "k": k, "s": s, "formula": got, "triangle": have})
    for n in range(3, N_single + 1):
        for k in range(3, n):
            coeffs = p_coefficient_sequence(tri.entry(n, k))
            have = coeffs[1] if len(coeffs) > 1 else 0
            got = sf_q1_coefficient(n, k, 1)
            if got != have:
                bad.append({"n": n, "k": k, "s": 1, "formula": got, "triangle": have})
    return {
        "check": "sf-q1-specializations",
        "range": f"k in 3..5, n<={N}; single-p product for 3<=k<n<={N_single}",
        "status": "PASS" if not bad else "FAIL",
        "counterexamples": bad,
    }


def check_cf_columns(N: int = 20) -> dict:
    """Column 1 (s <= 3) and column 2 (s <= 1) formulas for cf, plus the
    integer count of the column-2 p coefficient at q = 1."""
    tri = build_triangle("cf", N)
    bad = []
    for n in range(1, N + 1):
        for s in range(4):
            want = tri.entry(n, 1).coefficient("p", s)
            got = cf_column_coefficient_formula(n, 1, s)
            if got != want:
                bad.append({"col": 1, "n": n, "s": s, "formula": str(got), "triangle": str(want)})
        for s in range(2):
            want = tri.entry(n, 2).coefficient("p", s)
            got = cf_column_coefficient_formula(n, 2, s)
            if got != want:
                bad.append({"col": 2, "n": n, "s": s, "formula": str(got), "triangle": str(want)})
        if n >= 4:
            want_int = tri.entry(n, 2).coefficient("p", 1).eval_at(1)
            got_int = cf_col2_p_coefficient_at_q1(n)
            if got_int != want_int:
                bad.append({"col": 2, "n": n, "s": 1, "at_q1": True,
                            "formula": got_int, "triangle": want_int})
    return {
        "check": "cf-column-coefficients",
        "range": f"n<={N}",
        "status": "PASS" if not bad else "FAIL",
        "counterexamples": bad,
    }


def check_fibonomials(N: int = 30) -> dict:
    """Gould recursion vs quotient definition, positivity, symmetry."""
    bad = []
    for n in range(N + 1):
        for k in range(n + 1):
            value = fibonomial(n, k)
            quotient = fibonomial_quotient(n, k)
            if value != quotient:
                bad.append({"n": n, "k": k, "recursion": value, "quotient": quotient})
            if value <= 0:
                bad.append({"n": n, "k": k, "value": value, "problem": "not positive"})
            if value != fibonomial(n, n - k):
                bad.append({"n": n, "k": k, "problem": "not symmetric"})
    return {
        "check": "fibonomials",
        "range": f"n<={N}",
        "status": "PASS" if not bad else "FAIL",
        "counterexamples": bad,
    }


def check_sequences() -> dict:
    """Every registered sequence regenerates its fixture; known variant
    transcriptions surface as WARN."""
    bad = []
    warnings = []
    for name in SEQUENCE_NAMES:
        report = sequence_export(name)
        if report.status != "MATCH":
            bad.append({"name": name, "generated": list(report.generated),
                        "fixture": list(report.fixture.values)})
        if report.warn:
            warnings.append({"name": name, "note": report.warn})
    status = "FAIL" if bad else ("WARN" if warnings else "PASS")
    return {
        "check": "sequences",
        "range": ", ".join(SEQUENCE_NAMES),
        "status": status,
        "counterexamples": bad,
        "warnings": warnings,
    }


def check_log_concavity(
    sf_N: int = 25,
    sf_kmax: int = 4,
    empirical_N: int = 18,
    empirical_kmax: int = 8,
    cf_N: int = 20,
) -> dict:
    """Log-concavity of Sf[n][k](p, 1) coefficient sequences: proved for
    k <= 4 (FAIL on violation), empirical for k = 5..8 (WARN on violation);
    cf[n][1](p, 1) is log-concave via real-rootedness (FAIL on violation)."""
    tri = build_triangle("Sf", max(sf_N, empirical_N))
    cf_tri = build_triangle("cf", cf_N)
    bad = []
    warnings = []
    for n in range(1, sf_N + 1):
        for k in range(1, min(sf_kmax, n) + 1):
            seq = p_coefficient_sequence(tri.entry(n, k))
            if not log_concave(seq):
                bad.append({"kind": "Sf", "n": n, "k": k, "sequence": seq})
    for n in range(1, empirical_N + 1):
        for k in range(sf_kmax + 1, min(empirical_kmax, n) + 1):
            seq = p_coefficient_sequence(tri.entry(n, k))
            if not log_concave(seq):
                warnings.append({"kind": "Sf", "n": n, "k": k, "sequence": seq})
    for n in range(1, cf_N + 1):
        seq = p_coefficient_sequence(cf_tri.entry(n, 1))
        if not log_concave(seq):
            bad.append({"kind": "cf", "n": n, "k": 1, "sequence": seq})
    status = "FAIL" if bad else ("WARN" if warnings else "PASS")
    return {
        "check": "log-concavity",
        "range": (
            f"Sf k<={sf_kmax} n<={sf_N} and cf col 1 n<={cf_N} asserted; "
            f"Sf k={sf_kmax + 1}..{empirical_kmax} n<={empirical_N} empirical"
        ),
        "status": status,
        "counterexamples": bad,
        "warnings": warnings,
    }
