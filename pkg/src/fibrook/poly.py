"""Exact sparse polynomial arithmetic in the weight variables q, p and r.

All counting in this package is exact, so polynomials live in Z[q, p, r]
stored sparsely: a map from exponent triples (e_q, e_p, e_r) to nonzero
integer coefficients. The empty map is the zero polynomial. Equality is
equality of term maps, and printing follows a fixed graded term order, so
equal values always print identically; the CLI and the golden tests rely
on that.

On top of the ring this module provides the q-analogues ([n]_q with the
convention [0]_q = 1, q-factorials, q-binomials built by the Pascal-type
recursion so no division is ever performed), polynomials in a formal
variable x with PQRPoly coefficients (XPoly), and truncated power series
in t (TSeries) used for column generating functions. There is
deliberately no division or rational-function support: 1/(1 - c*t)
exists only as a truncated geometric series.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

Exponents = tuple[int, int, int]  # (e_q, e_p, e_r)

_VAR_SLOT = {"q": 0, "p": 1, "r": 2}


def _sort_key(exps: Exponents) -> tuple[int, int, int, int]:
    # graded order: total degree first, then the exponent triple itself
    return (exps[0] + exps[1] + exps[2], exps[0], exps[1], exps[2])


# ──────────────────────────────────────────────────────────────────────────
# core ring
# ──────────────────────────────────────────────────────────────────────────


class PQRPoly:
    """Polynomial in q, p, r with integer coefficients, canonical sparse form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        clean: dict[Exponents, int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                eq, ep, er = exps
                if eq < 0 or ep < 0 or er < 0:
                    raise ValueError(f"negative exponent in term {exps!r}")
                clean[(eq, ep, er)] = coeff
        self._terms = clean

    # construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> PQRPoly:
        return _ZERO

    @classmethod
    def one(cls) -> PQRPoly:
        return _ONE

    @classmethod
    def constant(cls, c: int) -> PQRPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def term(cls, coeff: int, e_q: int = 0, e_p: int = 0, e_r: int = 0) -> PQRPoly:
        return cls({(e_q, e_p, e_r): coeff})

    @classmethod
    def variable(cls, name: str) -> PQRPoly:
        if name not in _VAR_SLOT:
            raise ValueError(f"unknown variable {name!r}")
        exps = [0, 0, 0]
        exps[_VAR_SLOT[name]] = 1
        return cls({tuple(exps): 1})

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, int]:
        """Copy of the term map; keys are (e_q, e_p, e_r)."""
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self, var: str) -> int:
        """Largest exponent of `var`; -1 for the zero polynomial."""
        slot = _VAR_SLOT[var]
        if not self._terms:
            return -1
        return max(e[slot] for e in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(e[0] + e[1] + e[2] for e in self._terms)

    def coefficient(self, var: str, power: int) -> PQRPoly:
        """The polynomial in the remaining variables multiplying var**power."""
        slot = _VAR_SLOT[var]
        picked: dict[Exponents, int] = {}
        for exps, coeff in self._terms.items():
            if exps[slot] == power:
                reduced = list(exps)
                reduced[slot] = 0
                picked[tuple(reduced)] = coeff
        return PQRPoly(picked)

    def coefficients_in(self, var: str) -> list[PQRPoly]:
        """Coefficient list [c_0, ..., c_d] so that sum c_s * var**s == self."""
        d = self.degree(var)
        return [self.coefficient(var, s) for s in range(d + 1)]

    def as_int(self) -> int:
        """The value of a constant polynomial; raises if any variable survives."""
        if not self._terms:
            return 0
        if set(self._terms) != {(0, 0, 0)}:
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms[(0, 0, 0)]

    def eval_at(self, q: int, p: int = 0, r: int = 0) -> int:
        """Exact integer evaluation at q, p, r."""
        total = 0
        for (eq, ep, er), coeff in self._terms.items():
            total += coeff * q**eq * p**ep * r**er
        return total

    def substitute(
        self,
        q: int | None = None,
        p: int | None = None,
        r: int | None = None,
    ) -> PQRPoly:
        """Partial evaluation: plug in integers for some variables, keep the rest."""
        out: dict[Exponents, int] = {}
        for (eq, ep, er), coeff in self._terms.items():
            if q is not None:
                coeff *= q**eq
                eq = 0
            if p is not None:
                coeff *= p**ep
                ep = 0
            if r is not None:
                coeff *= r**er
                er = 0
            key = (eq, ep, er)
            out[key] = out.get(key, 0) + coeff
        return PQRPoly(out)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(value: PQRPoly | int) -> PQRPoly | None:
        if isinstance(value, PQRPoly):
            return value
        if isinstance(value, int):
            return PQRPoly.constant(value)
        return None

    def __add__(self, other: PQRPoly | int) -> PQRPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in rhs._terms.items():
            new = out.get(exps, 0) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        result = PQRPoly.__new__(PQRPoly)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> PQRPoly:
        result = PQRPoly.__new__(PQRPoly)
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other: PQRPoly | int) -> PQRPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: int) -> PQRPoly:
        return PQRPoly.constant(other) - self

    def __mul__(self, other: PQRPoly | int) -> PQRPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self._terms or not rhs._terms:
            return _ZERO
        out: dict[Exponents, int] = {}
        for (aq, ap, ar), ac in self._terms.items():
            for (bq, bp, br), bc in rhs._terms.items():
                key = (aq + bq, ap + bp, ar + br)
                new = out.get(key, 0) + ac * bc
                if new:
                    out[key] = new
                else:
                    del out[key]
        result = PQRPoly.__new__(PQRPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> PQRPoly:
        if exponent < 0:
            raise ValueError("negative powers are not defined in this ring")
        out = _ONE
        for _ in range(exponent):
            out = out * self
        return out

    # identity and printing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other) if isinstance(other, (PQRPoly, int)) else None
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps in sorted(self._terms, key=_sort_key):
            coeff = self._terms[exps]
            eq, ep, er = exps
            factors = []
            for name, e in (("p", ep), ("q", eq), ("r", er)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"PQRPoly({self})"


_ZERO = PQRPoly()
_ONE = PQRPoly({(0, 0, 0): 1})

Q = PQRPoly.variable("q")
P = PQRPoly.variable("p")
R = PQRPoly.variable("r")


# ──────────────────────────────────────────────────────────────────────────
# q-analogues
# ──────────────────────────────────────────────────────────────────────────


def q_int(n: int) -> PQRPoly:
    """[n]_q = 1 + q + ... + q^(n-1) for n >= 1, with [0]_q = 1."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    if n == 0:
        return _ONE
    return PQRPoly({(i, 0, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> PQRPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q, empty product for n = 0."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return _ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> PQRPoly:
    """Gaussian binomial, built by the Pascal-type recursion (no division)."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return _ONE
    return q_binomial(n - 1, k - 1) + PQRPoly.term(1, e_q=k) * q_binomial(n - 1, k)


# ──────────────────────────────────────────────────────────────────────────
# polynomials in x over Z[q, p, r]
# ──────────────────────────────────────────────────────────────────────────


class XPoly:
    """Polynomial in a formal variable x with PQRPoly coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[PQRPoly | int] = ()):
        lifted = [c if isinstance(c, PQRPoly) else PQRPoly.constant(c) for c in coeffs]
        while lifted and lifted[-1].is_zero:
            lifted.pop()
        self._coeffs = tuple(lifted)

    @classmethod
    def zero(cls) -> XPoly:
        return cls(())

    @classmethod
    def one(cls) -> XPoly:
        return cls((_ONE,))

    @classmethod
    def x_power(cls, n: int) -> XPoly:
        if n < 0:
            raise ValueError("x_power needs n >= 0")
        return cls([_ZERO] * n + [_ONE])

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[PQRPoly, ...]:
        return self._coeffs

    def coefficient(self, i: int) -> PQRPoly:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return _ZERO

    def __add__(self, other: XPoly) -> XPoly:
        if not isinstance(other, XPoly):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return XPoly(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        )

    def __sub__(self, other: XPoly) -> XPoly:
        if not isinstance(other, XPoly):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return XPoly(
            [self.coefficient(i) - other.coefficient(i) for i in range(size)]
        )

    def __mul__(self, other: XPoly | PQRPoly | int) -> XPoly:
        if isinstance(other, (PQRPoly, int)):
            return XPoly([c * other for c in self._coeffs])
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return XPoly.zero()
        out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def eval_at(self, x: int, q: int, p: int = 0, r: int = 0) -> int:
        total = 0
        for i, c in enumerate(self._coeffs):
            total += c.eval_at(q, p, r) * x**i
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        chunks = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c.is_zero:
                continue
            xpart = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not xpart:
                chunks.append(str(c))
            elif c == _ONE:
                chunks.append(xpart)
            else:
                chunks.append(f"({c})*{xpart}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"XPoly({self})"


def xpoly_product(factors: Sequence[tuple[int, PQRPoly]]) -> XPoly:
    """Product of linear factors (x + sign * c) for (sign, c) in `factors`.

    Signs must be +1 or -1; the empty product is 1.
    """
    out = XPoly.one()
    for sign, c in factors:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        out = out * XPoly([c if sign == 1 else -c, _ONE])
    return out


# ──────────────────────────────────────────────────────────────────────────
# truncated power series in t over Z[q, p, r]
# ──────────────────────────────────────────────────────────────────────────


class TSeries:
    """Power series in t truncated at a fixed order, coefficients in Z[q,p,r]."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[PQRPoly | int] = ()):
        if order < 0:
            raise ValueError("order must be >= 0")
        lifted = [c if isinstance(c, PQRPoly) else PQRPoly.constant(c) for c in coeffs]
        if len(lifted) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        lifted += [_ZERO] * (order + 1 - len(lifted))
        self._order = order
        self._coeffs = tuple(lifted)

    @classmethod
    def one(cls, order: int) -> TSeries:
        return cls(order, (_ONE,))

    @classmethod
    def geometric(cls, c: PQRPoly, order: int) -> TSeries:
        """1 + c t + c^2 t^2 + ... truncated: the expansion of 1/(1 - c t)."""
        coeffs = [_ONE]
        for _ in range(order):
            coeffs.append(coeffs[-1] * c)
        return cls(order, coeffs)

    @property
    def order(self) -> int:
        return self._order

    def coefficient(self, n: int) -> PQRPoly:
        if n < 0:
            return _ZERO
        if n > self._order:
            raise ValueError(f"coefficient t^{n} is beyond truncation order {self._order}")
        return self._coeffs[n]

    def __add__(self, other: TSeries) -> TSeries:
        if not isinstance(other, TSeries):
            return NotImplemented
        order = min(self._order, other._order)
        return TSeries(
            order,
            [self._coeffs[i] + other._coeffs[i] for i in range(order + 1)],
        )

    def __mul__(self, other: TSeries) -> TSeries:
        if not isinstance(other, TSeries):
            return NotImplemented
        order = min(self._order, other._order)
        out = [_ZERO] * (order + 1)
        for i in range(order + 1):
            a = self._coeffs[i]
            if a.is_zero:
                continue
            for j in range(order + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TSeries(order, out)

    def shifted(self, k: int) -> TSeries:
        """Multiply by t^k, dropping terms pushed past the truncation order."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        kept = self._coeffs[: self._order + 1 - k]
        return TSeries(self._order, [_ZERO] * k + list(kept))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __str__(self) -> str:
        chunks = [f"({c})*t^{n}" for n, c in enumerate(self._coeffs) if not c.is_zero]
        body = " + ".join(chunks) if chunks else "0"
        return f"{body} + O(t^{self._order + 1})"

    def __repr__(self) -> str:
        return f"TSeries({self})"


def tseries_geom(c: PQRPoly, order: int) -> TSeries:
    """Convenience alias for the truncated geometric series in t."""
    return TSeries.geometric(c, order)
