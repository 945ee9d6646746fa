"""Exact coefficient arithmetic.

``LaurentPoly`` is a sparse Laurent polynomial in ``t`` with arbitrary
precision rational coefficients.  ``QtPoly`` is a polynomial in ``q`` whose
coefficients are ``LaurentPoly`` values.  ``CycloElem`` is a residue class
modulo a cyclotomic polynomial, which lets q-polynomials be evaluated at a
primitive root of unity without leaving exact arithmetic.

Everything in this module is immutable after construction and every operation
is a pure function, so values are safe to share between concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Union

Scalar = Union[int, Fraction]


def _clean(c: Scalar) -> Scalar:
    """Collapse integral fractions to plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _coeff_to_json(c: Scalar):
    c = _clean(c)
    if isinstance(c, int):
        return c
    return f"{c.numerator}/{c.denominator}"


def _coeff_from_json(obj) -> Scalar:
    if isinstance(obj, str):
        num, _, den = obj.partition("/")
        return _clean(Fraction(int(num), int(den or "1")))
    return int(obj)


class LaurentPoly:
    """Sparse Laurent polynomial in t over the rationals.

    Terms are kept canonical: no zero coefficients are stored, and equality is
    termwise.

    >>> LaurentPoly({0: 1, 1: 4, 2: 1}).pretty()
    '1 + 4*t + t^2'
    >>> LaurentPoly({-2: -1, -1: -1}).pretty()
    '-t^-2 - t^-1'
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        cleaned: dict[int, Scalar] = {}
        if terms:
            for e, c in terms.items():
                c = _clean(c)
                if c:
                    cleaned[int(e)] = c
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def t_power(cls, e: int, c: Scalar = 1) -> "LaurentPoly":
        return cls({e: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, e: int) -> Scalar:
        return self.terms.get(e, 0)

    def degree(self) -> int | None:
        """Top exponent, or None for the zero polynomial."""
        return max(self.terms) if self.terms else None

    def valuation(self) -> int | None:
        """Bottom exponent, or None for the zero polynomial."""
        return min(self.terms) if self.terms else None

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentPoly.const(other).terms
        return NotImplemented

    __hash__ = None  # mutable mapping inside; never used as a key

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other) -> "LaurentPoly":
        """Exact division; raises ValueError when the quotient is not Laurent."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * Fraction(1, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero()
        min_shift = self.valuation() - other.valuation()
        gdeg = other.degree()
        glc = other.terms[gdeg]
        rem = dict(self.terms)
        quo: dict[int, Scalar] = {}
        while rem:
            rdeg = max(rem)
            shift = rdeg - gdeg
            if shift < min_shift:
                raise ValueError("not divisible")
            c = _clean(Fraction(rem[rdeg], glc))
            quo[shift] = c
            for e, gc in other.terms.items():
                tgt = e + shift
                nc = rem.get(tgt, 0) - c * gc
                if nc:
                    rem[tgt] = nc
                else:
                    rem.pop(tgt, None)
        return LaurentPoly(quo)

    def substitute_inverse(self) -> "LaurentPoly":
        """t -> 1/t."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def reverse(self, n: int) -> "LaurentPoly":
        """t^n * p(1/t)."""
        return LaurentPoly({n - e: c for e, c in self.terms.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self.terms.items() if e})

    def truncated(self, max_exp: int) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self.terms.items() if e <= max_exp})

    def at_one(self) -> Scalar:
        """Evaluate at t = 1."""
        return _clean(sum(self.terms.values(), 0))

    def in_nat_t(self) -> bool:
        """True iff all exponents are >= 0 and all coefficients are nonnegative integers."""
        return all(e >= 0 and isinstance(c, int) and c >= 0 for e, c in self.terms.items())

    def pretty(self, var: str = "t") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpow = var if e == 1 else f"{var}^{e}"
                body = tpow if mag == 1 else f"{mag}*{tpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_obj(self) -> dict:
        return {str(e): _coeff_to_json(self.terms[e]) for e in sorted(self.terms)}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LaurentPoly":
        return cls({int(e): _coeff_from_json(c) for e, c in obj.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({self.pretty()})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
T = LaurentPoly.t_power(1)


def t_quantum(n: int) -> LaurentPoly:
    """The t-analog (t^n - 1)/(t - 1) for any integer n.

    >>> t_quantum(3).pretty()
    '1 + t + t^2'
    >>> t_quantum(-2).pretty()
    '-t^-2 - t^-1'
    >>> t_quantum(0).pretty()
    '0'
    """
    if n >= 0:
        return LaurentPoly({j: 1 for j in range(n)})
    return LaurentPoly({j: -1 for j in range(n, 0)})


@lru_cache(maxsize=None)
def eulerian(n: int) -> LaurentPoly:
    """Descent-generating polynomial of the symmetric group on n letters.

    The degenerate value at n = 0 is t^-1, which makes the closed-form
    products below come out polynomial.

    >>> eulerian(3).pretty()
    '1 + 4*t + t^2'
    >>> eulerian(0).pretty()
    't^-1'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return LaurentPoly.t_power(-1)
    row = [1]
    for m in range(2, n + 1):
        row = [
            (k + 1) * (row[k] if k < len(row) else 0)
            + (m - k) * (row[k - 1] if 0 <= k - 1 < len(row) else 0)
            for k in range(m)
        ]
    return LaurentPoly(dict(enumerate(row)))


def euler_series_check(m: int, order: int = 12) -> bool:
    """Truncated power-series identity t*A(m-1)/(1-t)^m = sum_k k^(m-1) t^k, m >= 2."""
    if m < 2:
        raise ValueError("m must be at least 2")
    inv = LaurentPoly({j: math.comb(j + m - 1, m - 1) for j in range(order + 1)})
    lhs = ((T * eulerian(m - 1)) * inv).truncated(order)
    rhs = LaurentPoly({k: k ** (m - 1) for k in range(1, order + 1)})
    return lhs == rhs


def palindrome_unimodal(p: LaurentPoly, center) -> tuple[bool, bool]:
    """Test palindromicity about ``center`` (a half-integer) and unimodality.

    Unimodality requires nonnegative coefficients that weakly rise to a peak
    and then weakly fall.  The zero polynomial passes both tests for every
    center.

    >>> palindrome_unimodal(LaurentPoly({0: 1, 1: 2, 2: 2, 3: 1}), Fraction(3, 2))
    (True, True)
    >>> palindrome_unimodal(LaurentPoly({2: 1, 4: 1}), 3)
    (True, False)
    """
    twice = Fraction(center) * 2
    if twice.denominator != 1:
        raise ValueError("center must be a half-integer")
    twice = int(twice)
    if not p:
        return True, True
    lo, hi = p.valuation(), p.degree()
    pal = all(p.coeff(j) == p.coeff(twice - j) for j in range(lo, hi + 1))
    seq = [p.coeff(j) for j in range(lo, hi + 1)]
    uni = all(c >= 0 for c in seq)
    if uni:
        i = 0
        while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
            i += 1
        while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
            i += 1
        uni = i == len(seq) - 1
    return pal, uni


class QtPoly:
    """Polynomial in q with LaurentPoly (in t) coefficients.

    q-exponents are nonnegative; substituting q = 1 yields a LaurentPoly.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, LaurentPoly | Scalar] | None = None):
        cleaned: dict[int, LaurentPoly] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly.const(c)
                if c:
                    if e < 0:
                        raise ValueError("q-exponents must be nonnegative")
                    cleaned[int(e)] = c
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "QtPoly":
        return cls()

    @classmethod
    def one(cls) -> "QtPoly":
        return cls({0: ONE})

    @classmethod
    def q_power(cls, e: int, c: LaurentPoly | Scalar = 1) -> "QtPoly":
        return cls({e: c})

    @classmethod
    def from_t(cls, p: LaurentPoly) -> "QtPoly":
        return cls({0: p})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, e: int) -> LaurentPoly:
        return self.terms.get(e, ZERO)

    def q_degree(self) -> int | None:
        return max(self.terms) if self.terms else None

    def __eq__(self, other) -> bool:
        if isinstance(other, QtPoly):
            return self.terms == other.terms
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self == QtPoly({0: other})
        return NotImplemented

    __hash__ = None

    def __add__(self, other) -> "QtPoly":
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = QtPoly({0: other})
        if not isinstance(other, QtPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return QtPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QtPoly":
        return QtPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "QtPoly":
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = QtPoly({0: other})
        if not isinstance(other, QtPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QtPoly":
        return (-self) + other

    def __mul__(self, other) -> "QtPoly":
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return QtPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, QtPoly):
            return NotImplemented
        out: dict[int, LaurentPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                prod = c1 * c2
                out[e] = out.get(e, ZERO) + prod
        return QtPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QtPoly":
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = QtPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def at_q_one(self) -> LaurentPoly:
        """Substitute q = 1."""
        out = ZERO
        for c in self.terms.values():
            out = out + c
        return out

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e].pretty()
            body = c if " " not in c else f"({c})"
            if e == 0:
                parts.append(c)
            elif e == 1:
                parts.append(f"{body}*q")
            else:
                parts.append(f"{body}*q^{e}")
        return " + ".join(parts)

    def to_json_obj(self) -> dict:
        return {str(e): self.terms[e].to_json_obj() for e in sorted(self.terms)}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "QtPoly":
        return cls({int(e): LaurentPoly.from_json_obj(c) for e, c in obj.items()})

    def __repr__(self) -> str:
        return f"QtPoly({self.pretty()})"


def qt_divmod(f: QtPoly, g: QtPoly) -> tuple[QtPoly, QtPoly]:
    """Divide in q by a divisor that is monic in q."""
    gdeg = g.q_degree()
    if gdeg is None:
        raise ZeroDivisionError("division by the zero polynomial")
    if g.coeff(gdeg) != ONE:
        raise ValueError("divisor must be monic in q")
    rem = dict(f.terms)
    quo: dict[int, LaurentPoly] = {}
    while rem:
        fdeg = max(rem)
        if fdeg < gdeg:
            break
        c = rem[fdeg]
        shift = fdeg - gdeg
        quo[shift] = c
        for e, gc in g.terms.items():
            tgt = e + shift
            nc = rem.get(tgt, ZERO) - c * gc
            if nc:
                rem[tgt] = nc
            else:
                rem.pop(tgt, None)
    return QtPoly(quo), QtPoly(rem)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QtPoly:
    """Gaussian binomial coefficient as a q-polynomial.

    >>> q_binomial(2, 1).pretty()
    '1 + 1*q'
    >>> q_binomial(4, 2).pretty()
    '1 + 1*q + 2*q^2 + 1*q^3 + 1*q^4'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return QtPoly.zero()
    if k == 0 or k == n:
        return QtPoly.one()
    return q_binomial(n - 1, k - 1) + QtPoly.q_power(k) * q_binomial(n - 1, k)


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> QtPoly:
    """The k-th cyclotomic polynomial, by exact division of q^k - 1.

    >>> cyclotomic(1).pretty()
    '-1 + 1*q'
    >>> cyclotomic(4).pretty()
    '1 + 1*q^2'
    """
    if k < 1:
        raise ValueError("k must be positive")
    poly = QtPoly({k: 1, 0: -1})
    for d in range(1, k):
        if k % d == 0:
            poly, rem = qt_divmod(poly, cyclotomic(d))
            if rem:
                raise AssertionError("cyclotomic division left a remainder")
    return poly


@dataclass(frozen=True, eq=False)
class CycloElem:
    """A q-polynomial reduced modulo the cyclotomic polynomial of given order.

    Represents the exact value of the polynomial at a primitive root of unity
    of that order.
    """

    order: int
    residue: tuple  # LaurentPoly coefficients of q^0 .. q^(deg-1)

    def to_qt(self) -> QtPoly:
        return QtPoly(dict(enumerate(self.residue)))

    def is_t_polynomial(self) -> bool:
        """True iff the value is independent of q."""
        return all(not c for c in self.residue[1:])

    def as_t_polynomial(self) -> LaurentPoly:
        if not self.is_t_polynomial():
            raise ValueError("residue has q-degree > 0")
        return self.residue[0] if self.residue else ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloElem):
            return self.order == other.order and self.to_qt() == other.to_qt()
        return NotImplemented

    def __add__(self, other: "CycloElem") -> "CycloElem":
        if self.order != other.order:
            raise ValueError("mismatched orders")
        return eval_at_root_of_unity(self.to_qt() + other.to_qt(), self.order)

    def __mul__(self, other: "CycloElem") -> "CycloElem":
        if self.order != other.order:
            raise ValueError("mismatched orders")
        return eval_at_root_of_unity(self.to_qt() * other.to_qt(), self.order)

    def __repr__(self) -> str:
        return f"CycloElem(order={self.order}, value={self.to_qt().pretty()})"


def eval_at_root_of_unity(f: QtPoly, k: int) -> CycloElem:
    """Reduce f modulo the k-th cyclotomic polynomial.

    >>> eval_at_root_of_unity(QtPoly({0: 1, 1: 1, 2: 1}), 3).is_t_polynomial()
    True
    >>> eval_at_root_of_unity(QtPoly({2: 1}), 2).as_t_polynomial().pretty()
    '1'
    """
    phi = cyclotomic(k)
    deg = phi.q_degree()
    _, rem = qt_divmod(f, phi)
    return CycloElem(k, tuple(rem.coeff(i) for i in range(deg)))


def divisors(n: int) -> Iterator[int]:
    for d in range(1, n + 1):
        if n % d == 0:
            yield d
