"""Partitions, symmetric functions, monomial expansions, and graded series.

A partition is a plain tuple of weakly decreasing positive integers.  A
``SymFun`` is a homogeneous formal combination of partition-indexed basis
elements (elementary ``e``, complete homogeneous ``h``, power sum ``p``, or
monomial ``m``) with ``LaurentPoly`` coefficients.  A ``MonomialTable`` is the
expansion of such a function in a fixed finite number of variables, which is
faithful as long as the variable count is at least the degree.  A
``SymSeries`` is a graded sequence of ``SymFun`` values indexed by the power
of a formal variable z; the grading and the x-degree always coincide here.

Basis conversion back from a ``MonomialTable`` goes through a triangular
solve against elementary expansions; it doubles as a symmetry certificate for
tables produced by brute-force enumeration.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Mapping

from .exact import ONE, ZERO, LaurentPoly, Scalar

Partition = tuple[int, ...]


class NotSymmetricError(ValueError):
    """Raised when a monomial table is not a symmetric polynomial."""


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def extend(remaining: int, cap: int, prefix: Partition) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return tuple(out)


def is_partition(lam) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def z_of(lam: Partition) -> int:
    """Centralizer order: product of i^m_i * m_i! over part sizes i.

    >>> z_of((2, 1))
    2
    >>> z_of((3, 3))
    18
    """
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= part**m * math.factorial(m)
    return out


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def omega_sign(lam: Partition) -> int:
    """Sign picked up by a power sum under the e/h swap involution."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def merge(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


_BASES = ("e", "h", "p", "m")


class SymFun:
    """Homogeneous symmetric function with LaurentPoly coefficients.

    ``zpart`` applies to the p basis only and records that coefficients are
    stored relative to p_lam / z_lam rather than p_lam.
    """

    __slots__ = ("basis", "degree", "terms", "zpart")

    def __init__(
        self,
        basis: str,
        degree: int,
        terms: Mapping[Partition, LaurentPoly | Scalar] | None = None,
        zpart: bool = False,
    ):
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if zpart and basis != "p":
            raise ValueError("zpart applies to the p basis only")
        cleaned: dict[Partition, LaurentPoly] = {}
        if terms:
            for lam, c in terms.items():
                lam = tuple(lam)
                if not is_partition(lam):
                    raise ValueError(f"not a partition: {lam!r}")
                if sum(lam) != degree:
                    raise ValueError("terms must be homogeneous of the stated degree")
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly.const(c)
                if c:
                    cleaned[lam] = c
        self.basis = basis
        self.degree = degree
        self.terms = cleaned
        self.zpart = zpart

    @classmethod
    def zero(cls, basis: str, degree: int, zpart: bool = False) -> "SymFun":
        return cls(basis, degree, None, zpart)

    @classmethod
    def scalar(cls, basis: str, c: LaurentPoly | Scalar = 1) -> "SymFun":
        return cls(basis, 0, {(): c})

    @classmethod
    def generator(cls, basis: str, n: int, c: LaurentPoly | Scalar = 1) -> "SymFun":
        """c * e_n (or h_n, p_n); n = 0 gives the scalar c."""
        return cls(basis, n, {((n,) if n else ()): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, lam: Partition) -> LaurentPoly:
        return self.terms.get(tuple(lam), ZERO)

    def _compatible(self, other: "SymFun") -> None:
        if self.basis != other.basis or self.zpart != other.zpart:
            raise ValueError("mismatched bases")
        if self.degree != other.degree:
            raise ValueError("mismatched degrees")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFun):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.zpart == other.zpart
            and self.degree == other.degree
            and self.terms == other.terms
        )

    __hash__ = None

    def __add__(self, other: "SymFun") -> "SymFun":
        self._compatible(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFun(self.basis, self.degree, out, self.zpart)

    def __neg__(self) -> "SymFun":
        return SymFun(self.basis, self.degree, {l: -c for l, c in self.terms.items()}, self.zpart)

    def __sub__(self, other: "SymFun") -> "SymFun":
        return self + (-other)

    def scale(self, c: LaurentPoly | Scalar) -> "SymFun":
        return SymFun(self.basis, self.degree, {l: v * c for l, v in self.terms.items()}, self.zpart)

    def map_coeffs(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "SymFun":
        return SymFun(self.basis, self.degree, {l: fn(v) for l, v in self.terms.items()}, self.zpart)

    def __mul__(self, other: "SymFun") -> "SymFun":
        """Product in a multiplicative basis (e, h, or plain p)."""
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.basis != other.basis or self.basis == "m" or self.zpart or other.zpart:
            raise ValueError("products require a common multiplicative basis")
        out: dict[Partition, LaurentPoly] = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                lam = merge(l1, l2)
                prod = c1 * c2
                out[lam] = out.get(lam, ZERO) + prod
        return SymFun(self.basis, self.degree + other.degree, out)

    def omega(self) -> "SymFun":
        """The involution swapping e and h; on power sums it is a sign."""
        if self.basis == "e":
            return SymFun("h", self.degree, self.terms)
        if self.basis == "h":
            return SymFun("e", self.degree, self.terms)
        if self.basis == "p":
            return SymFun(
                "p",
                self.degree,
                {l: c * omega_sign(l) for l, c in self.terms.items()},
                self.zpart,
            )
        raise ValueError("omega is not implemented for the monomial basis")

    def to_zpart(self) -> "SymFun":
        """p basis: rescale so coefficients multiply p_lam / z_lam."""
        if self.basis != "p" or self.zpart:
            raise ValueError("to_zpart requires the plain p basis")
        return SymFun("p", self.degree, {l: c * z_of(l) for l, c in self.terms.items()}, True)

    def from_zpart(self) -> "SymFun":
        if not self.zpart:
            raise ValueError("from_zpart requires zpart coefficients")
        return SymFun(
            "p", self.degree, {l: c * Fraction(1, z_of(l)) for l, c in self.terms.items()}
        )

    def valuation(self) -> int | None:
        vals = [c.valuation() for c in self.terms.values()]
        return min(vals) if vals else None

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        name = self.basis + ("/z" if self.zpart else "")
        rows = []
        for lam in partitions_of(self.degree):
            if lam in self.terms:
                rows.append((f"{name}[{','.join(map(str, lam))}]", self.terms[lam].pretty()))
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{label.ljust(width)}  {poly}" for label, poly in rows)

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis + ("/z" if self.zpart else ""),
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "coeff": self.terms[lam].to_json_obj()}
                for lam in partitions_of(self.degree)
                if lam in self.terms
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "SymFun":
        basis = obj["basis"]
        zpart = basis.endswith("/z")
        if zpart:
            basis = basis[:-2]
        return cls(
            basis,
            obj["degree"],
            {
                tuple(term["partition"]): LaurentPoly.from_json_obj(term["coeff"])
                for term in obj["terms"]
            },
            zpart,
        )

    def __repr__(self) -> str:
        return f"SymFun({self.basis}{'/z' if self.zpart else ''}, deg={self.degree})"


def omega(f: SymFun) -> SymFun:
    return f.omega()


class MonomialTable:
    """Map from length-k exponent vectors to LaurentPoly coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, LaurentPoly | Scalar] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        cleaned: dict[tuple, LaurentPoly] = {}
        if terms:
            for vec, c in terms.items():
                vec = tuple(vec)
                if len(vec) != nvars or any(e < 0 for e in vec):
                    raise ValueError(f"bad exponent vector {vec!r}")
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly.const(c)
                if c:
                    cleaned[vec] = c
        self.nvars = nvars
        self.terms = cleaned

    @classmethod
    def zero(cls, nvars: int) -> "MonomialTable":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MonomialTable":
        return cls(nvars, {(0,) * nvars: 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialTable):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "MonomialTable") -> "MonomialTable":
        if self.nvars != other.nvars:
            raise ValueError("mismatched variable counts")
        out = dict(self.terms)
        for vec, c in other.terms.items():
            out[vec] = out.get(vec, ZERO) + c
        return MonomialTable(self.nvars, out)

    def __neg__(self) -> "MonomialTable":
        return MonomialTable(self.nvars, {v: -c for v, c in self.terms.items()})

    def __sub__(self, other: "MonomialTable") -> "MonomialTable":
        return self + (-other)

    def scale(self, c: LaurentPoly | Scalar) -> "MonomialTable":
        return MonomialTable(self.nvars, {v: val * c for v, val in self.terms.items()})

    def map_coeffs(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "MonomialTable":
        return MonomialTable(self.nvars, {v: fn(val) for v, val in self.terms.items()})

    def __mul__(self, other: "MonomialTable") -> "MonomialTable":
        if self.nvars != other.nvars:
            raise ValueError("mismatched variable counts")
        out: dict[tuple, LaurentPoly] = {}
        for v1, c1 in self.terms.items():
            for v2, c2 in other.terms.items():
                vec = tuple(a + b for a, b in zip(v1, v2))
                prod = c1 * c2
                out[vec] = out.get(vec, ZERO) + prod
        return MonomialTable(self.nvars, out)

    def sum_coeffs(self) -> LaurentPoly:
        """Set every variable to 1."""
        out = ZERO
        for c in self.terms.values():
            out = out + c
        return out

    def total_degree(self) -> int | None:
        degs = {sum(vec) for vec in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("table is not homogeneous")
        return degs.pop()

    def to_json_obj(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [
                {"exponents": list(vec), "coeff": self.terms[vec].to_json_obj()}
                for vec in sorted(self.terms, reverse=True)
            ],
        }

    def __repr__(self) -> str:
        return f"MonomialTable(vars={self.nvars}, terms={len(self.terms)})"


@lru_cache(maxsize=None)
def _unit_table(basis: str, i: int, k: int) -> MonomialTable:
    """Expansion of e_i, h_i, or p_i in k variables."""
    if i == 0:
        return MonomialTable.one(k)
    terms: dict[tuple, int] = {}
    if basis == "e":
        for subset in combinations(range(k), i):
            vec = [0] * k
            for j in subset:
                vec[j] = 1
            terms[tuple(vec)] = 1
    elif basis == "h":
        for multiset in combinations_with_replacement(range(k), i):
            vec = [0] * k
            for j in multiset:
                vec[j] += 1
            terms[tuple(vec)] = 1
    elif basis == "p":
        for j in range(k):
            vec = [0] * k
            vec[j] = i
            terms[tuple(vec)] = 1
    else:
        raise ValueError(f"no unit table for basis {basis!r}")
    return MonomialTable(k, terms)


@lru_cache(maxsize=None)
def _partition_table(basis: str, lam: Partition, k: int) -> MonomialTable:
    if basis == "m":
        vecs = set(permutations(lam + (0,) * (k - len(lam)))) if len(lam) <= k else set()
        return MonomialTable(k, {vec: 1 for vec in vecs})
    out = MonomialTable.one(k)
    for part in lam:
        out = out * _unit_table(basis, part, k)
    return out


def expand_in_variables(f: SymFun, k: int) -> MonomialTable:
    """Set all variables beyond the first k to zero.

    >>> expand_in_variables(SymFun.generator("e", 2), 2).terms
    {(1, 1): LaurentPoly(1)}
    """
    if k < 1:
        raise ValueError("need at least one variable")
    out = MonomialTable.zero(k)
    for lam, c in f.terms.items():
        if f.zpart:
            c = c * Fraction(1, z_of(lam))
        out = out + _partition_table(f.basis, lam, k).scale(c)
    return out


def _orbit_size(mu: Partition, k: int) -> int:
    """Distinct rearrangements of mu padded with zeros to length k."""
    padded = mu + (0,) * (k - len(mu))
    size = math.factorial(k)
    for v in set(padded):
        size //= math.factorial(padded.count(v))
    return size


@lru_cache(maxsize=None)
def _e_in_m(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """Monomial-basis coordinates of e_lam in k variables."""
    table = _partition_table("e", lam, k)
    out = []
    for mu in partitions_of(sum(lam)):
        if len(mu) > k:
            continue
        c = table.terms.get(mu + (0,) * (k - len(mu)))
        if c is not None:
            out.append((mu, c.coeff(0)))
    return tuple(out)


def monomial_to_e(table: MonomialTable, n: int | None = None, k: int | None = None) -> SymFun:
    """Invert a monomial expansion into the elementary basis.

    The table must be a symmetric homogeneous polynomial of degree n in
    k >= n variables; otherwise ``NotSymmetricError`` (or ValueError for
    malformed input) is raised.  Inversion peels lexicographically largest
    orbits against elementary expansions, so success certifies symmetry.
    """
    if k is None:
        k = table.nvars
    elif k != table.nvars:
        raise ValueError("k must match the table's variable count")
    deg = table.total_degree()
    if n is None:
        n = deg if deg is not None else 0
    if deg is not None and deg != n:
        raise ValueError("table degree does not match n")
    if k < n:
        raise ValueError("need at least as many variables as the degree")
    if not table:
        return SymFun.zero("e", n)

    orbit_coeff: dict[Partition, LaurentPoly] = {}
    orbit_count: dict[Partition, int] = {}
    for vec, c in table.terms.items():
        mu = tuple(sorted((e for e in vec if e), reverse=True))
        seen = orbit_coeff.get(mu)
        if seen is None:
            orbit_coeff[mu] = c
        elif seen != c:
            raise NotSymmetricError(f"orbit of {mu} has unequal coefficients")
        orbit_count[mu] = orbit_count.get(mu, 0) + 1
    for mu, count in orbit_count.items():
        if count != _orbit_size(mu, k):
            raise NotSymmetricError(f"orbit of {mu} is incomplete")

    residual = dict(orbit_coeff)
    result: dict[Partition, LaurentPoly] = {}
    for mu in partitions_of(n):
        if len(mu) > k:
            continue
        c = residual.get(mu)
        if not c:
            residual.pop(mu, None)
            continue
        lam = conjugate(mu)
        result[lam] = c
        for nu, mult in _e_in_m(lam, k):
            nc = residual.get(nu, ZERO) - c * mult
            if nc:
                residual[nu] = nc
            else:
                residual.pop(nu, None)
    if any(residual.values()):
        raise NotSymmetricError("residual does not vanish")
    return SymFun("e", n, result)


class SymSeries:
    """Graded z-series whose coefficient at z^n is homogeneous of degree n."""

    __slots__ = ("basis", "order", "coeffs")

    def __init__(self, basis: str, coeffs: list[SymFun]):
        for n, f in enumerate(coeffs):
            if f.basis != basis or f.degree != n or f.zpart:
                raise ValueError("coefficient grading mismatch")
        self.basis = basis
        self.order = len(coeffs) - 1
        self.coeffs = list(coeffs)

    @classmethod
    def zeros(cls, basis: str, order: int) -> "SymSeries":
        return cls(basis, [SymFun.zero(basis, n) for n in range(order + 1)])

    @classmethod
    def one(cls, basis: str, order: int) -> "SymSeries":
        coeffs = [SymFun.scalar(basis)] + [SymFun.zero(basis, n) for n in range(1, order + 1)]
        return cls(basis, coeffs)

    @classmethod
    def from_weights(
        cls, order: int, weight: Callable[[int], LaurentPoly | Scalar | None], basis: str = "e"
    ) -> "SymSeries":
        """Series sum_i w(i) * g_i z^i with g_i the degree-i generator."""
        coeffs = []
        for i in range(order + 1):
            w = weight(i)
            if w is None or not w:
                coeffs.append(SymFun.zero(basis, i))
            else:
                coeffs.append(SymFun.generator(basis, i, w))
        return cls(basis, coeffs)

    @classmethod
    def generating(cls, basis: str, order: int) -> "SymSeries":
        """E(z) or H(z): sum of degree-n generators."""
        return cls.from_weights(order, lambda i: ONE, basis)

    @classmethod
    def h_series_p(cls, order: int) -> "SymSeries":
        """The complete homogeneous series written in the power sum basis."""
        coeffs = [
            SymFun("p", n, {lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})
            for n in range(order + 1)
        ]
        return cls("p", coeffs)

    def __getitem__(self, n: int) -> SymFun:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymSeries):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __add__(self, other: "SymSeries") -> "SymSeries":
        if self.basis != other.basis or self.order != other.order:
            raise ValueError("mismatched series")
        return SymSeries(self.basis, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "SymSeries":
        return SymSeries(self.basis, [-a for a in self.coeffs])

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        return self + (-other)

    def scale(self, c: LaurentPoly | Scalar) -> "SymSeries":
        return SymSeries(self.basis, [a.scale(c) for a in self.coeffs])

    def grade_scale_t(self) -> "SymSeries":
        """z -> tz: the coefficient of z^n is multiplied by t^n."""
        return SymSeries(
            self.basis, [a.scale(LaurentPoly.t_power(n)) for n, a in enumerate(self.coeffs)]
        )

    def dt(self) -> "SymSeries":
        """Coefficientwise d/dt."""
        return SymSeries(self.basis, [a.map_coeffs(lambda p: p.derivative()) for a in self.coeffs])

    def omega(self) -> "SymSeries":
        coeffs = [a.omega() for a in self.coeffs]
        return SymSeries(coeffs[0].basis, coeffs)

    def mul(self, other: "SymSeries", order: int | None = None) -> "SymSeries":
        if self.basis != other.basis:
            raise ValueError("mismatched bases")
        if order is None:
            order = min(self.order, other.order)
        coeffs = []
        for n in range(order + 1):
            acc = SymFun.zero(self.basis, n)
            for j in range(n + 1):
                if j <= self.order and n - j <= other.order:
                    if self.coeffs[j] and other.coeffs[n - j]:
                        acc = acc + self.coeffs[j] * other.coeffs[n - j]
            coeffs.append(acc)
        return SymSeries(self.basis, coeffs)

    def div(self, other: "SymSeries", order: int | None = None) -> "SymSeries":
        """Graded division; the divisor must have constant term 1."""
        if self.basis != other.basis:
            raise ValueError("mismatched bases")
        if other.coeffs[0] != SymFun.scalar(self.basis):
            raise ValueError("divisor must have constant term 1")
        if order is None:
            order = min(self.order, other.order)
        coeffs: list[SymFun] = []
        for n in range(order + 1):
            acc = self.coeffs[n] if n <= self.order else SymFun.zero(self.basis, n)
            for j in range(1, n + 1):
                if j <= other.order and other.coeffs[j] and coeffs[n - j]:
                    acc = acc - other.coeffs[j] * coeffs[n - j]
            coeffs.append(acc)
        return SymSeries(self.basis, coeffs)


def series_mul(a: SymSeries, b: SymSeries, order: int | None = None) -> SymSeries:
    return a.mul(b, order)


def series_div(a: SymSeries, b: SymSeries, order: int | None = None) -> SymSeries:
    return a.div(b, order)


def e_positivity_report(f: SymFun) -> tuple[bool, list[tuple[Partition, LaurentPoly, bool]]]:
    """Per-partition coefficient listing plus an overall e-positivity flag.

    A function is e-positive when every elementary-basis coefficient is a
    polynomial in t with nonnegative integer coefficients.
    """
    if f.basis != "e":
        raise ValueError("e-positivity applies to the e basis")
    listing = []
    for lam in partitions_of(f.degree):
        if lam in f.terms:
            c = f.terms[lam]
            listing.append((lam, c, c.in_nat_t()))
    return all(ok for _, _, ok in listing), listing


def e_unimodal_palindromic(f: SymFun, center) -> tuple[bool, bool]:
    """Coefficientwise palindromicity/unimodality about a common center.

    For a palindromic function this coefficientwise test is equivalent to the
    direct chain definition of e-unimodality.
    """
    if f.basis != "e":
        raise ValueError("requires the e basis")
    from .exact import palindrome_unimodal

    pal = uni = True
    for c in f.terms.values():
        p, u = palindrome_unimodal(c, center)
        pal = pal and p
        uni = uni and u
    return pal, uni


def e_unimodal_direct(f: SymFun) -> bool:
    """Chain definition of e-unimodality: slices rise to a peak, then fall,
    where 'rise' means the difference is e-positive."""
    if f.basis != "e":
        raise ValueError("requires the e basis")
    if not f.terms:
        return True
    exps: set[int] = set()
    for c in f.terms.values():
        if c.valuation() < 0:
            return False
        exps.update(c.terms)
    top = max(exps)
    lams = sorted(f.terms)

    def slice_at(j: int) -> tuple:
        return tuple(f.terms[lam].coeff(j) for lam in lams)

    slices = [slice_at(j) for j in range(top + 1)]
    nonneg = lambda v: all(x >= 0 for x in v)
    le = lambda a, b: all(x <= y for x, y in zip(a, b))
    if not (nonneg(slices[0]) and nonneg(slices[-1])):
        return False
    for peak in range(top + 1):
        if all(le(slices[j], slices[j + 1]) for j in range(peak)) and all(
            le(slices[j + 1], slices[j]) for j in range(peak, top)
        ):
            return True
    return False
