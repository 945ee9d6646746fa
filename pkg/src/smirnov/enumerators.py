"""Closed forms for the Smirnov word enumerators and their companions.

Each enumerator variant is the graded coefficient of a quotient of
elementary-basis generating series sharing one denominator.  This module
builds those quotients, the power sum and fundamental quasisymmetric
expansions, the q-Eulerian polynomials with their q-exponential identities
and root-of-unity evaluations, the weighted-walk determinant identity, and
the unimodality and counting reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from .exact import (
    ONE,
    T,
    ZERO,
    LaurentPoly,
    QtPoly,
    eulerian,
    eval_at_root_of_unity,
    palindrome_unimodal,
    q_binomial,
    t_quantum,
)
from . import combinat
from .symfun import (
    MonomialTable,
    Partition,
    SymFun,
    SymSeries,
    _partition_table,
    e_positivity_report,
    e_unimodal_direct,
    e_unimodal_palindromic,
    partitions_of,
)

VARIANTS = ("W", "Wless", "Wgreater", "Wequal", "Wneq", "Wtilde", "Wtildeneq", "XC")
POWERSUM_VARIANTS = ("W", "Wless", "Wgreater", "Wtilde", "Wtildeneq")
F_VARIANTS = ("W", "Wless", "Wgreater", "Wtilde")
CLEARED_VARIANTS = ("W", "Wless", "Wgreater", "Wtilde")
TOP_VARIANTS = ("Wneq", "XC")
Q_EULERIAN_KINDS = ("Amajexc", "Ades", "Aless", "Atilde")
ROOT_FAMILIES = ("Ades", "Aless", "Atilde")
QEXP_IDENTITIES = ("A", "Aless", "Atilde")


def abc(i: int) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """The three numerator weights splitting the t-analog by endpoint class.

    a_i = d/dt of the t-analog of i; b_i is its reversal t^(i-1) a_i(1/t);
    c_i = i*t*[i-2]_t.

    >>> tuple(p.pretty() for p in abc(3))
    ('1 + 2*t', '2*t + t^2', '3*t')
    """
    if i < 2:
        raise ValueError("defined for i >= 2")
    a = t_quantum(i).derivative()
    b = a.reverse(i - 1)
    c = T * i * t_quantum(i - 2)
    return a, b, c


def numerator_weight(variant: str, i: int) -> LaurentPoly:
    """Coefficient of the degree-i elementary generator in the numerator
    series of the given variant."""
    if variant == "W":
        return t_quantum(i) if i >= 1 else ZERO
    if variant == "Wless":
        return abc(i)[0] if i >= 2 else ZERO
    if variant == "Wgreater":
        return abc(i)[1] if i >= 2 else ZERO
    if variant == "Wequal":
        if i == 1:
            return ONE
        return -abc(i)[2] if i >= 2 else ZERO
    if variant == "Wneq":
        return t_quantum(i) + i * T * t_quantum(i - 2) if i >= 2 else ZERO
    if variant == "Wtilde":
        return LaurentPoly.t_power(i - 1, i) if i >= 1 else ZERO
    if variant == "Wtildeneq":
        return i * T * t_quantum(i - 1) if i >= 2 else ZERO
    if variant == "XC":
        if i >= 2:
            return t_quantum(2) * t_quantum(i) + i * LaurentPoly.t_power(2) * t_quantum(i - 3)
        return ZERO
    raise ValueError(f"unknown variant {variant!r}")


def denominator_weight(i: int) -> LaurentPoly:
    """The shared denominator: 1 minus t[i-1]_t e_i z^i summed over i >= 2."""
    if i == 0:
        return ONE
    if i >= 2:
        return -(T * t_quantum(i - 1))
    return ZERO


def numerator_series(variant: str, order: int) -> SymSeries:
    return SymSeries.from_weights(order, lambda i: numerator_weight(variant, i))


def denominator_series(order: int) -> SymSeries:
    return SymSeries.from_weights(order, denominator_weight)


@lru_cache(maxsize=None)
def closed_series(variant: str, order: int) -> SymSeries:
    return numerator_series(variant, order).div(denominator_series(order))


def closed_form(variant: str, n: int) -> SymFun:
    """The degree-n enumerator in the elementary basis.

    >>> closed_form("Wless", 2).coeff((2,)).pretty()
    '1'
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if n < 1:
        raise ValueError("n must be positive")
    if variant in ("Wneq", "XC") and n < 2:
        raise ValueError(f"{variant} requires n >= 2")
    out = closed_series(variant, max(n, 8))[n]
    val = out.valuation()
    if val is not None and val < 0:
        raise AssertionError("negative t-valuation leaked into a closed form")
    return out


def cleared_form_check(variant: str, order: int) -> bool:
    """Cross-multiplied form of the identities obtained by clearing a 1 - t
    factor out of numerator and denominator.

    The cleared denominator is E(tz) - t E(z), whose constant term 1 - t is
    not a unit in the graded sense, so each identity is checked as a product
    rather than a quotient.
    """
    if variant not in CLEARED_VARIANTS:
        raise ValueError(f"no cleared form for {variant!r}")
    E = SymSeries.generating("e", order)
    denom = E.grade_scale_t() - E.scale(T)
    one_minus_t = ONE - T
    series = closed_series(variant, order)
    if variant == "W":
        lhs = SymSeries.one("e", order) + series
        rhs = E.scale(one_minus_t)
    elif variant == "Wtilde":
        lhs = series
        rhs = E.grade_scale_t().dt().scale(one_minus_t)
    elif variant == "Wless":
        lhs = series
        rhs = SymSeries.from_weights(
            order, lambda i: t_quantum(i).derivative() * one_minus_t if i >= 2 else None
        )
    else:  # Wgreater
        lhs = series
        rhs = SymSeries.from_weights(
            order, lambda i: abc(i)[1] * one_minus_t if i >= 2 else None
        )
    return lhs.mul(denom, order) == rhs


def quotient_form_check(variant: str, order: int) -> bool:
    """Numerator = denominator * series, for every variant's quotient."""
    series = closed_series(variant, order)
    return series.mul(denominator_series(order), order) == numerator_series(variant, order)


def powersum_form(variant: str, n: int) -> SymFun:
    """Coefficients of p_lam / z_lam in the omega image of the enumerator.

    Every coefficient is asserted to be an honest polynomial even though the
    degenerate t^-1 Eulerian value flows through the products.
    """
    if variant not in POWERSUM_VARIANTS:
        raise ValueError(f"no power sum form for {variant!r}")
    if n < 1:
        raise ValueError("n must be positive")
    terms: dict[Partition, LaurentPoly] = {}
    for lam in partitions_of(n):
        ell = len(lam)
        prod = ONE
        for part in lam:
            prod = prod * t_quantum(part)
        if variant == "W":
            c = eulerian(ell) * prod
        elif variant == "Wless":
            c = (T * eulerian(ell - 1) * prod).derivative()
        elif variant == "Wgreater":
            s = T * eulerian(ell - 1) * prod
            c = LaurentPoly({i: (n - i) * s.coeff(n - i) for i in range(1, n)})
        elif variant == "Wtilde":
            acc = ZERO
            for i, part in enumerate(lam):
                rest = ONE
                for j, other in enumerate(lam):
                    if j != i:
                        rest = rest * t_quantum(other)
                acc = acc + LaurentPoly.t_power(part, part) * rest
            c = eulerian(ell - 1) * acc
        else:  # Wtildeneq
            if ell > 1:
                c = n * T * eulerian(ell - 1) * prod
            else:
                c = n * T * t_quantum(n - 1)
        val = c.valuation()
        if val is not None and val < 0:
            raise AssertionError("power sum coefficient is not a polynomial")
        terms[lam] = c
    return SymFun("p", n, terms, zpart=True)


def powersum_top_coefficient(variant: str, n: int) -> LaurentPoly:
    """Coefficient of p_n / n in the omega image; equals the coefficient of
    the degree-n elementary generator in the e-expansion.

    >>> powersum_top_coefficient("Wneq", 3).pretty()
    '1 + 4*t + t^2'
    """
    if variant not in TOP_VARIANTS:
        raise ValueError(f"no top coefficient formula for {variant!r}")
    if n < 2:
        raise ValueError("n must be at least 2")
    if variant == "Wneq":
        return t_quantum(n) + n * T * t_quantum(n - 2)
    return t_quantum(2) * t_quantum(n) + n * LaurentPoly.t_power(2) * t_quantum(n - 3)


@dataclass(frozen=True)
class FExpansion:
    """A sum of t^e F_{n,S} terms with positive integer multiplicities."""

    degree: int
    terms: tuple[tuple[int, tuple[int, ...], int], ...]  # (t-exponent, S, multiplicity)

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[tuple[int, tuple[int, ...]], int]) -> "FExpansion":
        items = tuple(
            (e, S, counts[(e, S)]) for e, S in sorted(counts) if counts[(e, S)]
        )
        return cls(n, items)

    def to_table(self, k: int) -> MonomialTable:
        out = MonomialTable.zero(k)
        for e, S, mult in self.terms:
            out = out + combinat.fundamental_F(self.degree, S, k).scale(
                LaurentPoly.t_power(e, mult)
            )
        return out

    def principal_numerator(self) -> QtPoly:
        """Stable principal specialization numerator over the implicit
        (1-q)...(1-q^n) denominator: multiplicities land at q^(sum S) t^e."""
        out = QtPoly.zero()
        for e, S, mult in self.terms:
            out = out + QtPoly.q_power(sum(S), LaurentPoly.t_power(e, mult))
        return out

    def ones_specialization(self, m: int) -> LaurentPoly:
        out = ZERO
        for e, S, mult in self.terms:
            out = out + LaurentPoly.t_power(
                e, mult * combinat.F_ones_specialization(self.degree, S, m)
            )
        return out

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"t": e, "set": list(S), "mult": mult} for e, S, mult in self.terms
            ],
        }

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        rows = []
        for e, S, mult in self.terms:
            sset = "{" + ",".join(map(str, S)) + "}"
            coeff = "" if mult == 1 else f"{mult}*"
            tpow = "" if e == 0 else ("t*" if e == 1 else f"t^{e}*")
            rows.append(f"{coeff}{tpow}F[{self.degree},{sset}]")
        return " + ".join(rows)


def f_expansion(variant: str, n: int) -> FExpansion:
    """Fundamental quasisymmetric expansion of the omega image, as a sum
    over permutations weighted by descent or cyclic descent."""
    if variant not in F_VARIANTS:
        raise ValueError(f"no fundamental expansion for {variant!r}")
    if not 1 <= n <= 8:
        raise ValueError("n must be between 1 and 8")
    counts: dict[tuple[int, tuple[int, ...]], int] = {}
    for sigma in combinat.permutations_of(n):
        if variant == "Wless" and not sigma[0] < sigma[-1]:
            continue
        if variant == "Wgreater" and not sigma[0] > sigma[-1]:
            continue
        stats = combinat.perm_stats(sigma)
        inv_stats = combinat.perm_stats(combinat.inverse_perm(sigma))
        e = stats.cdes if variant == "Wtilde" else stats.des
        S = inv_stats.asc2_set if variant == "Wgreater" else inv_stats.des2_set
        key = (e, tuple(sorted(S)))
        counts[key] = counts.get(key, 0) + 1
    return FExpansion.from_counts(n, counts)


@lru_cache(maxsize=None)
def q_eulerian(kind: str, n: int) -> QtPoly:
    """The q-Eulerian polynomials and their endpoint/cyclic variations.

    Amajexc weights by q^(maj-exc) t^exc.  The others weight t by des or
    cdes and q by the sum of the positions where the inverse permutation
    drops by at least two; that statistic, rather than the rising-gap sum,
    is the one compatible with the principal specialization (the rising-gap
    reading is kept available through q_statistic_diagnostic).
    """
    if kind not in Q_EULERIAN_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if not 0 <= n <= 8:
        raise ValueError("n must be between 0 and 8")
    if n == 0:
        return QtPoly.zero() if kind == "Aless" else QtPoly.one()
    counts: dict[tuple[int, int], int] = {}
    inv = [0] * n
    for sigma in combinat.permutations_of(n):
        if kind == "Aless" and not sigma[0] < sigma[-1]:
            continue
        if kind == "Amajexc":
            maj = exc = 0
            for i in range(n - 1):
                if sigma[i] > sigma[i + 1]:
                    maj += i + 1
                if sigma[i] > i + 1:
                    exc += 1
            if sigma[n - 1] > n:
                exc += 1
            key = (maj - exc, exc)
        else:
            des = 0
            for i in range(n - 1):
                if sigma[i] > sigma[i + 1]:
                    des += 1
            te = des + (1 if kind == "Atilde" and sigma[-1] > sigma[0] else 0)
            for i, v in enumerate(sigma, start=1):
                inv[v - 1] = i
            qe = 0
            for i in range(n - 1):
                if inv[i] - inv[i + 1] >= 2:
                    qe += i + 1
            key = (qe, te)
        counts[key] = counts.get(key, 0) + 1
    out: dict[int, dict[int, int]] = {}
    for (qe, te), c in counts.items():
        out.setdefault(qe, {})[te] = c
    return QtPoly({qe: LaurentPoly(poly) for qe, poly in out.items()})


def q_statistic_diagnostic(n: int) -> dict:
    """Whether the drop-gap and rise-gap position sums of the inverse give
    the same q-refinement; they agree under the des weighting but not under
    the cdes weighting."""
    agree = {}
    for weight in ("des", "cdes"):
        lhs: dict[tuple[int, int], int] = {}
        rhs: dict[tuple[int, int], int] = {}
        for sigma in combinat.permutations_of(n):
            stats = combinat.perm_stats(sigma)
            inv_stats = combinat.perm_stats(combinat.inverse_perm(sigma))
            te = stats.des if weight == "des" else stats.cdes
            key1 = (inv_stats.maj2des, te)
            key2 = (inv_stats.maj2asc, te)
            lhs[key1] = lhs.get(key1, 0) + 1
            rhs[key2] = rhs.get(key2, 0) + 1
        agree[weight] = lhs == rhs
    return {"des_weighted_agree": agree["des"], "cdes_weighted_agree": agree["cdes"]}


def q_exp_identity_check(kind: str, order: int) -> bool:
    """Cleared-denominator forms of the q-exponential identities.

    Multiplying the generating function by exp_q(tz) - t exp_q(z) and
    comparing q-binomial convolutions coefficientwise avoids dividing by the
    non-unit constant term 1 - t.
    """
    if kind not in QEXP_IDENTITIES:
        raise ValueError(f"unknown identity {kind!r}")
    if order > 8:
        raise ValueError("order must be at most 8 on the factorial path")
    for n in range(1, order + 1):
        acc = QtPoly.zero()
        lo = 0 if kind == "A" else 1
        for j in range(lo, n + 1):
            if kind == "A":
                term = q_eulerian("Ades", j) if j else QtPoly.one()
            elif kind == "Aless":
                term = q_eulerian("Aless", j)
            else:
                term = q_eulerian("Atilde", j)
            factor = LaurentPoly.t_power(n - j) - T
            acc = acc + q_binomial(n, j) * term * factor
        if kind == "A":
            rhs = QtPoly.from_t(ONE - T)
        elif kind == "Aless":
            rhs = QtPoly.from_t((ONE - T) * t_quantum(n).derivative()) if n >= 2 else QtPoly.zero()
        else:
            rhs = QtPoly.from_t((ONE - T) * LaurentPoly.t_power(n - 1, n))
        if acc != rhs:
            return False
    return True


def _eulerian_at_root(n: int, k: int) -> LaurentPoly:
    """Exact value of the q-Eulerian polynomial at a primitive k-th root of
    unity; the degenerate n = 0 value is t^-1, matching the convention that
    makes the closed products polynomial."""
    if n == 0:
        return eulerian(0)
    elem = eval_at_root_of_unity(q_eulerian("Ades", n), k)
    return elem.as_t_polynomial()


def root_of_unity_parts(kind: str, n: int, k: int) -> dict:
    """Root-of-unity evaluation both ways: exact cyclotomic reduction of the
    q-polynomial, the closed product formula, and the step-k recursion."""
    if kind not in ROOT_FAMILIES:
        raise ValueError(f"unknown family {kind!r}")
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 1 or n % k:
        raise ValueError("k must divide n")
    m = n // k
    elem = eval_at_root_of_unity(q_eulerian(kind, n), k)
    via_eval = elem.as_t_polynomial()
    qk = t_quantum(k)
    if kind == "Ades":
        closed = eulerian(m) * qk**m
    elif kind == "Aless":
        closed = (T * eulerian(m - 1) * qk**m).derivative()
    else:
        closed = LaurentPoly.t_power(k, n) * eulerian(m - 1) * qk ** (m - 1)
    parts = {"via_eval": via_eval, "closed": closed}
    if kind != "Ades":
        prev = _eulerian_at_root(n - k, k)
        if kind == "Aless":
            parts["recursion"] = (T * qk * prev).derivative()
        else:
            parts["recursion"] = LaurentPoly.t_power(k, n) * prev
    return parts


def root_of_unity(kind: str, n: int, k: int) -> LaurentPoly:
    """Evaluate a q-Eulerian variant at a primitive k-th root of unity,
    asserting that reduction and the closed formulas agree.

    >>> root_of_unity("Atilde", 3, 3).pretty()
    '3*t^2'
    """
    parts = root_of_unity_parts(kind, n, k)
    values = list(parts.values())
    if any(v != values[0] for v in values[1:]):
        raise AssertionError(f"root-of-unity routes disagree for {kind}, n={n}, k={k}")
    return parts["via_eval"]


# ---------------------------------------------------------------------------
# Weighted-walk determinant identity.
#
# Entries live in the ring of polynomials in z and x_1..x_k with LaurentPoly
# coefficients, represented as {(z-exponent, x-exponent vector): coeff}.
# ---------------------------------------------------------------------------

_ZX = dict


def _zx_zero() -> _ZX:
    return {}


def _zx_const(k: int, c: LaurentPoly) -> _ZX:
    return {(0, (0,) * k): c} if c else {}


def _zx_add(a: _ZX, b: _ZX) -> _ZX:
    out = dict(a)
    for key, c in b.items():
        nc = out.get(key, ZERO) + c
        if nc:
            out[key] = nc
        else:
            out.pop(key, None)
    return out


def _zx_neg(a: _ZX) -> _ZX:
    return {key: -c for key, c in a.items()}


def _zx_sub(a: _ZX, b: _ZX) -> _ZX:
    return _zx_add(a, _zx_neg(b))


def _zx_mul(a: _ZX, b: _ZX) -> _ZX:
    out: _ZX = {}
    for (z1, v1), c1 in a.items():
        for (z2, v2), c2 in b.items():
            key = (z1 + z2, tuple(x + y for x, y in zip(v1, v2)))
            nc = out.get(key, ZERO) + c1 * c2
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
    return out


def _zx_div_exact(a: _ZX, b: _ZX) -> _ZX:
    """Exact division, peeling leading terms in lexicographic order."""
    if not b:
        raise ZeroDivisionError("division by zero")
    quo: _ZX = {}
    rem = dict(a)
    blead = max(b)
    bcoeff = b[blead]
    while rem:
        rlead = max(rem)
        zdiff = rlead[0] - blead[0]
        vdiff = tuple(x - y for x, y in zip(rlead[1], blead[1]))
        if zdiff < 0 or any(d < 0 for d in vdiff):
            raise ValueError("not divisible")
        c = rem[rlead] / bcoeff
        key = (zdiff, vdiff)
        quo[key] = quo.get(key, ZERO) + c
        rem = _zx_sub(rem, _zx_mul({key: c}, b))
    return quo


def _det_cofactor(m: list[list[_ZX]], k: int) -> _ZX:
    n = len(m)
    if n == 1:
        return m[0][0]
    out = _zx_zero()
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in m[1:]]
        term = _zx_mul(m[0][j], _det_cofactor(minor, k))
        out = _zx_add(out, term if j % 2 == 0 else _zx_neg(term))
    return out


def _det_bareiss(m: list[list[_ZX]], k: int) -> _ZX:
    """Fraction-free elimination; every division is exact by construction."""
    n = len(m)
    m = [row[:] for row in m]
    prev = _zx_const(k, ONE)
    for r in range(n - 1):
        pivot = m[r][r]
        if not pivot:
            raise ValueError("zero pivot")
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                num = _zx_sub(_zx_mul(pivot, m[i][j]), _zx_mul(m[i][r], m[r][j]))
                m[i][j] = _zx_div_exact(num, prev)
            m[i][r] = _zx_zero()
        prev = pivot
    return m[n - 1][n - 1]


def walk_matrix(k: int) -> list[list[_ZX]]:
    """I - zA for the complete loopless digraph on 1..k with edge weights
    x_j into vertex j, multiplied by t on descending edges."""
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if i == j:
                row.append(_zx_const(k, ONE))
            else:
                vec = [0] * k
                vec[j - 1] = 1
                weight = -ONE if i < j else -T
                row.append({(1, tuple(vec)): weight})
        rows.append(row)
    return rows


def transfer_matrix_check(k: int, order: int | None = None) -> bool:
    """det(I - zA) = 1 - sum over j >= 2 of e_j(x_1..x_k) t[j-1]_t z^j.

    Cofactor expansion at small sizes, fraction-free elimination beyond.
    """
    if not 1 <= k <= 6:
        raise ValueError("k must be between 1 and 6")
    if order is None:
        order = k
    if order > k:
        raise ValueError("order cannot exceed k")
    matrix = walk_matrix(k)
    det = _det_cofactor(matrix, k) if k <= 4 else _det_bareiss(matrix, k)
    expected: _ZX = _zx_const(k, ONE)
    for j in range(2, k + 1):
        weight = -(T * t_quantum(j - 1))
        table = _partition_table("e", (j,), k)
        for vec in table.terms:
            expected = _zx_add(expected, {(j, vec): weight})
    lhs = {key: c for key, c in det.items() if key[0] <= order}
    rhs = {key: c for key, c in expected.items() if key[0] <= order}
    return lhs == rhs


def distinguished_element_check(j: int, k: int) -> bool:
    """sum_i x_i e_j(x with x_i removed) = (j+1) e_{j+1}(x_1..x_k)."""
    if j < 0 or k < 1:
        raise ValueError("need j >= 0 and k >= 1")
    lhs = MonomialTable.zero(k)
    for i in range(k):
        others = [v for v in range(k) if v != i]
        for subset in combinations(others, j):
            vec = [0] * k
            vec[i] = 1
            for v in subset:
                vec[v] += 1
            lhs = lhs + MonomialTable(k, {tuple(vec): 1})
    rhs = _partition_table("e", (j + 1,), k).scale(j + 1) if j + 1 <= k else MonomialTable.zero(k)
    return lhs == rhs


def _shape_palindromic_unimodal(p: LaurentPoly) -> bool:
    """Palindromic about the midpoint of its own support, and unimodal."""
    if not p:
        return True
    center = Fraction(p.valuation() + p.degree(), 2)
    return palindrome_unimodal(p, center) == (True, True)


def unimodality_suite(n_max: int) -> list[dict]:
    """Palindromicity/unimodality assertions for every variant with a stated
    center, the even-cycle failure witness, and the special coefficient
    formulas for the cyclic enumerator."""
    if n_max > 8:
        raise ValueError("n_max must be at most 8")
    records = []

    def record(check: str, params: dict, ok: bool, lhs, rhs) -> None:
        records.append(
            {"check": check, "params": params, "status": "pass" if ok else "fail",
             "lhs": lhs, "rhs": rhs}
        )

    for n in range(2, n_max + 1):
        for variant, center in (
            ("W", Fraction(n - 1, 2)),
            ("Wneq", Fraction(n - 1, 2)),
            ("Wtildeneq", Fraction(n, 2)),
        ):
            flags = e_unimodal_palindromic(closed_form(variant, n), center)
            record(
                "unimodal-palindromic",
                {"variant": variant, "n": n, "center": str(center)},
                flags == (True, True),
                list(flags),
                [True, True],
            )
        # labeled cycle: odd clean, even fails with an explicit witness
        xc = closed_form("XC", n)
        center = Fraction(n, 2)
        flags = e_unimodal_palindromic(xc, center)
        direct = e_unimodal_direct(xc)
        positive, _ = e_positivity_report(xc)
        if n % 2:
            record(
                "cycle-odd-unimodal-palindromic",
                {"n": n, "center": str(center)},
                flags == (True, True) and direct,
                list(flags) + [direct],
                [True, True, True],
            )
        else:
            m = n // 2
            witness = xc.coeff((2,) * m)
            expected = LaurentPoly.t_power(m - 1) + LaurentPoly.t_power(m + 1)
            record(
                "cycle-even-positive-palindromic-not-unimodal",
                {"n": n, "center": str(center)},
                positive and flags[0] and not flags[1] and not direct,
                [positive, flags[0], flags[1], direct],
                [True, True, False, False],
            )
            record(
                "cycle-even-witness",
                {"n": n, "partition": [2] * m},
                witness == expected,
                witness.to_json_obj(),
                expected.to_json_obj(),
            )
            fixed = xc + SymFun("e", n, {(2,) * m: LaurentPoly.t_power(m)})
            fixed_flags = e_unimodal_palindromic(fixed, center)
            record(
                "cycle-even-corrected",
                {"n": n, "center": str(center)},
                fixed_flags == (True, True) and e_unimodal_direct(fixed),
                list(fixed_flags),
                [True, True],
            )
        # special coefficient shapes of the cyclic-descent enumerator; the
        # smallest-part-one shape needs the ordering multiplicity of the
        # parts >= 2, since the geometric expansion sums over ordered tuples
        wt = closed_form("Wtilde", n)
        for lam in partitions_of(n):
            ell = len(lam)
            if lam[-1] == 1:
                head = lam[:-1]
                mult = math.factorial(ell - 1)
                for part in set(head):
                    mult //= math.factorial(head.count(part))
                expected = LaurentPoly.t_power(ell - 1, mult)
                for part in head:
                    expected = expected * t_quantum(part - 1)
                record(
                    "cyclic-coefficient-smallest-part-one",
                    {"n": n, "partition": list(lam)},
                    wt.coeff(lam) == expected and _shape_palindromic_unimodal(expected),
                    wt.coeff(lam).to_json_obj(),
                    expected.to_json_obj(),
                )
            if len(set(lam)) == 1:
                j = lam[0]
                expected = LaurentPoly.t_power(j + ell - 2, j) * t_quantum(j - 1) ** (ell - 1)
                record(
                    "cyclic-coefficient-rectangle",
                    {"n": n, "partition": list(lam)},
                    wt.coeff(lam) == expected and _shape_palindromic_unimodal(expected),
                    wt.coeff(lam).to_json_obj(),
                    expected.to_json_obj(),
                )
    if n_max >= 5:
        w5 = closed_form("Wtilde", 5)
        pal_any = any(
            e_unimodal_palindromic(w5, Fraction(c2, 2))[0] for c2 in range(0, 2 * 5 + 1)
        )
        record(
            "cyclic-degree-five-counterexample",
            {"n": 5},
            (not pal_any) and (not e_unimodal_direct(w5)),
            [pal_any, e_unimodal_direct(w5)],
            [False, False],
        )
    return records


def counting_identities(n_max: int, m_max: int) -> list[dict]:
    """Alphabet-restricted descent counts against binomial sums over
    permutations graded by the drop-gap sets of their inverses."""
    if n_max > 6 or m_max > 5:
        raise ValueError("bounds exceed the supported range")
    records = []
    for n in range(1, n_max + 1):
        perm_data = []
        for sigma in combinat.permutations_of(n):
            stats = combinat.perm_stats(sigma)
            inv_stats = combinat.perm_stats(combinat.inverse_perm(sigma))
            perm_data.append((sigma, stats, len(inv_stats.des2_set)))
        for m in range(1, m_max + 1):
            for mode in ("des", "des-first-less", "cdes"):
                if mode == "des":
                    lhs = combinat.brute_enumerator("W", n, m).sum_coeffs()
                    rhs = ZERO
                    for _, stats, size in perm_data:
                        rhs = rhs + LaurentPoly.t_power(
                            stats.des, math.comb(m + size, n)
                        )
                elif mode == "des-first-less":
                    lhs = combinat.brute_enumerator("Wless", n, m).sum_coeffs()
                    rhs = ZERO
                    for sigma, stats, size in perm_data:
                        if sigma[0] < sigma[-1]:
                            rhs = rhs + LaurentPoly.t_power(
                                stats.des, math.comb(m + size, n)
                            )
                else:
                    lhs = combinat.brute_enumerator("Wtilde", n, m).sum_coeffs()
                    rhs = ZERO
                    for _, stats, size in perm_data:
                        rhs = rhs + LaurentPoly.t_power(
                            stats.cdes, math.comb(m + size, n)
                        )
                records.append(
                    {
                        "check": f"counting-{mode}",
                        "params": {"n": n, "m": m},
                        "status": "pass" if lhs == rhs else "fail",
                        "lhs": lhs.to_json_obj(),
                        "rhs": rhs.to_json_obj(),
                    }
                )
    return records
