"""Verification suites tying every closed form to a brute-force oracle.

Each suite yields a list of records ``{check, params, status, lhs, rhs}``
with the compared values rendered through the symmetric-function JSON
encoding wherever they are symmetric.  The CLI serializes these records
directly, so the layout here is a stable machine contract.
"""

from __future__ import annotations

from fractions import Fraction

from . import combinat
from . import enumerators as en
from .exact import (
    ONE,
    T,
    LaurentPoly,
    QtPoly,
    divisors,
    euler_series_check,
    eulerian,
    t_quantum,
)
from .symfun import (
    MonomialTable,
    NotSymmetricError,
    SymFun,
    SymSeries,
    expand_in_variables,
    monomial_to_e,
    partitions_of,
    z_of,
)

SUITES = (
    "oracle",
    "powersum",
    "f",
    "qexp",
    "roots",
    "unimodal",
    "counting",
    "series",
    "transfer",
)


def _present(x):
    if isinstance(x, SymFun):
        return x.to_json_obj()
    if isinstance(x, MonomialTable):
        try:
            return monomial_to_e(x).to_json_obj()
        except (NotSymmetricError, ValueError):
            return x.to_json_obj()
    if isinstance(x, (LaurentPoly, QtPoly)):
        return x.to_json_obj()
    if isinstance(x, en.FExpansion):
        return x.to_json_obj()
    if isinstance(x, SymSeries):
        return [c.to_json_obj() for c in x.coeffs]
    return x


def _record(check: str, params: dict, ok: bool, lhs, rhs) -> dict:
    return {
        "check": check,
        "params": params,
        "status": "pass" if ok else "fail",
        "lhs": _present(lhs),
        "rhs": _present(rhs),
    }


def suite_oracle(max_n: int, nvars: int) -> list[dict]:
    records = []
    for variant in en.VARIANTS:
        start = 2 if variant in ("Wneq", "XC") else 1
        for n in range(start, max_n + 1):
            lhs = expand_in_variables(en.closed_form(variant, n), nvars)
            if variant == "XC":
                rhs = combinat.chromatic_qsym(combinat.Digraph.cycle(n), nvars)
            else:
                rhs = combinat.brute_enumerator(variant, n, nvars)
            records.append(
                _record("oracle", {"variant": variant, "n": n, "vars": nvars}, lhs == rhs, lhs, rhs)
            )
    for n in range(1, max_n + 1):
        lhs = combinat.chromatic_qsym(combinat.Digraph.path(n), nvars)
        rhs = combinat.brute_enumerator("W", n, nvars)
        records.append(_record("chromatic-path", {"n": n, "vars": nvars}, lhs == rhs, lhs, rhs))
    for n in range(2, max_n + 1):
        lhs = combinat.chromatic_qsym(combinat.Digraph.directed_cycle(n), nvars)
        rhs = combinat.brute_enumerator("Wtildeneq", n, nvars)
        records.append(
            _record("chromatic-directed-cycle", {"n": n, "vars": nvars}, lhs == rhs, lhs, rhs)
        )
        lhs = combinat.chromatic_qsym(combinat.Digraph.cycle(n), nvars)
        rhs = combinat.brute_enumerator("Wless", n, nvars) + combinat.brute_enumerator(
            "Wgreater", n, nvars
        ).scale(T)
        records.append(
            _record("chromatic-cycle-split", {"n": n, "vars": nvars}, lhs == rhs, lhs, rhs)
        )
    for n in range(1, max_n + 1):
        less = combinat.brute_enumerator("Wless", n, nvars)
        greater = combinat.brute_enumerator("Wgreater", n, nvars)
        equal = combinat.brute_enumerator("Wequal", n, nvars)
        for name, lhs_variant, rhs in (
            ("refinement-all", "W", less + greater + equal),
            ("refinement-cyclic", "Wtilde", less.scale(T) + greater + equal),
            ("refinement-distinct", "Wneq", less + greater),
            ("refinement-cyclic-distinct", "Wtildeneq", less.scale(T) + greater),
        ):
            lhs = combinat.brute_enumerator(lhs_variant, n, nvars)
            records.append(_record(name, {"n": n, "vars": nvars}, lhs == rhs, lhs, rhs))
        reversed_less = less.map_coeffs(lambda p: p.reverse(n - 1))
        records.append(
            _record(
                "word-reversal",
                {"n": n, "vars": nvars},
                greater == reversed_less,
                greater,
                reversed_less,
            )
        )
    return records


def suite_powersum(max_n: int) -> list[dict]:
    records = []
    for variant in en.POWERSUM_VARIANTS:
        for n in range(1, max_n + 1):
            form = en.powersum_form(variant, n)
            lhs = expand_in_variables(form.omega(), n)
            rhs = combinat.brute_enumerator(variant, n, n)
            records.append(
                _record("powersum-vs-brute", {"variant": variant, "n": n}, lhs == rhs, form, rhs)
            )
    for n in range(1, 9):
        for lam in partitions_of(n):
            ell = len(lam)
            prod = ONE
            for part in lam:
                prod = prod * t_quantum(part)
            s = T * eulerian(ell - 1) * prod
            c_less = s.derivative()
            c_greater = LaurentPoly({i: (n - i) * s.coeff(n - i) for i in range(1, n)})
            ok = c_greater == c_less.reverse(n - 1)
            records.append(
                _record(
                    "powersum-reversal",
                    {"n": n, "partition": list(lam)},
                    ok,
                    c_greater,
                    c_less.reverse(n - 1),
                )
            )
            combo = T * c_less + c_greater
            expected = (
                n * T * eulerian(ell - 1) * prod if ell > 1 else n * T * t_quantum(n - 1)
            )
            records.append(
                _record(
                    "powersum-cyclic-combination",
                    {"n": n, "partition": list(lam)},
                    combo == expected,
                    combo,
                    expected,
                )
            )
            if ell > 1:
                ok = all(s.coeff(i) == s.coeff(n - i) for i in range(1, n))
                records.append(
                    _record(
                        "powersum-weight-palindromic",
                        {"n": n, "partition": list(lam)},
                        ok,
                        s,
                        s.reverse(n),
                    )
                )
    for variant in en.TOP_VARIANTS:
        for n in range(2, 9):
            lhs = en.powersum_top_coefficient(variant, n)
            rhs = en.closed_form(variant, n).coeff((n,))
            records.append(
                _record("top-coefficient", {"variant": variant, "n": n}, lhs == rhs, lhs, rhs)
            )
    for i in range(2, 11):
        a, b, c = en.abc(i)
        checks = (
            ("abc-sum", a + b - c, t_quantum(i)),
            ("abc-cyclic-sum", T * a + b, i * T * t_quantum(i - 1)),
            ("abc-reversal", b, a.reverse(i - 1)),
        )
        for name, lhs, rhs in checks:
            records.append(_record(name, {"i": i}, lhs == rhs, lhs, rhs))
    for n in range(1, min(max_n, 6) + 1):
        lhs = _powersum_extraction(n)
        rhs = en.powersum_form("W", n).from_zpart()
        records.append(_record("powersum-extraction", {"n": n}, lhs == rhs, lhs, rhs))
    return records


def _powersum_extraction(n: int) -> SymFun:
    """Solve the cross-multiplied homogeneous-series identity for the power
    sum coefficients degree by degree; each step divides exactly by 1 - t."""
    H = SymSeries.h_series_p(n)
    one_minus_t = ONE - T
    denom = [None] + [
        H[j].scale(LaurentPoly.t_power(j) - T) for j in range(1, n + 1)
    ]
    series: list[SymFun] = [SymFun.scalar("p")]
    for m in range(1, n + 1):
        acc = H[m].scale(one_minus_t)
        for j in range(1, m + 1):
            acc = acc - denom[j] * series[m - j]
        series.append(acc.map_coeffs(lambda p: p / one_minus_t))
    return series[n]


def suite_f(max_n: int) -> list[dict]:
    records = []
    kind_of = {"W": "Ades", "Wless": "Aless", "Wtilde": "Atilde"}
    for variant in en.F_VARIANTS:
        for n in range(1, max_n + 1):
            fe = en.f_expansion(variant, n)
            lhs = fe.to_table(n)
            rhs = expand_in_variables(en.closed_form(variant, n).omega(), n)
            records.append(
                _record("f-vs-closed", {"variant": variant, "n": n}, lhs == rhs, fe, rhs)
            )
            if variant in kind_of:
                num = fe.principal_numerator()
                qe = en.q_eulerian(kind_of[variant], n)
                records.append(
                    _record(
                        "f-principal-numerator",
                        {"variant": variant, "n": n},
                        num == qe,
                        num,
                        qe,
                    )
                )
    for n in range(1, max_n + 1):
        for subset_bits in range(1 << (n - 1)):
            S = frozenset(i + 1 for i in range(n - 1) if subset_bits >> i & 1)
            for m in range(1, 5):
                total = combinat.fundamental_F(n, S, m).sum_coeffs()
                expected = combinat.F_ones_specialization(n, S, m)
                records.append(
                    _record(
                        "f-ones-total",
                        {"n": n, "set": sorted(S), "m": m},
                        total == LaurentPoly.const(expected),
                        total,
                        LaurentPoly.const(expected),
                    )
                )
    order = 10
    for n in range(1, min(max_n, 4) + 1):
        for subset_bits in range(1 << (n - 1)):
            S = frozenset(i + 1 for i in range(n - 1) if subset_bits >> i & 1)
            direct = combinat.F_principal_series(n, S, order)
            numerator, nn = combinat.F_principal_specialization(n, S)
            closed = numerator * combinat.inverse_q_product(nn, order)
            closed = QtPoly({e: c for e, c in closed.terms.items() if e <= order})
            records.append(
                _record(
                    "f-principal-series",
                    {"n": n, "set": sorted(S)},
                    direct == closed,
                    direct,
                    closed,
                )
            )
    return records


def suite_qexp(max_order: int) -> list[dict]:
    max_order = min(max_order, 8)
    records = []
    for n in range(0, 8):
        lhs = en.q_eulerian("Amajexc", n)
        rhs = en.q_eulerian("Ades", n)
        records.append(_record("interpretation-equality", {"n": n}, lhs == rhs, lhs, rhs))
    for kind in en.QEXP_IDENTITIES:
        ok = en.q_exp_identity_check(kind, max_order)
        records.append(
            _record("qexp-identity", {"kind": kind, "order": max_order}, ok, ok, True)
        )
    for n in range(2, max_order + 1):
        lhs = en.q_eulerian("Atilde", n).at_q_one()
        rhs = n * T * eulerian(n - 1)
        records.append(_record("cyclic-at-one", {"n": n}, lhs == rhs, lhs, rhs))
        lhs = en.q_eulerian("Aless", n).at_q_one()
        rhs = (T * eulerian(n - 1)).derivative()
        records.append(_record("endpoint-at-one", {"n": n}, lhs == rhs, lhs, rhs))
    diag = en.q_statistic_diagnostic(3)
    records.append(
        _record(
            "q-statistic-diagnostic",
            {"n": 3},
            diag["des_weighted_agree"] and not diag["cdes_weighted_agree"],
            diag,
            {"des_weighted_agree": True, "cdes_weighted_agree": False},
        )
    )
    return records


def suite_roots(max_n: int = 8) -> list[dict]:
    records = []
    for n in range(2, max_n + 1):
        for k in divisors(n):
            for kind in en.ROOT_FAMILIES:
                parts = en.root_of_unity_parts(kind, n, k)
                values = list(parts.values())
                ok = all(v == values[0] for v in values[1:])
                records.append(
                    _record(
                        "root-of-unity",
                        {"kind": kind, "n": n, "k": k, "routes": sorted(parts)},
                        ok,
                        parts["via_eval"],
                        parts["closed"],
                    )
                )
    return records


def suite_series(order: int = 6) -> list[dict]:
    records = []
    for variant in en.VARIANTS:
        ok = en.quotient_form_check(variant, order)
        records.append(
            _record("series-quotient", {"variant": variant, "order": order}, ok, ok, True)
        )
    for variant in en.CLEARED_VARIANTS:
        ok = en.cleared_form_check(variant, order)
        records.append(
            _record("series-cleared", {"variant": variant, "order": order}, ok, ok, True)
        )
    D = en.denominator_series(order)
    inv = SymSeries.one("e", order).div(D)
    ok = D.mul(inv, order) == SymSeries.one("e", order)
    records.append(_record("series-geometric-inverse", {"order": order}, ok, ok, True))
    for n in range(2, min(order, 8) + 1):
        less = en.closed_form("Wless", n)
        greater = en.closed_form("Wgreater", n)
        equal = en.closed_form("Wequal", n)
        pairs = (
            ("series-refinement-all", en.closed_form("W", n), less + greater + equal),
            ("series-refinement-cyclic", en.closed_form("Wtilde", n), less.scale(T) + greater + equal),
            ("series-refinement-distinct", en.closed_form("Wneq", n), less + greater),
            ("series-refinement-cyclic-distinct", en.closed_form("Wtildeneq", n), less.scale(T) + greater),
            ("series-cycle-split", en.closed_form("XC", n), less + greater.scale(T)),
        )
        for name, lhs, rhs in pairs:
            records.append(_record(name, {"n": n}, lhs == rhs, lhs, rhs))
    H = SymSeries.h_series_p(order)
    Htz = H.grade_scale_t()
    for power in range(1, 4):
        ratio = H.div(Htz)
        lhs = SymSeries.one("p", order)
        for _ in range(power):
            lhs = lhs.mul(ratio, order)
        coeffs = []
        for n in range(order + 1):
            terms = {}
            for lam in partitions_of(n):
                c = LaurentPoly.const(power ** len(lam))
                for part in lam:
                    c = c * (ONE - LaurentPoly.t_power(part))
                terms[lam] = c * Fraction(1, z_of(lam))
            coeffs.append(SymFun("p", n, terms))
        rhs = SymSeries("p", coeffs)
        ok = lhs == rhs
        for n in range(min(order, 6) + 1):
            if n >= 1:
                ok = ok and expand_in_variables(lhs[n], n) == expand_in_variables(rhs[n], n)
        records.append(
            _record("h-ratio-power", {"power": power, "order": order}, ok, ok, True)
        )
    ps_coeffs = [SymFun.scalar("p")]
    for n in range(1, order + 1):
        terms = {}
        for lam in partitions_of(n):
            c = eulerian(len(lam))
            for part in lam:
                c = c * t_quantum(part)
            terms[lam] = c * Fraction(1, z_of(lam))
        ps_coeffs.append(SymFun("p", n, terms))
    ps_series = SymSeries("p", ps_coeffs)
    denom = Htz - H.scale(T)
    lhs = ps_series.mul(denom, order)
    rhs = H.scale(ONE - T)
    records.append(
        _record("eulerian-powersum-series", {"order": order}, lhs == rhs, lhs == rhs, True)
    )
    for m in range(2, 6):
        ok = euler_series_check(m, 12)
        records.append(_record("eulerian-geometric-series", {"m": m, "order": 12}, ok, ok, True))
    return records


def suite_transfer(max_k: int = 5) -> list[dict]:
    records = []
    for k in range(2, max_k + 1):
        ok = en.transfer_matrix_check(k)
        records.append(_record("transfer-determinant", {"k": k}, ok, ok, True))
    for k in range(1, 7):
        for j in range(0, 6):
            ok = en.distinguished_element_check(j, k)
            records.append(
                _record("distinguished-element", {"j": j, "k": k}, ok, ok, True)
            )
    return records


def run_suite(name: str, *, max_n: int = 5, nvars: int = 6, max_order: int = 8) -> list[dict]:
    if name == "oracle":
        return suite_oracle(max_n, nvars)
    if name == "powersum":
        return suite_powersum(max_n)
    if name == "f":
        return suite_f(max_n)
    if name == "qexp":
        return suite_qexp(max_order)
    if name == "roots":
        return suite_roots()
    if name == "unimodal":
        return en.unimodality_suite(8)
    if name == "counting":
        return en.counting_identities(6, 5)
    if name == "series":
        return suite_series(min(max_order, 8))
    if name == "transfer":
        return suite_transfer()
    raise ValueError(f"unknown suite {name!r}")


def run_suites(names, *, max_n: int = 5, nvars: int = 6, max_order: int = 8) -> list[dict]:
    records = []
    for name in names:
        records.extend(run_suite(name, max_n=max_n, nvars=nvars, max_order=max_order))
    return records


def all_pass(records) -> bool:
    return all(r["status"] == "pass" for r in records)
