"""Symmetric functions: partitions, expansion, conversion, series."""

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from smirnov.exact import ONE, T, LaurentPoly, t_quantum
from smirnov.symfun import (
    MonomialTable,
    NotSymmetricError,
    SymFun,
    SymSeries,
    conjugate,
    e_positivity_report,
    e_unimodal_direct,
    e_unimodal_palindromic,
    expand_in_variables,
    monomial_to_e,
    omega,
    omega_sign,
    partitions_of,
    series_div,
    series_mul,
    z_of,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


class TestPartitions:
    def test_counts(self):
        for n, expected in enumerate(PARTITION_COUNTS):
            assert len(partitions_of(n)) == expected

    def test_reverse_lex_order(self):
        assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
        for n in range(8):
            lams = partitions_of(n)
            assert all(lams[i] > lams[i + 1] for i in range(len(lams) - 1))

    def test_each_exactly_once(self):
        for n in range(9):
            lams = partitions_of(n)
            assert len(set(lams)) == len(lams)
            assert all(sum(lam) == n for lam in lams)

    def test_z_values(self):
        assert z_of((1,) * 5) == math.factorial(5)
        assert z_of((2, 1)) == 2
        assert z_of((3, 3)) == 18
        assert z_of(()) == 1

    def test_z_counts_cycle_types(self):
        # permutations of cycle type lam number n!/z_lam; they exhaust S_n
        for n in range(1, 8):
            assert sum(
                Fraction(math.factorial(n), z_of(lam)) for lam in partitions_of(n)
            ) == math.factorial(n)

    def test_conjugate(self):
        assert conjugate((4, 1)) == (2, 1, 1, 1)
        for n in range(8):
            for lam in partitions_of(n):
                assert conjugate(conjugate(lam)) == lam

    def test_omega_sign(self):
        assert omega_sign((3,)) == 1
        assert omega_sign((2,)) == -1
        assert omega_sign((1, 1, 1)) == 1


class TestExpansion:
    def test_generators_in_two_variables(self):
        assert expand_in_variables(SymFun.generator("e", 2), 2) == MonomialTable(2, {(1, 1): 1})
        assert expand_in_variables(SymFun.generator("p", 2), 2) == MonomialTable(
            2, {(2, 0): 1, (0, 2): 1}
        )
        # multisets of size 2 from 2 letters
        assert expand_in_variables(SymFun.generator("h", 2), 2) == MonomialTable(
            2, {(2, 0): 1, (1, 1): 1, (0, 2): 1}
        )

    def test_elementary_vanishes_beyond_variable_count(self):
        assert not expand_in_variables(SymFun.generator("e", 3), 2)

    def test_monomial_basis_orbit(self):
        table = expand_in_variables(SymFun("m", 3, {(2, 1): 1}), 3)
        assert set(table.terms) == {(2, 1, 0), (2, 0, 1), (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2)}

    def test_zpart_scaling(self):
        f = SymFun("p", 2, {(2,): 1}, zpart=True)
        assert expand_in_variables(f, 2) == MonomialTable(
            2, {(2, 0): Fraction(1, 2), (0, 2): Fraction(1, 2)}
        )

    def test_multiplicativity_on_random_generators(self):
        import random

        rng = random.Random(7)
        for basis in "ehp":
            for _ in range(10):
                i = rng.randint(1, 3)
                j = rng.randint(1, 3)
                f = SymFun.generator(basis, i, T)
                g = SymFun.generator(basis, j, ONE + T)
                k = i + j
                assert expand_in_variables(f * g, k) == expand_in_variables(
                    f, k
                ) * expand_in_variables(g, k)


small_polys = st.dictionaries(st.integers(0, 3), st.integers(-4, 4), max_size=3).map(LaurentPoly)


@st.composite
def e_symfuns(draw):
    n = draw(st.integers(0, 5))
    lams = partitions_of(n)
    terms = {}
    for lam in lams:
        if draw(st.booleans()):
            terms[lam] = draw(small_polys)
    return SymFun("e", n, terms)


class TestMonomialToE:
    def test_round_trip_examples(self):
        f = SymFun("e", 3, {(2, 1): ONE + T})
        assert monomial_to_e(expand_in_variables(f, 3)) == f

    @given(e_symfuns())
    @settings(max_examples=40, deadline=None)
    def test_round_trip(self, f):
        k = max(f.degree, 1)
        assert monomial_to_e(expand_in_variables(f, k), f.degree, k) == f

    def test_single_monomial_not_symmetric(self):
        table = MonomialTable(3, {(2, 1, 0): 1})
        with pytest.raises(NotSymmetricError):
            monomial_to_e(table)

    def test_unbalanced_orbit_not_symmetric(self):
        table = MonomialTable(3, {(2, 1, 0): 1, (1, 2, 0): 2})
        with pytest.raises(NotSymmetricError):
            monomial_to_e(table)
        # full orbit but one coefficient off
        orbit = {(2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1, (0, 1, 2): 2}
        with pytest.raises(NotSymmetricError):
            monomial_to_e(MonomialTable(3, orbit))

    def test_too_few_variables_rejected(self):
        table = expand_in_variables(SymFun.generator("e", 2), 2)
        with pytest.raises(ValueError):
            monomial_to_e(table, 2, 1)

    def test_inhomogeneous_rejected(self):
        table = MonomialTable(2, {(1, 0): 1, (1, 1): 1})
        with pytest.raises(ValueError):
            table.total_degree()


class TestOmega:
    def test_swaps_e_and_h(self):
        f = SymFun("e", 4, {(3, 1): T})
        assert omega(f) == SymFun("h", 4, {(3, 1): T})
        assert omega(omega(f)) == f

    def test_p_basis_sign(self):
        assert omega(SymFun.generator("p", 3)) == SymFun.generator("p", 3)
        assert omega(SymFun.generator("p", 2)) == SymFun("p", 2, {(2,): -1})

    def test_m_basis_rejected(self):
        with pytest.raises(ValueError):
            omega(SymFun("m", 2, {(1, 1): 1}))

    def test_omega_via_expansion(self):
        # omega is an algebra map: check on e_{2,1} -> h_{2,1} through p
        f = SymFun("e", 2, {(2,): 1})
        # e_2 = (p_{1,1} - p_2)/2, h_2 = (p_{1,1} + p_2)/2
        p_form = SymFun("p", 2, {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})
        assert expand_in_variables(f, 2) == expand_in_variables(p_form, 2)
        assert expand_in_variables(omega(f), 2) == expand_in_variables(omega(p_form), 2)


class TestSeries:
    def test_omega_exchanges_generating_series(self):
        E = SymSeries.generating("e", 8)
        H = SymSeries.generating("h", 8)
        assert E.omega() == H

    def test_geometric_inverse(self):
        def weight(i):
            return -(T * t_quantum(i - 1)) if i >= 2 else (ONE if i == 0 else None)

        D = SymSeries.from_weights(6, weight)
        inv = SymSeries.one("e", 6).div(D)
        assert D.mul(inv) == SymSeries.one("e", 6)
        # first two displayed coefficients of the expansion
        assert inv[2] == SymFun("e", 2, {(2,): T})
        assert inv[4] == SymFun("e", 4, {(4,): T * t_quantum(3), (2, 2): T * T})

    def test_division_requires_unit_constant_term(self):
        bad = SymSeries.from_weights(3, lambda i: ONE - T if i == 0 else None)
        with pytest.raises(ValueError):
            SymSeries.one("e", 3).div(bad)

    def test_mul_div_round_trip(self):
        A = SymSeries.generating("e", 5)
        D = SymSeries.from_weights(5, lambda i: ONE if i == 0 else (T if i >= 2 else None))
        assert series_mul(series_div(A, D), D) == A

    def test_grade_scale_and_dt(self):
        E = SymSeries.generating("e", 4)
        Etz = E.grade_scale_t()
        assert Etz[3] == SymFun.generator("e", 3, LaurentPoly.t_power(3))
        assert Etz.dt()[3] == SymFun.generator("e", 3, LaurentPoly.t_power(2, 3))


class TestReports:
    def test_e_positivity(self):
        good = SymFun("e", 3, {(3,): ONE + 2 * T})
        flag, listing = e_positivity_report(good)
        assert flag and listing == [((3,), ONE + 2 * T, True)]
        bad = SymFun("e", 3, {(3,): -3 * T, (2, 1): T})
        flag, listing = e_positivity_report(bad)
        assert not flag
        assert [(lam, ok) for lam, _, ok in listing] == [((3,), False), ((2, 1), True)]
        assert e_positivity_report(SymFun.zero("e", 2))[0]

    def test_fractional_coefficient_is_not_positive(self):
        f = SymFun("e", 1, {(1,): LaurentPoly.const(Fraction(1, 2))})
        assert not e_positivity_report(f)[0]

    def test_unimodal_palindromic_per_coefficient(self):
        f = SymFun("e", 2, {(2,): ONE + T})
        assert e_unimodal_palindromic(f, Fraction(1, 2)) == (True, True)
        gap = SymFun("e", 4, {(2, 2): ONE + T * T})
        assert e_unimodal_palindromic(gap, 1) == (True, False)

    def test_unimodal_direct_catches_slice_failures(self):
        # each coefficient is unimodal but the slice chain breaks
        f = SymFun(
            "e",
            5,
            {
                (4, 1): T + T**2 + T**3,
                (2, 2, 1): T**2,
                (3, 2): 2 * T**2 + 5 * T**3,
                (5,): LaurentPoly.t_power(4, 5),
            },
        )
        assert not e_unimodal_direct(f)
        ok = SymFun("e", 2, {(2,): ONE + T, (1, 1): T})
        assert e_unimodal_direct(ok)


class TestJson:
    def test_symfun_encoding_shape(self):
        f = SymFun("e", 5, {(4, 1): ONE, (3, 2): 2 * T})
        obj = f.to_json_obj()
        assert obj["basis"] == "e" and obj["degree"] == 5
        assert obj["terms"][0] == {"partition": [4, 1], "coeff": {"0": 1}}
        assert obj["terms"][1] == {"partition": [3, 2], "coeff": {"1": 2}}
        assert SymFun.from_json_obj(obj) == f

    def test_byte_determinism(self):
        f = SymFun("e", 4, {(2, 2): T, (4,): ONE + T})
        assert json.dumps(f.to_json_obj()) == json.dumps(f.to_json_obj())

    def test_zpart_marker(self):
        f = SymFun("p", 2, {(2,): T}, zpart=True)
        obj = f.to_json_obj()
        assert obj["basis"] == "p/z"
        assert SymFun.from_json_obj(obj) == f
