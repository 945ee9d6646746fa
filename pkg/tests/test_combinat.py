"""Brute-force oracles: words, colorings, permutations, quasisymmetric F."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from smirnov.exact import ONE, T, LaurentPoly, QtPoly
from smirnov.combinat import (
    Digraph,
    F_ones_specialization,
    F_principal_series,
    F_principal_specialization,
    brute_enumerator,
    chromatic_qsym,
    fundamental_F,
    inverse_perm,
    inverse_q_product,
    perm_stats,
    permutations_of,
    smirnov_words,
    word_stats,
)
from smirnov.symfun import MonomialTable, SymFun, expand_in_variables, monomial_to_e


class TestSmirnovWords:
    def test_small_cases(self):
        assert set(smirnov_words(2, 2)) == {(1, 2), (2, 1)}
        assert set(smirnov_words(3, 2)) == {(1, 2, 1), (2, 1, 2)}
        assert sum(1 for _ in smirnov_words(3, 3)) == 12

    def test_counts_match_formula(self):
        for n in range(1, 6):
            for k in range(1, 5):
                count = sum(1 for _ in smirnov_words(n, k))
                assert count == k * (k - 1) ** (n - 1)

    def test_filters_partition_the_words(self):
        for n in range(1, 6):
            all_words = set(smirnov_words(n, 4))
            by_class = {
                cls: set(smirnov_words(n, 4, cls)) for cls in ("<", ">", "=", "!=")
            }
            assert by_class["<"] | by_class[">"] | by_class["="] == all_words
            assert by_class["!="] == by_class["<"] | by_class[">"]
            assert not by_class["<"] & by_class[">"]

    def test_length_one_words_are_constant_class(self):
        assert set(smirnov_words(1, 3, "=")) == {(1,), (2,), (3,)}
        assert not set(smirnov_words(1, 3, "!="))

    def test_no_adjacent_repeats(self):
        for w in smirnov_words(5, 3):
            assert all(w[i] != w[i + 1] for i in range(4))


class TestWordStats:
    def test_examples(self):
        s = word_stats((1, 2, 1))
        assert (s.des, s.cdes, s.endpoint) == (1, 1, "=")
        s = word_stats((1, 2))
        assert (s.des, s.cdes, s.endpoint) == (0, 1, "<")
        s = word_stats((7,))
        assert (s.des, s.cdes) == (0, 0)

    @given(st.lists(st.integers(1, 5), min_size=1, max_size=8))
    @settings(max_examples=60, deadline=None)
    def test_cyclic_descent_decomposition(self, letters):
        w = tuple(letters)
        s = word_stats(w)
        assert s.cdes == s.des + (1 if w[-1] > w[0] else 0)
        if len(set(letters)) > 1:
            # a nonconstant word has a cyclic descent somewhere
            rotations = [w[i:] + w[:i] for i in range(len(w))]
            assert all(word_stats(r).cdes >= 1 for r in rotations)


class TestBruteEnumerator:
    def test_degree_three_over_two_letters(self):
        table = brute_enumerator("W", 3, 2)
        assert table == MonomialTable(2, {(2, 1): T, (1, 2): T})

    def test_cyclic_degree_three(self):
        f = monomial_to_e(brute_enumerator("Wtilde", 3, 3))
        assert f == SymFun("e", 3, {(2, 1): T, (3,): LaurentPoly.t_power(2, 3)})

    def test_first_less_than_last_impossible_at_length_one(self):
        assert not brute_enumerator("Wless", 1, 4)

    def test_refinement_identities(self):
        for n in range(1, 7):
            for k in range(1, 6):
                less = brute_enumerator("Wless", n, k)
                greater = brute_enumerator("Wgreater", n, k)
                equal = brute_enumerator("Wequal", n, k)
                assert brute_enumerator("W", n, k) == less + greater + equal
                assert brute_enumerator("Wtilde", n, k) == less.scale(T) + greater + equal
                assert brute_enumerator("Wneq", n, k) == less + greater
                assert brute_enumerator("Wtildeneq", n, k) == less.scale(T) + greater

    def test_reversal_involution(self):
        for n in range(1, 7):
            for k in range(1, 6):
                less = brute_enumerator("Wless", n, k)
                greater = brute_enumerator("Wgreater", n, k)
                assert greater == less.map_coeffs(lambda p: p.reverse(n - 1))


class TestChromatic:
    def test_path_is_word_enumerator(self):
        for n in range(1, 6):
            for k in range(1, 6):
                assert chromatic_qsym(Digraph.path(n), k) == brute_enumerator("W", n, k)

    def test_directed_cycle_is_cyclic_distinct_enumerator(self):
        for n in range(2, 6):
            for k in range(1, 6):
                assert chromatic_qsym(Digraph.directed_cycle(n), k) == brute_enumerator(
                    "Wtildeneq", n, k
                )

    def test_labeled_cycle_splits_by_endpoint(self):
        for n in range(2, 6):
            for k in range(1, 6):
                expected = brute_enumerator("Wless", n, k) + brute_enumerator(
                    "Wgreater", n, k
                ).scale(T)
                assert chromatic_qsym(Digraph.cycle(n), k) == expected

    def test_labeled_cycle_table_converts_to_e_basis(self):
        # symmetry is not a priori, so a successful conversion is the test
        for n in range(2, 7):
            monomial_to_e(chromatic_qsym(Digraph.cycle(n), n))

    def test_two_cycle_keeps_parallel_edge(self):
        table = chromatic_qsym(Digraph.cycle(2), 2)
        assert table == MonomialTable(2, {(1, 1): ONE + LaurentPoly.t_power(2)})

    def test_no_self_loops(self):
        with pytest.raises(ValueError):
            Digraph(2, ((1, 1),))

    def test_triangle_against_direct_count(self):
        # proper colorings of the labeled triangle with distinct colors a<b<c
        # contribute t^inversions, summing to the t-factorial of 3
        table = chromatic_qsym(Digraph.cycle(3), 3)
        f = monomial_to_e(table)
        assert f == SymFun("e", 3, {(3,): (ONE + T) * (ONE + T + T * T)})


class TestPermStats:
    def test_examples(self):
        s = perm_stats((2, 3, 1))
        assert (s.exc, s.maj) == (2, 2)
        assert perm_stats(inverse_perm((2, 3, 1))).des2_set == frozenset({1})
        ident = perm_stats((1, 2, 3, 4))
        assert (ident.des, ident.cdes, ident.exc, ident.maj) == (0, 1, 0, 0)
        s = perm_stats((3, 2, 1))
        assert (s.maj, s.exc) == (3, 1)

    def test_singleton(self):
        s = perm_stats((1,))
        assert (s.des, s.cdes, s.exc, s.maj) == (0, 0, 0, 0)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            perm_stats((1, 1, 2))

    def test_set_invariants(self):
        for n in range(1, 7):
            for sigma in permutations_of(n):
                s = perm_stats(sigma)
                assert s.des2_set <= s.des_set
                assert not (s.asc2_set & s.des_set)
                assert s.maj == sum(s.des_set)
                assert s.maj2des == sum(s.des2_set)
                assert s.maj2asc == sum(s.asc2_set)
                assert s.cdes == s.des + (1 if sigma[-1] > sigma[0] else 0)


class TestFundamentalF:
    def test_empty_set_is_complete_homogeneous(self):
        for n in range(1, 5):
            for k in range(1, 5):
                assert fundamental_F(n, set(), k) == expand_in_variables(
                    SymFun.generator("h", n), k
                )

    def test_full_set_is_elementary(self):
        for n in range(1, 5):
            for k in range(1, 6):
                assert fundamental_F(n, set(range(1, n)), k) == expand_in_variables(
                    SymFun.generator("e", n), k
                )

    def test_single_strict_position(self):
        assert fundamental_F(3, {1}, 2) == MonomialTable(2, {(2, 1): 1})

    def test_ones_specialization_examples(self):
        assert F_ones_specialization(3, set(), 1) == 1
        assert F_ones_specialization(3, {1}, 2) == 1
        assert F_ones_specialization(3, {1, 2}, 3) == math.comb(3, 3)

    def test_ones_specialization_matches_totals(self):
        for n in range(1, 7):
            for bits in range(1 << (n - 1)):
                S = {i + 1 for i in range(n - 1) if bits >> i & 1}
                for m in range(1, 5):
                    total = fundamental_F(n, S, m).sum_coeffs()
                    assert total == LaurentPoly.const(F_ones_specialization(n, S, m))

    def test_principal_specialization_examples(self):
        assert F_principal_specialization(3, set())[0] == QtPoly.one()
        assert F_principal_specialization(3, {2})[0] == QtPoly.q_power(2)
        assert F_principal_specialization(3, {1, 2})[0] == QtPoly.q_power(3)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_principal_specialization_against_series(self, n):
        order = 10
        for bits in range(1 << (n - 1)):
            S = {i + 1 for i in range(n - 1) if bits >> i & 1}
            direct = F_principal_series(n, S, order)
            numerator, nn = F_principal_specialization(n, S)
            closed = numerator * inverse_q_product(nn, order)
            closed = QtPoly({e: c for e, c in closed.terms.items() if e <= order})
            assert direct == closed
