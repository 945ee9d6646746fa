"""Exact enumeration of Smirnov words by descents and cyclic descents.

Smirnov words are words over the positive integers with no two equal
adjacent letters.  This package computes their symmetric-function
enumerators in closed form (elementary, power sum, and fundamental
quasisymmetric expansions), the associated q-Eulerian polynomials with
exact root-of-unity evaluations, and verifies everything against
brute-force combinatorial oracles in exact rational arithmetic.
"""

from .exact import (
    CycloElem,
    LaurentPoly,
    QtPoly,
    cyclotomic,
    eulerian,
    eval_at_root_of_unity,
    euler_series_check,
    palindrome_unimodal,
    q_binomial,
    t_quantum,
)
from .symfun import (
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
    partitions_of,
    series_div,
    series_mul,
    z_of,
)
from .combinat import (
    Digraph,
    PermStats,
    WordStats,
    F_ones_specialization,
    F_principal_series,
    F_principal_specialization,
    brute_enumerator,
    chromatic_qsym,
    fundamental_F,
    perm_stats,
    smirnov_words,
    word_stats,
)
from .enumerators import (
    FExpansion,
    F_VARIANTS,
    POWERSUM_VARIANTS,
    ROOT_FAMILIES,
    VARIANTS,
    abc,
    cleared_form_check,
    closed_form,
    counting_identities,
    distinguished_element_check,
    f_expansion,
    powersum_form,
    powersum_top_coefficient,
    q_eulerian,
    q_exp_identity_check,
    root_of_unity,
    transfer_matrix_check,
    unimodality_suite,
)

__version__ = "0.1.0"
