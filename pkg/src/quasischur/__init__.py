"""Exact conversion of quasisymmetric F-expansions into Schur expansions,
with an executable sign-reversing involution and a modified Hall-Littlewood
application."""

from .combinatorics import (
    Composition,
    Partition,
    WeakComposition,
    composition_of_set,
    compositions_of,
    decompositions,
    pad,
    partitions_of,
    rsk_insert,
    rsk_shape,
    set_of_composition,
)
from .elw import (
    FIXED_POINT,
    ConstrainedMonomial,
    FixedPoint,
    VerificationReport,
    constrained_monomials,
    elw_to_schur,
    involution,
    verify_involution,
)
from .hall_littlewood import (
    DEFAULT_MAX_N,
    ExperimentReport,
    Filling,
    SizeBoundError,
    all_fillings,
    haglund_expansion,
    hl_fundamental_expansion,
    hll_expansion,
    inv_stat,
    inv_zero_fillings,
    is_schur_positive,
    leftover_experiment,
    maj_stat,
    pides,
    symmetry_check,
)
from .polynomial import (
    QT,
    ExactDivisionError,
    SparsePoly,
    antisymmetrize,
    exact_divide,
    vandermonde,
)
from .quasisym import (
    Expansion,
    expansion_to_poly,
    extract_f_expansion,
    fundamental,
    monomial_quasisym,
)
from .schur import SignedSchur, schur_bialternant, schur_ssyt, straighten

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "Partition",
    "WeakComposition",
    "composition_of_set",
    "compositions_of",
    "decompositions",
    "pad",
    "partitions_of",
    "rsk_insert",
    "rsk_shape",
    "set_of_composition",
    "FIXED_POINT",
    "ConstrainedMonomial",
    "FixedPoint",
    "VerificationReport",
    "constrained_monomials",
    "elw_to_schur",
    "involution",
    "verify_involution",
    "DEFAULT_MAX_N",
    "ExperimentReport",
    "Filling",
    "SizeBoundError",
    "all_fillings",
    "haglund_expansion",
    "hl_fundamental_expansion",
    "hll_expansion",
    "inv_stat",
    "inv_zero_fillings",
    "is_schur_positive",
    "leftover_experiment",
    "maj_stat",
    "pides",
    "symmetry_check",
    "QT",
    "ExactDivisionError",
    "SparsePoly",
    "antisymmetrize",
    "exact_divide",
    "vandermonde",
    "Expansion",
    "expansion_to_poly",
    "extract_f_expansion",
    "fundamental",
    "monomial_quasisym",
    "SignedSchur",
    "schur_bialternant",
    "schur_ssyt",
    "straighten",
]
