"""Exact quantum decompositions of Meixner-class random variables.

The package builds the creation / preservation / annihilation operators of a
one-dimensional orthogonal-polynomial system from its recurrence
coefficients, verifies their commutation identities in exact rational
arithmetic, computes closed-form position-momentum and translation-operator
decompositions for the Meixner family, characterizes which translation
combinations can act as annihilation operators, and classifies every valid
parameter set into one of six distribution classes.
"""

from .characterize import (
    BoundCert,
    ComboValidity,
    CumulantSeq,
    DuplicateShift,
    InvalidCombo,
    NegativeMean,
    SumNotZero,
    ZeroCoefficient,
    beta0_combo,
    bound_cert,
    combo_cumulants,
    ensure_valid,
    laplace_series,
    moments_via_cumulants,
    moments_via_recursion,
    validate_combo,
)
from .classify import (
    Binomial,
    BinomialBranch,
    Gamma,
    Gaussian,
    HyperbolicSecant,
    MeixnerClass,
    Pascal,
    Poisson,
    Unsupported,
    class_predicates,
    classify,
    crosscheck,
    distribution_moments,
)
from .exact import Poly, Rat, format_rat, parse_rat, rational_sqrt
from .meixner import (
    InvalidParams,
    MeixnerDerived,
    MeixnerParams,
    NotASquare,
    TranslationCombo,
    TranslationExpr,
    TranslationFormReport,
    comm_ux_closed_form,
    one_meixner_limit_check,
    pmd_a0,
    pmd_aminus,
    pmd_aplus,
    pmd_number,
    pmd_u,
    pmd_v,
    pmd_x,
    series_decomposition,
    szego_jacobi,
    translation_form,
)
from .operators import (
    GradedOp,
    VerifyReport,
    commutator,
    identity_op,
    number_op,
    position_op,
    quantum_ops,
    semi_ops,
    to_monomial_basis,
    verify_universal,
    zero_op,
)
from .orthopoly import (
    DegenerateMoments,
    HankelReport,
    MomentSeq,
    SzegoJacobi,
    TruncationBeyondSupport,
    apply_functional,
    gram_schmidt_from_moments,
    hankel_check,
    moments_from_sj,
    monic_polys,
    shift_moments,
)
from .pmd import NotFaithful, PMDecomp, XDWord, apply_pmd, extract_pmd, normal_order
from .surd import Quadratic

__all__ = [
    "Binomial",
    "BinomialBranch",
    "BoundCert",
    "ComboValidity",
    "CumulantSeq",
    "DegenerateMoments",
    "DuplicateShift",
    "Gamma",
    "Gaussian",
    "GradedOp",
    "HankelReport",
    "HyperbolicSecant",
    "InvalidCombo",
    "InvalidParams",
    "MeixnerClass",
    "MeixnerDerived",
    "MeixnerParams",
    "MomentSeq",
    "NegativeMean",
    "NotASquare",
    "NotFaithful",
    "PMDecomp",
    "Pascal",
    "Poisson",
    "Poly",
    "Quadratic",
    "Rat",
    "SumNotZero",
    "SzegoJacobi",
    "TranslationCombo",
    "TranslationExpr",
    "TranslationFormReport",
    "TruncationBeyondSupport",
    "Unsupported",
    "VerifyReport",
    "XDWord",
    "ZeroCoefficient",
    "apply_functional",
    "apply_pmd",
    "beta0_combo",
    "bound_cert",
    "class_predicates",
    "classify",
    "comm_ux_closed_form",
    "combo_cumulants",
    "commutator",
    "crosscheck",
    "distribution_moments",
    "ensure_valid",
    "extract_pmd",
    "format_rat",
    "gram_schmidt_from_moments",
    "hankel_check",
    "identity_op",
    "laplace_series",
    "moments_from_sj",
    "moments_via_cumulants",
    "moments_via_recursion",
    "monic_polys",
    "normal_order",
    "number_op",
    "one_meixner_limit_check",
    "parse_rat",
    "pmd_a0",
    "pmd_aminus",
    "pmd_aplus",
    "pmd_number",
    "pmd_u",
    "pmd_v",
    "pmd_x",
    "position_op",
    "quantum_ops",
    "rational_sqrt",
    "semi_ops",
    "series_decomposition",
    "shift_moments",
    "szego_jacobi",
    "to_monomial_basis",
    "translation_form",
    "validate_combo",
    "verify_universal",
    "zero_op",
]
