"""Certify Koszul, normal, Cohen-Macaulay Rees algebras of leveled
monomial families through an explicit marked quadratic basis."""

from .errors import (
    FamilyError,
    InternalInvariantError,
    MonomialParseError,
    NotClosedError,
    ReescertError,
    ResourceCapError,
)
from .monomials import (
    Monomial,
    borel_closure,
    borel_member,
    ord_pair,
    parse_monomial,
    revlex_cmp,
    revlex_key,
    sort_pair,
)
from .family import (
    GenRef,
    LeveledFamily,
    build_family,
    characterize,
    comparable,
    family_from_file,
    is_closed_under_comparability,
    rewrite_images,
)
from .presentation import (
    MarkedBinomial,
    PsiImage,
    TMonomial,
    TPolynomial,
    basis_from_json,
    basis_to_json,
    build_basis,
    confluence_check,
    is_completely_reduced,
    kernel_membership,
    normal_form,
    parse_tpolynomial,
    psi_eval,
    reduce_step,
    s_polynomial,
)
from .measure import (
    LevelMatrix,
    ReductionMeasure,
    comparability_number,
    inversion_count,
    inversion_minimal,
    level_matrix,
    polynomial_reduction_level,
    reduction_level,
    traced_normal_form,
)
from .oracle import (
    enumerate_fibers,
    normal_form_randomized,
    verify_kernel_generation,
    verify_measure_decrease,
    verify_unique_normal_forms,
)
from .certify import build_certificate, certificate_text

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
