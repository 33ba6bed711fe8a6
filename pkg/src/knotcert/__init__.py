"""Exact Alexander polynomials from Seifert matrices, with primeness certificates."""

from .certify import (
    AdmissibilityVerdict,
    FactorizationCertificate,
    IrreducibilityWitness,
    PrimenessCertificate,
    a_irreducible,
    eisenstein_check,
    factor_trinomial,
    irreducibility_witness,
    is_admissible_alexander,
    primeness_certificate,
)
from .laurent import LaurentPoly, Unit, doteq_equal, parse, render
from .polymatrix import (
    PolyMatrix,
    alexander_matrix,
    block_compose,
    det_bareiss,
    det_cofactor,
)
from .seifert import (
    AlexanderResult,
    FamilySpec,
    SeifertMatrix,
    alexander,
    alpha_closed,
    alpha_recursive,
    beta,
    build_family,
    linking_value,
    load_matrix,
    reciprocal_factor,
)

__all__ = [
    "AdmissibilityVerdict",
    "AlexanderResult",
    "FactorizationCertificate",
    "FamilySpec",
    "IrreducibilityWitness",
    "LaurentPoly",
    "PolyMatrix",
    "PrimenessCertificate",
    "SeifertMatrix",
    "Unit",
    "a_irreducible",
    "alexander",
    "alexander_matrix",
    "alpha_closed",
    "alpha_recursive",
    "beta",
    "block_compose",
    "build_family",
    "det_bareiss",
    "det_cofactor",
    "doteq_equal",
    "eisenstein_check",
    "factor_trinomial",
    "irreducibility_witness",
    "is_admissible_alexander",
    "linking_value",
    "load_matrix",
    "parse",
    "primeness_certificate",
    "reciprocal_factor",
    "render",
]

__version__ = "0.1.0"
