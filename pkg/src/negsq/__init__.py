"""Exact obstructions to embedded surfaces of negative self-intersection.

For a simply-connected closed oriented 4-manifold, given either its
intersection form or its numeric invariants (b2, sigma, spin), this package
decides which negative self-intersection numbers are admissible for embedded
surfaces of a given genus whose homology class is divisible by a prime power
or characteristic.  All arithmetic is exact (arbitrary-precision integers and
rationals); every closed-form bound is cross-validated against a brute-force
branched-cover inequality pipeline.
"""

from .admissible import (
    AdmissibleReport,
    CharacteristicClass,
    DivisibleClass,
    Scenario,
    divisible_bound_outcomes,
    enumerate_admissible,
    oracle_max_char,
    pipeline_check_char,
    pipeline_check_div,
)
from .bounds import (
    BoundOutcome,
    ConjectureParams,
    Theorem,
    char_bound,
    conjectural_bound,
    conjecture_kappa_limit,
    furuta_conjecture_params,
    furuta_div_bound,
    furuta_div_uniform,
    gsig_bound,
    gsig_uniform_odd_bound,
    km_congruence,
    multiple_genus,
    rohlin_genus_lb,
    sphere_char_lower_bound,
)
from .cover import (
    CoverInvariants,
    PrimePower,
    betti_signature_check,
    branched_cover,
    cover_b2,
    cover_sigma,
    cover_spin,
    furuta_check,
)
from .errors import (
    DimensionMismatch,
    DivisibilityViolation,
    InvariantViolation,
    KappaOutOfRange,
    MathematicalInconsistency,
    NegsqError,
    NonIntegerSignature,
    UnsupportedEvenPower,
    ValidationError,
)
from .lattice import (
    GramForm,
    HomClass,
    ManifoldModel,
    catalog,
    catalog_entries,
    diagonal_form,
    direct_sum,
    divisibility,
    e8_form,
    gram_from_json,
    hyperbolic_plane,
    manifold_from_json,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleReport",
    "BoundOutcome",
    "CharacteristicClass",
    "ConjectureParams",
    "CoverInvariants",
    "DimensionMismatch",
    "DivisibilityViolation",
    "DivisibleClass",
    "GramForm",
    "HomClass",
    "InvariantViolation",
    "KappaOutOfRange",
    "ManifoldModel",
    "MathematicalInconsistency",
    "NegsqError",
    "NonIntegerSignature",
    "PrimePower",
    "Scenario",
    "Theorem",
    "UnsupportedEvenPower",
    "ValidationError",
    "betti_signature_check",
    "branched_cover",
    "catalog",
    "catalog_entries",
    "char_bound",
    "conjectural_bound",
    "conjecture_kappa_limit",
    "cover_b2",
    "cover_sigma",
    "cover_spin",
    "diagonal_form",
    "direct_sum",
    "divisibility",
    "divisible_bound_outcomes",
    "e8_form",
    "enumerate_admissible",
    "furuta_check",
    "furuta_conjecture_params",
    "furuta_div_bound",
    "furuta_div_uniform",
    "gram_from_json",
    "gsig_bound",
    "gsig_uniform_odd_bound",
    "hyperbolic_plane",
    "km_congruence",
    "manifold_from_json",
    "multiple_genus",
    "oracle_max_char",
    "pipeline_check_char",
    "pipeline_check_div",
    "rohlin_genus_lb",
    "sphere_char_lower_bound",
]
