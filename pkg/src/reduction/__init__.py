from .coisotropic import (
    ReductionSetup,
    make_reduction,
    identity_reduction,
    in_admissible_set,
    reduce_subspace,
    reduce_lagrangian,
    reduce_path,
    reduce_chart_form,
    q_map_kernel_matches,
)
from .terms import CorrectionTerms, Projection, ReducedForm, reduced_form, correction_terms, terms_at
from .theorem2 import Theorem2Report, theorem2_report, theorem2_sides
from .identities import IdentityReport, chart_identities

__all__ = [
    "ReductionSetup",
    "make_reduction",
    "identity_reduction",
    "in_admissible_set",
    "reduce_subspace",
    "reduce_lagrangian",
    "reduce_path",
    "reduce_chart_form",
    "q_map_kernel_matches",
    "CorrectionTerms",
    "Projection",
    "ReducedForm",
    "reduced_form",
    "correction_terms",
    "terms_at",
    "Theorem2Report",
    "theorem2_report",
    "theorem2_sides",
    "IdentityReport",
    "chart_identities",
]
