from .seeds import Seed, RandomSource, as_generator
from .generators import (
    LagrangianScenario,
    random_orthogonal,
    well_conditioned,
    random_pattern,
    engineered_pattern,
    gen_symmetric,
    gen_test_subspace,
    gen_mesh,
    gen_gl_path,
    gen_form_path,
    gen_symplectic_matrix,
    random_lagrangian,
    gen_lagrangian_path,
    gen_lagrangian_scenario,
    worked_reduction_instance,
)
from .search import find_nondegenerate_subspace, DEFAULT_BUDGET
from .instances import (
    MaslovInstance,
    ReductionInstance,
    INSTANCE_FIELDS,
    INSTANCE_PARSERS,
    check_fields,
    instance_kind,
    integer_from,
    form_instance,
    maslov_instance,
    reduction_instance,
)

__all__ = [
    "Seed",
    "RandomSource",
    "as_generator",
    "LagrangianScenario",
    "random_orthogonal",
    "well_conditioned",
    "random_pattern",
    "engineered_pattern",
    "gen_symmetric",
    "gen_test_subspace",
    "gen_mesh",
    "gen_gl_path",
    "gen_form_path",
    "gen_symplectic_matrix",
    "random_lagrangian",
    "gen_lagrangian_path",
    "gen_lagrangian_scenario",
    "worked_reduction_instance",
    "find_nondegenerate_subspace",
    "DEFAULT_BUDGET",
    "MaslovInstance",
    "ReductionInstance",
    "INSTANCE_FIELDS",
    "INSTANCE_PARSERS",
    "check_fields",
    "instance_kind",
    "integer_from",
    "form_instance",
    "maslov_instance",
    "reduction_instance",
]
