from .tolerance import TolerancePolicy, DEFAULT_POLICY
from .matrices import SymMatrix, Eigensystem, as_finite_array, spectral_norm, eigh, eigvalsh, eigenpairs
from .subspace import (
    Subspace,
    column_space,
    kernel,
    intersect,
    subspace_sum,
    principal_angles,
    subspaces_equal,
    max_angle,
    min_angle,
)

__all__ = [
    "TolerancePolicy",
    "DEFAULT_POLICY",
    "SymMatrix",
    "Eigensystem",
    "as_finite_array",
    "spectral_norm",
    "eigh",
    "eigvalsh",
    "eigenpairs",
    "Subspace",
    "column_space",
    "kernel",
    "intersect",
    "subspace_sum",
    "principal_angles",
    "subspaces_equal",
    "max_angle",
    "min_angle",
]
