from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..errors import DomainError
from ..numkern import DEFAULT_POLICY, Subspace, TolerancePolicy, as_finite_array, spectral_norm
from ..quadform import BilinForm, Symmetry


@dataclass(frozen=True, eq=False)
class SymplecticSpace:
    """R^{2n} with an invertible skew form omega(x, y) = x^T J y."""
    omega: BilinForm

    def __post_init__(self) -> None:
        if self.omega.symmetry is not Symmetry.SKEW:
            raise DomainError("A symplectic form must be skew")
        if self.omega.dim != self.omega.ambient_dim:
            raise DomainError("A symplectic form must live on the whole space")
        if self.omega.dim == 0 or self.omega.dim % 2:
            raise DomainError(f"A symplectic space needs positive even dimension, got {self.omega.dim}")

    @classmethod
    def from_matrix(cls, matrix, policy: TolerancePolicy = DEFAULT_POLICY) -> "SymplecticSpace":
        """Validate a skew matrix and wrap it; the form must be strongly nondegenerate."""
        j = as_finite_array(matrix)
        if j.shape[0] != j.shape[1]:
            raise DomainError(f"Symplectic matrix must be square, got shape {j.shape}")
        if np.max(np.abs(j + j.T), initial=0.0) > policy.threshold(spectral_norm(j)):
            raise DomainError("Symplectic matrix is not skew")
        space = cls(BilinForm.skew(j))
        sv = scipy.linalg.svdvals(space.matrix)
        if sv[-1] <= policy.threshold(sv[0]):
            raise DomainError(f"Symplectic form is degenerate (smallest singular value {sv[-1]:.3e})")
        return space

    @property
    def dim(self) -> int:
        return self.omega.dim

    @property
    def n(self) -> int:
        return self.omega.dim // 2

    @property
    def matrix(self) -> np.ndarray:
        return self.omega.matrix

    def pairing(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """omega(x_i, y_j) for frames (or vectors) x and y."""
        return np.asarray(x).T @ self.matrix @ np.asarray(y)

    def is_symplectic_matrix(self, phi: np.ndarray, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
        residual = phi.T @ self.matrix @ phi - self.matrix
        return float(np.linalg.norm(residual, 2)) <= policy.angle_tol * max(1.0, spectral_norm(phi)) ** 2

    def __repr__(self) -> str:
        return f"SymplecticSpace(dim={self.dim})"


def standard_space(n: int) -> SymplecticSpace:
    """R^{2n} with omega(e_i, e_{n+i}) = 1 and all other basis pairings zero."""
    if n < 1:
        raise DomainError(f"standard_space needs n >= 1, got {n}")
    j = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])
    return SymplecticSpace(BilinForm.skew(j))


def isotropy_residual(space: SymplecticSpace, s: Subspace) -> float:
    """||omega restricted to s||, relative to ||omega||."""
    if s.dim == 0:
        return 0.0
    return spectral_norm(space.pairing(s.frame, s.frame)) / space.omega.reference_norm


def is_isotropic(space: SymplecticSpace, s: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    if s.ambient_dim != space.dim:
        raise DomainError(f"Subspace lives in R^{s.ambient_dim}, space is R^{space.dim}")
    return isotropy_residual(space, s) <= policy.rank_tol


def is_lagrangian(space: SymplecticSpace, s: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """dim s = n and omega vanishes on s, hence s equals its omega-orthogonal."""
    return s.dim == space.n and is_isotropic(space, s, policy)


@dataclass(frozen=True, eq=False)
class Lagrangian:
    space: SymplecticSpace
    sub: Subspace

    def __post_init__(self) -> None:
        if self.sub.ambient_dim != self.space.dim or self.sub.dim != self.space.n:
            raise DomainError(
                f"A Lagrangian of R^{self.space.dim} has dimension {self.space.n}, got {self.sub!r}")

    @classmethod
    def checked(cls, space: SymplecticSpace, sub: Subspace,
                policy: TolerancePolicy = DEFAULT_POLICY) -> "Lagrangian":
        if not is_lagrangian(space, sub, policy):
            raise DomainError(
                f"Subspace is not Lagrangian (dim {sub.dim}, isotropy residual "
                f"{isotropy_residual(space, sub) if sub.ambient_dim == space.dim else float('nan'):.3e})")
        return cls(space, sub)

    @property
    def frame(self) -> np.ndarray:
        return self.sub.frame

    def __repr__(self) -> str:
        return f"Lagrangian(ambient_dim={self.space.dim})"


def symplectic_image(l: Lagrangian, phi: np.ndarray, policy: TolerancePolicy = DEFAULT_POLICY) -> Lagrangian:
    """phi(l) for a symplectic matrix phi."""
    phi = as_finite_array(phi)
    if not l.space.is_symplectic_matrix(phi, policy):
        raise DomainError("Matrix does not preserve the symplectic form")
    return Lagrangian.checked(l.space, l.sub.image(phi, policy), policy)


def horizontal(space: SymplecticSpace) -> Lagrangian:
    """span(e_1, ..., e_n); Lagrangian for the standard form."""
    return Lagrangian.checked(space, Subspace.coordinate(space.dim, range(space.n)))


def vertical(space: SymplecticSpace) -> Lagrangian:
    """span(e_{n+1}, ..., e_{2n})."""
    return Lagrangian.checked(space, Subspace.coordinate(space.dim, range(space.n, space.dim)))
