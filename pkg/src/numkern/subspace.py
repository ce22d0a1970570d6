from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.linalg

from ..errors import DomainError, InputError
from .matrices import as_finite_array
from .tolerance import DEFAULT_POLICY, TolerancePolicy

# frames are accepted as orthonormal up to this residual; tighter checks go through a policy
_FRAME_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class Subspace:
    """
    A linear subspace of R^n held as an orthonormal frame (n x d, d may be 0).
    """
    frame: np.ndarray

    def __post_init__(self) -> None:
        arr = as_finite_array(self.frame)
        d = arr.shape[1]
        if d > arr.shape[0]:
            raise InputError(f"Frame has more columns ({d}) than rows ({arr.shape[0]})")
        if d and np.max(np.abs(arr.T @ arr - np.eye(d))) > _FRAME_TOL:
            raise InputError("Subspace frame is not orthonormal")
        arr.setflags(write=False)
        object.__setattr__(self, 'frame', arr)

    @property
    def ambient_dim(self) -> int:
        return self.frame.shape[0]

    @property
    def dim(self) -> int:
        return self.frame.shape[1]

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(np.zeros((n, 0)))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(np.eye(n))

    @classmethod
    def span(cls, vectors, policy: TolerancePolicy = DEFAULT_POLICY) -> "Subspace":
        """Span of the columns of `vectors` (a matrix or a list of column vectors)."""
        if isinstance(vectors, (list, tuple)):
            if not vectors:
                raise InputError("span() of an empty list needs an explicit ambient dimension")
            vectors = np.column_stack([np.asarray(v, dtype=float) for v in vectors])
        return column_space(vectors, policy)

    @classmethod
    def coordinate(cls, n: int, indices: Sequence[int]) -> "Subspace":
        """span(e_i for i in indices), zero-based."""
        return cls(np.eye(n)[:, list(indices)])

    def projector(self) -> np.ndarray:
        return self.frame @ self.frame.T

    def coordinates(self, x: np.ndarray) -> np.ndarray:
        return self.frame.T @ x

    def contains(self, other: "Subspace", policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
        _check_ambient(self, other)
        if other.dim == 0:
            return True
        residual = other.frame - self.frame @ (self.frame.T @ other.frame)
        return float(np.linalg.norm(residual, 2)) <= policy.angle_tol

    def orthogonal_complement(self, policy: TolerancePolicy = DEFAULT_POLICY) -> "Subspace":
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel(self.frame.T, policy)

    def image(self, m: np.ndarray, policy: TolerancePolicy = DEFAULT_POLICY) -> "Subspace":
        """The image of this subspace under the linear map `m`."""
        m = as_finite_array(m)
        if self.dim == 0:
            return Subspace.zero(m.shape[0])
        return column_space(m @ self.frame, policy)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def _check_ambient(s1: Subspace, s2: Subspace) -> None:
    if s1.ambient_dim != s2.ambient_dim:
        raise DomainError(f"Ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}")


def _leading_frame(m: np.ndarray, k: int) -> np.ndarray:
    """Orthonormal frame of the k leading left singular vectors of m."""
    if k == 0:
        return np.zeros((m.shape[0], 0))
    u, _, _ = scipy.linalg.svd(m, full_matrices=False)
    return u[:, :k]


def _rank(s: np.ndarray, policy: TolerancePolicy, scale: Optional[float]) -> int:
    reference = float(s[0]) if scale is None else float(scale)
    if reference == 0.0:
        return 0
    return int(np.sum(s > policy.threshold(reference)))


def column_space(m, policy: TolerancePolicy = DEFAULT_POLICY, scale: Optional[float] = None) -> Subspace:
    """
    Orthonormal frame for the span of the columns of m. Rank is the number of
    singular values above rank_tol * scale, where scale defaults to ||m||.
    """
    m = as_finite_array(m)
    if m.shape[1] == 0 or m.shape[0] == 0:
        return Subspace.zero(m.shape[0])
    u, s, _ = scipy.linalg.svd(m, full_matrices=False)
    return Subspace(u[:, :_rank(s, policy, scale)])


def kernel(m, policy: TolerancePolicy = DEFAULT_POLICY, scale: Optional[float] = None) -> Subspace:
    """
    Orthonormal frame for {x : ||m x|| <= rank_tol * scale * ||x||} via SVD.

    m acts on R^cols and scale defaults to ||m||. Pass the norm of a parent
    matrix as scale when m is a restriction of it, so that noise-level blocks
    count as zero. An empty or zero matrix has the whole space as kernel.
    """
    m = as_finite_array(m)
    cols = m.shape[1]
    if m.shape[0] == 0 or cols == 0:
        return Subspace.full(cols)
    _, s, vt = scipy.linalg.svd(m, full_matrices=True)
    return Subspace(vt[_rank(s, policy, scale):].T.copy())


def intersect(s1: Subspace, s2: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """
    s1 ∩ s2 from the kernel of [F1, -F2]. Uses the same singular values as
    subspace_sum, so dim(intersect) + dim(sum) = dim s1 + dim s2 holds exactly.
    """
    _check_ambient(s1, s2)
    if s1.dim == 0 or s2.dim == 0:
        return Subspace.zero(s1.ambient_dim)
    coeffs = kernel(np.hstack([s1.frame, -s2.frame]), policy)
    if coeffs.dim == 0:
        return Subspace.zero(s1.ambient_dim)
    vectors = s1.frame @ coeffs.frame[:s1.dim]
    return Subspace(_leading_frame(vectors, coeffs.dim))


def subspace_sum(s1: Subspace, s2: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    _check_ambient(s1, s2)
    return column_space(np.hstack([s1.frame, s2.frame]), policy)


def principal_angles(s1: Subspace, s2: Subspace) -> np.ndarray:
    """
    Ascending principal angles in [0, pi/2]. Small angles are resolved from
    sines, so identical subspaces give exact-looking zeros rather than sqrt(eps).
    """
    _check_ambient(s1, s2)
    if s1.dim == 0 or s2.dim == 0:
        return np.zeros(0)
    angles = scipy.linalg.subspace_angles(s1.frame, s2.frame)
    return np.sort(np.clip(angles, 0.0, np.pi / 2))


def subspaces_equal(s1: Subspace, s2: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    _check_ambient(s1, s2)
    if s1.dim != s2.dim:
        return False
    if s1.dim == 0:
        return True
    return float(principal_angles(s1, s2)[-1]) <= policy.angle_tol


def max_angle(s1: Subspace, s2: Subspace) -> float:
    """Largest principal angle between equal-dimensional subspaces (a metric on the Grassmannian)."""
    if s1.dim != s2.dim:
        raise DomainError(f"Subspace dimensions differ: {s1.dim} vs {s2.dim}")
    angles = principal_angles(s1, s2)
    return float(angles[-1]) if angles.size else 0.0


def min_angle(s1: Subspace, s2: Subspace) -> float:
    angles = principal_angles(s1, s2)
    return float(angles[0]) if angles.size else float(np.pi / 2)
