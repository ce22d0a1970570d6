import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Tuple

import numpy as np

from ..errors import DomainError, InternalError
from ..numkern import (
    DEFAULT_POLICY,
    Subspace,
    SymMatrix,
    TolerancePolicy,
    as_finite_array,
    eigvalsh,
    intersect,
    kernel,
    spectral_norm,
    subspace_sum,
)

logger = logging.getLogger(__name__)


class Symmetry(Enum):
    SYMMETRIC = 'symmetric'
    SKEW = 'skew'


@dataclass(frozen=True, eq=False)
class BilinForm:
    """
    A bilinear form on a subspace of R^n.

    `matrix` is expressed in the coordinates of `ambient.frame`, so for u, v in
    the ambient subspace Q[u, v] = (F^T u)^T M (F^T v). `reference_norm` is the
    scale every rank decision about this form is measured against; restrictions
    inherit it from their parent so that blocks at rounding level read as zero.
    """
    matrix: np.ndarray
    symmetry: Symmetry
    ambient: Subspace
    reference_norm: Optional[float] = None

    def __post_init__(self) -> None:
        arr = as_finite_array(self.matrix)
        d = self.ambient.dim
        if arr.shape != (d, d):
            raise DomainError(f"Form matrix has shape {arr.shape}, ambient subspace has dimension {d}")
        if self.symmetry is Symmetry.SYMMETRIC:
            arr = 0.5 * (arr + arr.T)
        else:
            arr = 0.5 * (arr - arr.T)
        arr.setflags(write=False)
        object.__setattr__(self, 'matrix', arr)
        if self.reference_norm is None:
            object.__setattr__(self, 'reference_norm', spectral_norm(arr))

    @classmethod
    def symmetric(cls, matrix) -> "BilinForm":
        """Symmetric form on the whole of R^n."""
        arr = as_finite_array(matrix)
        return cls(arr, Symmetry.SYMMETRIC, Subspace.full(arr.shape[0]))

    @classmethod
    def skew(cls, matrix) -> "BilinForm":
        arr = as_finite_array(matrix)
        return cls(arr, Symmetry.SKEW, Subspace.full(arr.shape[0]))

    @property
    def dim(self) -> int:
        return self.ambient.dim

    @property
    def ambient_dim(self) -> int:
        return self.ambient.ambient_dim

    @property
    def is_symmetric(self) -> bool:
        return self.symmetry is Symmetry.SYMMETRIC

    def evaluate(self, u: np.ndarray, v: np.ndarray) -> float:
        """Q[u, v] for vectors u, v of R^n lying in the ambient subspace."""
        x = self.ambient.coordinates(np.asarray(u, dtype=float))
        y = self.ambient.coordinates(np.asarray(v, dtype=float))
        return float(x @ self.matrix @ y)

    def as_sym_matrix(self) -> SymMatrix:
        if not self.is_symmetric:
            raise DomainError("A skew form has no symmetric matrix")
        return SymMatrix(self.matrix)

    def __repr__(self) -> str:
        return f"BilinForm({self.symmetry.value}, dim={self.dim}, ambient_dim={self.ambient_dim})"


@dataclass(frozen=True)
class IndexReport:
    index: int
    nullity: int
    coindex: int

    @property
    def dim(self) -> int:
        return self.index + self.nullity + self.coindex


class AlgebraicLemmaSides(NamedTuple):
    lhs: Subspace
    rhs: Subspace
    direct: bool


def _ambient_coeffs(q: BilinForm, s: Subspace, policy: TolerancePolicy) -> np.ndarray:
    """Coordinates of the frame of s in the frame of q's ambient subspace."""
    if s.ambient_dim != q.ambient_dim:
        raise DomainError(f"Subspace lives in R^{s.ambient_dim}, form in R^{q.ambient_dim}")
    if not q.ambient.contains(s, policy):
        raise DomainError("Subspace is not contained in the ambient subspace of the form")
    return q.ambient.frame.T @ s.frame


def restrict(q: BilinForm, s: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> BilinForm:
    """Q|_s with matrix C^T M C, where C expresses the frame of s in q's ambient frame."""
    c = _ambient_coeffs(q, s, policy)
    return BilinForm(c.T @ q.matrix @ c, q.symmetry, s, q.reference_norm)


def index_nullity(q: BilinForm, policy: TolerancePolicy = DEFAULT_POLICY) -> IndexReport:
    """
    Negative, zero and positive eigencounts of a symmetric form.

    Eigenvalues within rank_tol * reference_norm of zero count as null, the
    same cut-off kernel() applies, so nullity always equals dim radical(q).
    """
    if not q.is_symmetric:
        raise DomainError("index_nullity needs a symmetric form")
    d = q.dim
    if d == 0:
        return IndexReport(0, 0, 0)

    thr = policy.threshold(q.reference_norm)
    values = eigvalsh(q.as_sym_matrix())
    index = int(np.sum(values < -thr))
    coindex = int(np.sum(values > thr))
    nullity = kernel(q.matrix, policy, scale=q.reference_norm).dim
    if index + nullity + coindex != d:
        raise InternalError(
            "Eigenvalue counts disagree with the kernel dimension",
            details={'index': index, 'nullity': nullity, 'coindex': coindex, 'dim': d,
                     'eigenvalues': values.tolist(), 'threshold': thr},
        )
    return IndexReport(index, nullity, coindex)


def perp(q: BilinForm, s: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """
    The Q-orthogonal complement {u in ambient : Q[u, w] = 0 for all w in s}.
    Works the same way for symmetric and skew forms.
    """
    c = _ambient_coeffs(q, s, policy)
    coeffs = kernel((q.matrix @ c).T, policy, scale=q.reference_norm)
    return Subspace(q.ambient.frame @ coeffs.frame)


def radical(q: BilinForm, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """ker Q as a subspace of R^n."""
    return perp(q, q.ambient, policy)


def is_nondegenerate_on(q: BilinForm, s: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    sub = restrict(q, s, policy)
    if sub.is_symmetric:
        return index_nullity(sub, policy).nullity == 0
    return radical(sub, policy).dim == 0


def congruent(q: BilinForm, m) -> BilinForm:
    """The form (u, v) -> Q[Mu, Mv], with M given in the coordinates of q's ambient frame."""
    m = as_finite_array(m)
    if m.shape != (q.dim, q.dim):
        raise DomainError(f"Congruence matrix has shape {m.shape}, form has dimension {q.dim}")
    return BilinForm(m.T @ q.matrix @ m, q.symmetry, q.ambient)


def eq1_sides(q: BilinForm, w: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Tuple[int, int]:
    """
    Both sides of the restricted index formula

        ind Q - ind Q|_W = ind Q|_{W^Q} + dim(W ∩ W^Q) - dim(W ∩ ker Q)

    as exact integers; W^Q is the Q-orthogonal complement of W.
    """
    w_perp = perp(q, w, policy)
    lhs = index_nullity(q, policy).index - index_nullity(restrict(q, w, policy), policy).index
    rhs = (index_nullity(restrict(q, w_perp, policy), policy).index
           + intersect(w, w_perp, policy).dim
           - intersect(w, radical(q, policy), policy).dim)
    logger.debug(f"eq1: dim={q.dim}, dim W={w.dim}, lhs={lhs}, rhs={rhs}")
    return lhs, rhs


def algebraic_lemma_sides(q: BilinForm, w: Subspace, v: Subspace,
                          policy: TolerancePolicy = DEFAULT_POLICY) -> AlgebraicLemmaSides:
    """
    For W ⊂ V with W nondegenerate: (W^Q ∩ V)^Q and W + V^Q, plus whether
    that sum is direct.
    """
    if not v.contains(w, policy):
        raise DomainError("The algebraic lemma needs W contained in V")
    if not is_nondegenerate_on(q, w, policy):
        raise DomainError("The algebraic lemma needs W nondegenerate for Q")
    v_perp = perp(q, v, policy)
    lhs = perp(q, intersect(perp(q, w, policy), v, policy), policy)
    rhs = subspace_sum(w, v_perp, policy)
    return AlgebraicLemmaSides(lhs, rhs, intersect(w, v_perp, policy).dim == 0)
