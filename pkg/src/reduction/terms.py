import logging
from dataclasses import dataclass
from typing import Dict

import numpy as np
import scipy.linalg

from ..errors import DomainError, NumericError
from ..numkern import (
    DEFAULT_POLICY,
    Subspace,
    TolerancePolicy,
    column_space,
    intersect,
    spectral_norm,
    subspace_sum,
)
from ..quadform import BilinForm, Symmetry, index_nullity
from ..symplectic import Lagrangian, LagrangianPath
from .coisotropic import ReductionSetup, in_admissible_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrectionTerms:
    ind_q: int
    dim_pi_V: int
    dim_lV: int
    e_dim: int

    def __post_init__(self) -> None:
        if not (0 <= self.ind_q <= self.e_dim and 0 <= self.dim_pi_V <= self.e_dim):
            raise NumericError(f"Inconsistent correction terms {self}")

    @property
    def value(self) -> int:
        return self.ind_q + self.dim_pi_V - self.dim_lV

    def as_dict(self) -> Dict[str, int]:
        return {'ind_q': self.ind_q, 'dim_pi_V': self.dim_pi_V, 'dim_lV': self.dim_lV, 'e_dim': self.e_dim}


class Projection:
    """
    The projection pi of L0 ⊕ W^omega onto L0 along W^omega.
    """

    def __init__(self, setup: ReductionSetup, l0: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY) -> None:
        if not in_admissible_set(setup, l0, policy):
            raise DomainError("L0 meets W^omega, so L0 + W^omega is not direct")
        self.setup = setup
        self.l0 = l0
        self.policy = policy
        self.basis = np.hstack([l0.frame, setup.w_perp.frame])
        sv = scipy.linalg.svdvals(self.basis)
        if sv[-1] <= policy.threshold(sv[0]):
            raise NumericError(f"L0 + W^omega is numerically not direct (condition {sv[0] / sv[-1]:.3e})",
                               details={'condition': float(sv[0] / sv[-1])})
        self.domain = subspace_sum(l0.sub, setup.w_perp, policy)

    def apply(self, x: np.ndarray) -> np.ndarray:
        """pi of vectors (columns) lying in L0 + W^omega."""
        if x.shape[1] == 0:
            return np.zeros((x.shape[0], 0))
        coeffs, *_ = np.linalg.lstsq(self.basis, x, rcond=None)
        return self.l0.frame @ coeffs[:self.l0.frame.shape[1]]

    def image(self, s: Subspace) -> Subspace:
        return column_space(self.apply(s.frame), self.policy)


@dataclass(frozen=True, eq=False)
class ReducedForm:
    """The form q on E = pi(l ∩ (L0 + W^omega)), q[u, v] = omega(pi^-1 u, v)."""
    e: Subspace
    form: BilinForm
    preimage: np.ndarray


def reduced_form(setup: ReductionSetup, l: Lagrangian, proj: Projection,
                 policy: TolerancePolicy = DEFAULT_POLICY) -> ReducedForm:
    x = intersect(l.sub, proj.domain, policy)
    u = proj.apply(x.frame)
    e = column_space(u, policy)
    if e.dim != x.dim:
        raise NumericError(f"pi is not injective on l ∩ (L0 + W^omega): {x.dim} -> {e.dim}")
    if e.dim == 0:
        empty = BilinForm(np.zeros((0, 0)), Symmetry.SYMMETRIC, e, 0.0)
        return ReducedForm(e, empty, np.zeros((setup.space.dim, 0)))

    sv = scipy.linalg.svdvals(u)
    if sv[-1] <= policy.threshold(sv[0]):
        raise NumericError(f"Preimage solve is singular (condition {sv[0] / sv[-1]:.3e})",
                           details={'condition': float(sv[0] / sv[-1])})
    g, *_ = np.linalg.lstsq(u, e.frame, rcond=None)
    preimage = x.frame @ g
    matrix = setup.space.pairing(preimage, e.frame)
    scale = setup.space.omega.reference_norm * max(1.0, spectral_norm(g))
    return ReducedForm(e, BilinForm(matrix, Symmetry.SYMMETRIC, e, scale), preimage)


def correction_terms(setup: ReductionSetup, path: LagrangianPath, l0: Lagrangian, t_end: str,
                     policy: TolerancePolicy = DEFAULT_POLICY) -> CorrectionTerms:
    """
    ind q_t, dim pi(l(t) ∩ (V + W^omega)) and dim(l(t) ∩ V) at t = a or b,
    with V = L0 ∩ W and q_t the form on E_t = pi(l(t) ∩ (L0 + W^omega)).
    """
    if t_end not in ('a', 'b'):
        raise DomainError(f"t_end must be 'a' or 'b', got {t_end!r}")
    l = path.samples[0] if t_end == 'a' else path.samples[-1]
    return terms_at(setup, l, l0, policy)


def terms_at(setup: ReductionSetup, l: Lagrangian, l0: Lagrangian,
             policy: TolerancePolicy = DEFAULT_POLICY) -> CorrectionTerms:
    if not in_admissible_set(setup, l, policy):
        raise DomainError("Endpoint Lagrangian meets W^omega")
    proj = Projection(setup, l0, policy)
    v = intersect(l0.sub, setup.w, policy)
    rf = reduced_form(setup, l, proj, policy)
    return CorrectionTerms(
        ind_q=index_nullity(rf.form, policy).index,
        dim_pi_V=proj.image(intersect(l.sub, subspace_sum(v, setup.w_perp, policy), policy)).dim,
        dim_lV=intersect(l.sub, v, policy).dim,
        e_dim=rf.e.dim,
    )

