import logging
from typing import Optional

import numpy as np
import scipy.linalg

from ..errors import DomainError, InternalError
from ..numkern import DEFAULT_POLICY, Subspace, TolerancePolicy, column_space, intersect
from ..quadform import perp
from .space import Lagrangian, is_isotropic, is_lagrangian

logger = logging.getLogger(__name__)

MAX_RANDOM_DRAWS = 20


def _transverse_isotropic(b: np.ndarray, j: np.ndarray, c0: np.ndarray,
                          policy: TolerancePolicy) -> Optional[np.ndarray]:
    """
    Turn a complement c0 of the Lagrangian frame b (reduced coordinates, form j)
    into a Lagrangian frame paired with b by b^T j c = I. None when c0 is
    too close to b for the pairing to be inverted.
    """
    g = b.T @ j @ c0
    if g.size == 0:
        return c0
    sv = scipy.linalg.svdvals(g)
    if sv[-1] <= policy.threshold(sv[0]):
        return None
    c = c0 @ np.linalg.inv(g)
    s = c.T @ j @ c
    return c + 0.5 * b @ s


def lagrangian_complement(l: Lagrangian, must_contain: Optional[Subspace] = None,
                          policy: TolerancePolicy = DEFAULT_POLICY,
                          rng: Optional[np.random.Generator] = None,
                          spread: float = 1.0) -> Lagrangian:
    """
    A Lagrangian L1 with L1 ∩ l = {0}, containing the isotropic subspace
    `must_contain` when given.

    With I = must_contain, the reduced space I^omega / I (coordinates R) holds
    l ∩ I^omega as a Lagrangian B. A complement of B is made Lagrangian by
    symplectic Gram-Schmidt and then L1 = I + R C. Without `rng` the complement
    starts from the Euclidean orthogonal of B; with `rng` it is perturbed at
    random by `spread`.
    """
    space = l.space
    big_n = space.dim
    iso = must_contain if must_contain is not None else Subspace.zero(big_n)
    if iso.ambient_dim != big_n:
        raise DomainError(f"Constraint lives in R^{iso.ambient_dim}, space is R^{big_n}")
    if not is_isotropic(space, iso, policy):
        raise DomainError("The subspace a complement must contain is not isotropic")
    if intersect(iso, l.sub, policy).dim:
        raise DomainError("The subspace a complement must contain meets the Lagrangian")

    w = perp(space.omega, iso, policy)
    r = intersect(w, iso.orthogonal_complement(policy), policy)
    j_red = r.frame.T @ space.matrix @ r.frame
    b = column_space(r.frame.T @ intersect(l.sub, w, policy).frame, policy)
    if b.dim != space.n - iso.dim or r.dim != 2 * b.dim:
        raise InternalError(
            "Reduced data has unexpected dimensions",
            details={'dim_r': r.dim, 'dim_b': b.dim, 'dim_i': iso.dim, 'n': space.n},
        )

    base = b.orthogonal_complement(policy).frame
    c = None
    for attempt in range(MAX_RANDOM_DRAWS if rng is not None else 1):
        c0 = base
        if rng is not None:
            c0 = base + spread * rng.standard_normal(base.shape)
        c = _transverse_isotropic(b.frame, j_red, c0, policy)
        if c is not None:
            break
        logger.debug(f"complement: candidate {attempt} nearly meets the Lagrangian, redrawing")
    if c is None:
        raise InternalError("Could not pair a complement with the Lagrangian")

    frame = np.hstack([iso.frame, r.frame @ c]) if c.size else iso.frame
    l1 = column_space(frame, policy)
    if not (is_lagrangian(space, l1, policy) and intersect(l1, l.sub, policy).dim == 0
            and l1.contains(iso, policy)):
        raise InternalError(
            "Constructed complement violates its postconditions",
            details={'dim': l1.dim, 'meets_l': intersect(l1, l.sub, policy).dim,
                     'contains_constraint': l1.contains(iso, policy)},
        )
    return Lagrangian(space, l1)
