import logging

import numpy as np

from ..errors import DomainError, SearchError
from ..numkern import DEFAULT_POLICY, Subspace, TolerancePolicy
from ..quadform import BilinForm, index_nullity, restrict
from .generators import random_orthogonal
from .seeds import RandomSource, as_generator

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 1000


def find_nondegenerate_subspace(q1: BilinForm, q2: BilinForm, inside: Subspace, codim: int, seed: RandomSource,
                                policy: TolerancePolicy = DEFAULT_POLICY, budget: int = DEFAULT_BUDGET) -> Subspace:
    """
    A random subspace of `inside` of codimension `codim` on which both forms
    are nondegenerate. Such subspaces are open and dense, so a handful of
    draws normally suffices.
    """
    if not 0 <= codim <= inside.dim:
        raise DomainError(f"Codimension {codim} is infeasible inside a subspace of dimension {inside.dim}")
    if q1.ambient_dim != inside.ambient_dim or q2.ambient_dim != inside.ambient_dim:
        raise DomainError("Forms and the enclosing subspace live in different ambient spaces")
    rng = as_generator(seed)
    target = inside.dim - codim
    smallest = [target, target]

    for attempt in range(1, budget + 1):
        coeffs = random_orthogonal(rng, inside.dim)[:, :target] if inside.dim else np.zeros((0, 0))
        candidate = Subspace(inside.frame @ coeffs)
        nullities = [index_nullity(restrict(q, candidate, policy), policy).nullity for q in (q1, q2)]
        smallest = [min(s, v) for s, v in zip(smallest, nullities)]
        if not any(nullities):
            logger.debug(f"nondegenerate subspace of dimension {target} found after {attempt} draw(s)")
            return candidate

    raise SearchError(
        f"No subspace of codimension {codim} nondegenerate for both forms in {budget} draws "
        f"(smallest nullities {smallest[0]} and {smallest[1]})",
        details={'attempts': budget, 'smallest_nullities': smallest},
    )
