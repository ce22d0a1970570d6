import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from ..errors import DomainError
from ..numkern import DEFAULT_POLICY, Subspace, TolerancePolicy, intersect
from ..quadform import index_nullity, is_nondegenerate_on, perp, radical, restrict
from .flow import spectral_flow
from .paths import FormPath, restrict_path

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EndpointTerms:
    """The endpoint quantities of the restriction formula at one end of a path."""
    ind_perp: int
    dim_v_cap_perp: int
    dim_v_cap_ker: int

    @property
    def value(self) -> int:
        return self.ind_perp + self.dim_v_cap_perp - self.dim_v_cap_ker

    def as_dict(self) -> Dict[str, int]:
        return {'ind_perp': self.ind_perp, 'dim_v_cap_perp': self.dim_v_cap_perp,
                'dim_v_cap_ker': self.dim_v_cap_ker}


def endpoint_terms(p: FormPath, v: Subspace, which: str,
                   policy: TolerancePolicy = DEFAULT_POLICY) -> EndpointTerms:
    """ind Q_s|_{V^Q_s}, dim(V ∩ V^Q_s) and dim(V ∩ ker Q_s) for s = a or b."""
    q = p.endpoint_form(which)
    v_perp = perp(q, v, policy)
    return EndpointTerms(
        ind_perp=index_nullity(restrict(q, v_perp, policy), policy).index,
        dim_v_cap_perp=intersect(v, v_perp, policy).dim,
        dim_v_cap_ker=intersect(v, radical(q, policy), policy).dim,
    )


def theorem1_sides(p: FormPath, v: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Tuple[int, int]:
    """
    lhs = sf(Q) - sf(Q|_V); rhs = the endpoint terms at a minus those at b.
    Only the two endpoint forms enter the right-hand side.
    """
    if v.ambient_dim != p.dim:
        raise DomainError(f"Subspace lives in R^{v.ambient_dim}, path in R^{p.dim}")
    lhs = spectral_flow(p, policy).flow - spectral_flow(restrict_path(p, v, policy), policy).flow
    rhs = endpoint_terms(p, v, 'a', policy).value - endpoint_terms(p, v, 'b', policy).value
    logger.debug(f"thm1: dim={p.dim}, dim V={v.dim}, lhs={lhs}, rhs={rhs}")
    return lhs, rhs


def theorem1_nondegenerate_sides(p: FormPath, v: Subspace,
                                 policy: TolerancePolicy = DEFAULT_POLICY) -> Tuple[int, int]:
    """
    The shorter identity when Q_a|_V and Q_b|_V are nondegenerate:
    sf(Q) - sf(Q|_V) = ind Q_a|_{V^Q_a} - ind Q_b|_{V^Q_b}.
    """
    for which in ('a', 'b'):
        if not is_nondegenerate_on(p.endpoint_form(which), v, policy):
            raise DomainError(f"The restricted form is degenerate at endpoint {which}")
    lhs = spectral_flow(p, policy).flow - spectral_flow(restrict_path(p, v, policy), policy).flow
    rhs = endpoint_terms(p, v, 'a', policy).ind_perp - endpoint_terms(p, v, 'b', policy).ind_perp
    return lhs, rhs
