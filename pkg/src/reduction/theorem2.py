import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ..numkern import DEFAULT_POLICY, TolerancePolicy
from ..symplectic import Lagrangian, LagrangianPath, maslov_index
from .coisotropic import ReductionSetup, reduce_lagrangian, reduce_path
from .terms import CorrectionTerms, correction_terms

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Theorem2Report:
    mu: int
    mu_reduced: int
    terms_a: CorrectionTerms
    terms_b: CorrectionTerms

    @property
    def lhs(self) -> int:
        return self.mu - self.mu_reduced

    @property
    def rhs(self) -> int:
        return self.terms_a.value - self.terms_b.value

    def as_dict(self) -> Dict[str, Any]:
        return {
            'mu': self.mu,
            'mu_reduced': self.mu_reduced,
            'terms_a': self.terms_a.as_dict(),
            'terms_b': self.terms_b.as_dict(),
        }


def theorem2_report(setup: ReductionSetup, path: LagrangianPath, l0: Lagrangian,
                    policy: TolerancePolicy = DEFAULT_POLICY) -> Theorem2Report:
    mu = maslov_index(path, l0, policy)
    mu_reduced = maslov_index(reduce_path(setup, path, policy), reduce_lagrangian(setup, l0, policy), policy)
    report = Theorem2Report(
        mu, mu_reduced,
        correction_terms(setup, path, l0, 'a', policy),
        correction_terms(setup, path, l0, 'b', policy),
    )
    logger.debug(f"thm2: k={setup.k}, mu={mu}, mu_bar={mu_reduced}, lhs={report.lhs}, rhs={report.rhs}")
    return report


def theorem2_sides(setup: ReductionSetup, path: LagrangianPath, l0: Lagrangian,
                   policy: TolerancePolicy = DEFAULT_POLICY) -> Tuple[int, int]:
    """
    lhs = mu_{L0}(l) - mu_{L0bar}(lbar); rhs = the correction terms at a minus those at b,
    each being ind q_t + dim pi(l(t) ∩ (V + W^omega)) - dim(l(t) ∩ V).
    """
    report = theorem2_report(setup, path, l0, policy)
    return report.lhs, report.rhs
