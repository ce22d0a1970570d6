from dataclasses import dataclass, field, fields
from typing import Any, Dict, List

from ..numkern import TolerancePolicy


@dataclass
class RunConfig:
    rank_tol: float = 1e-9
    angle_tol: float = 1e-8
    refine_limit: int = 40
    max_step_angle: float = 0.2
    jobs: int = 1
    report_file: str = 'sfmaslov-report.json'
    reporters: List[str] = field(default_factory=lambda: ['console', 'json'])
    oracle_samples: int = 100
    search_budget: int = 1000
    timing: bool = False

    POLICY_KEYS = ('rank_tol', 'angle_tol', 'refine_limit')

    @property
    def policy(self) -> TolerancePolicy:
        return TolerancePolicy(self.rank_tol, self.angle_tol, self.refine_limit)

    def override_policy(self, values: Dict[str, Any]) -> None:
        """Apply policy overrides; unknown or invalid fields raise PolicyError."""
        policy = self.policy.with_overrides(values)
        for key, value in policy.as_dict().items():
            setattr(self, key, value)

    def field_names(self) -> List[str]:
        return [f.name for f in fields(self)]

    def environment(self) -> Dict[str, Any]:
        """The values a report records so that a run can be reproduced."""
        return {
            'policy': self.policy.as_dict(),
            'max_step_angle': self.max_step_angle,
            'oracle_samples': self.oracle_samples,
            'search_budget': self.search_budget,
        }
