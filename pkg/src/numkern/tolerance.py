from dataclasses import dataclass, fields, replace
from typing import Any, Dict

from ..errors import PolicyError


@dataclass(frozen=True)
class TolerancePolicy:
    """
    The single source of every rank, dimension and refinement decision.

    Results are reproducible given (input, policy): no numeric threshold is
    hard-coded elsewhere in the package.
    """
    rank_tol: float = 1e-9
    angle_tol: float = 1e-8
    refine_limit: int = 40

    def __post_init__(self) -> None:
        if not self.rank_tol > 0:
            raise PolicyError(f"rank_tol must be positive, got {self.rank_tol}")
        if not self.angle_tol > 0:
            raise PolicyError(f"angle_tol must be positive, got {self.angle_tol}")
        if int(self.refine_limit) != self.refine_limit or self.refine_limit < 1:
            raise PolicyError(f"refine_limit must be a positive integer, got {self.refine_limit}")

    def threshold(self, scale: float) -> float:
        """Absolute cut-off for singular values/eigenvalues of a matrix of norm `scale`."""
        return self.rank_tol * scale

    def with_overrides(self, overrides: Dict[str, Any]) -> "TolerancePolicy":
        known = {f.name: f.type for f in fields(self)}
        clean: Dict[str, Any] = {}
        for key, value in overrides.items():
            if key not in known:
                raise PolicyError(f"Unknown policy field '{key}'")
            try:
                clean[key] = int(value) if key == 'refine_limit' else float(value)
            except (TypeError, ValueError):
                raise PolicyError(f"Policy field '{key}' has a non-numeric value {value!r}")
        return replace(self, **clean)

    def as_dict(self) -> Dict[str, Any]:
        return {'rank_tol': self.rank_tol, 'angle_tol': self.angle_tol, 'refine_limit': self.refine_limit}


DEFAULT_POLICY = TolerancePolicy()
