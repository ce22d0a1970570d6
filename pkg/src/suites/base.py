import hashlib
import logging
from abc import ABC
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from ..errors import ScenarioError
from ..numkern import DEFAULT_POLICY, Subspace, SymMatrix, TolerancePolicy
from ..scenarios import Seed


class Check(NamedTuple):
    """One integer identity evaluated in a trial."""
    name: str
    lhs: int
    rhs: int

    @property
    def defect(self) -> int:
        return int(self.lhs) - int(self.rhs)


@dataclass
class TrialOutcome:
    checks: List[Check] = field(default_factory=list)
    digest: str = ''
    summary: Dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, lhs: int, rhs: int) -> None:
        self.checks.append(Check(name, int(lhs), int(rhs)))

    def holds(self, name: str, condition: bool) -> None:
        """Record a yes/no property as the identity int(condition) = 1."""
        self.add(name, int(bool(condition)), 1)


@dataclass(frozen=True)
class SuiteParameters:
    dims: Tuple[int, int]
    options: Dict[str, Any] = field(default_factory=dict)
    oracle_samples: int = 100
    search_budget: int = 1000
    max_step_angle: float = 0.2

    def option(self, key: str, default: Any) -> Any:
        return self.options.get(key, default)


def digest(*items: Any) -> str:
    """Short content hash of the numeric inputs of a trial."""
    h = hashlib.sha256()
    for item in items:
        if isinstance(item, SymMatrix):
            item = item.entries
        elif isinstance(item, Subspace):
            item = item.frame
        arr = np.ascontiguousarray(np.asarray(item, dtype=float))
        h.update(repr(arr.shape).encode())
        h.update(arr.tobytes())
    return h.hexdigest()[:16]


class VerificationSuite(ABC):
    """
    Abstract base class for randomized verification suites.

    A suite turns a per-trial seed into an instance, evaluates the identities it
    is responsible for and reports them as integer (lhs, rhs) checks.
    """
    default_dims: Tuple[int, int] = (2, 8)

    def __init__(self, policy: TolerancePolicy = DEFAULT_POLICY) -> None:
        self.policy = policy
        self.logger = logging.getLogger(__name__)

    def get_name(self) -> str:
        """
        Return the scenario kind handled by the suite.
        """
        raise NotImplementedError

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        """
        Generate and check one instance.

        Args:
            seed (Seed): The per-trial seed; all randomness must come from it.
            params (SuiteParameters): Dimensions and suite options.

        Returns:
            TrialOutcome: Integer checks, an input digest and a short summary.
        """
        raise NotImplementedError

    def run_instance(self, data: Dict[str, Any], params: SuiteParameters) -> TrialOutcome:
        """
        Check one explicit instance from a scenario file. Suites without an
        instance schema reject them.
        """
        raise ScenarioError(f"Scenario kind '{self.get_name()}' does not accept explicit instances")

    @staticmethod
    def draw_dim(rng: np.random.Generator, dims: Tuple[int, int], floor: int = 1,
                 ceiling: Optional[int] = None) -> int:
        lo = max(dims[0], floor)
        hi = max(dims[1], lo)
        if ceiling is not None:
            hi = min(hi, ceiling)
            lo = min(lo, hi)
        return int(rng.integers(lo, hi + 1))

    @staticmethod
    def engineered(seed: Seed, every: int = 10, share: int = 4) -> bool:
        """True for `share` trials out of every `every`, by trial index."""
        return seed.trial_index % every < share
