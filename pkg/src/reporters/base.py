from abc import ABC
from typing import TYPE_CHECKING, Any

import numpy as np

if TYPE_CHECKING:
    from ..engine.runner import RunResult


def jsonable(value: Any) -> Any:
    """Plain JSON types for report payloads (numpy scalars and arrays, tuples, sets)."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


class BaseReporter(ABC):
    """
    Abstract base class for all run reporters.
    Enforces a consistent interface for the strategy pattern.
    """
    def generate(self, result: "RunResult") -> None:
        """
        Generate the report for a finished run.

        Args:
            result (RunResult): Per-trial records and the aggregate of the run.
        """
        raise NotImplementedError
