import json
import logging
from typing import TYPE_CHECKING

from .base import BaseReporter, jsonable

if TYPE_CHECKING:
    from ..engine.runner import RunResult


def dumps(payload) -> str:
    """Canonical JSON text: sorted keys and fixed indentation, so equal runs give equal bytes."""
    return json.dumps(jsonable(payload), sort_keys=True, indent=2, allow_nan=False) + "\n"


class JsonReporter(BaseReporter):
    """
    Writes the per-trial records and the aggregate of a run as JSON.
    Timing fields are only present when timing is enabled.
    """

    def __init__(self, output_file: str = "sfmaslov-report.json", timing: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        self.output_file = output_file
        self.timing = timing

    def generate(self, result: "RunResult") -> None:
        self.logger.info(f"Generating JSON report to {self.output_file}...")
        with open(self.output_file, 'w', encoding='utf-8') as f:
            f.write(dumps(result.as_dict(self.timing)))
