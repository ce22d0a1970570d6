import logging
from typing import List, Optional

from ..reporters.base import BaseReporter
from ..reporters.console import ConsoleReporter
from ..reporters.json import JsonReporter
from .config import RunConfig
from .runner import RunResult


class ReportManager:
    def __init__(self, config: RunConfig, report_file: Optional[str] = None) -> None:
        self.logger = logging.getLogger(__name__)
        self.reporters: List[BaseReporter] = []
        for r in config.reporters:
            if r == 'console':
                self.reporters.append(ConsoleReporter())
            elif r == 'json':
                self.reporters.append(JsonReporter(output_file=report_file or config.report_file,
                                                   timing=config.timing))
            else:
                self.logger.warning(f"Unknown reporter '{r}' ignored")

    def generate(self, result: RunResult) -> None:
        for reporter in self.reporters:
            reporter.generate(result)
