"""
Trial execution: fans trials of one scenario kind out over a process pool
and collects per-trial records in trial order.
"""
import logging
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from .. import __version__
from ..errors import NumericError, SfMaslovError
from ..numkern import TolerancePolicy
from ..scenarios import Seed
from ..suites import SUITES, SuiteParameters, TrialOutcome
from .config import RunConfig
from .scenario_file import Scenario

DEFAULT_TRIALS = 100
DEFAULT_SEED = 0

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunPlan:
    """What to run, after scenario values and command-line overrides are merged."""
    kind: str
    trials: int
    seed: int
    dims: Tuple[int, int]
    options: Dict[str, Any] = field(default_factory=dict)
    instances: Tuple[Dict[str, Any], ...] = ()

    @classmethod
    def from_scenario(cls, scenario: Scenario, trials: Optional[int] = None, seed: Optional[int] = None,
                      dims: Optional[Tuple[int, int]] = None) -> "RunPlan":
        def pick(cli: Any, from_file: Any, default: Any) -> Any:
            if cli is not None:
                return cli
            return from_file if from_file is not None else default

        return cls(
            kind=scenario.kind,
            trials=pick(trials, scenario.trials, DEFAULT_TRIALS),
            seed=pick(seed, scenario.seed, DEFAULT_SEED),
            dims=pick(dims, scenario.dims, SUITES[scenario.kind].default_dims),
            options=dict(scenario.options),
            instances=tuple(scenario.explicit_instances),
        )


class TrialTask(NamedTuple):
    kind: str
    policy: TolerancePolicy
    params: SuiteParameters
    master: int
    index: int
    instance: Optional[Dict[str, Any]]
    timing: bool


@dataclass
class TrialRecord:
    trial: int
    digest: str = ''
    checks: Dict[str, Dict[str, int]] = field(default_factory=dict)
    summary: Dict[str, Any] = field(default_factory=dict)
    error: Optional[Dict[str, Any]] = None
    instance: Optional[str] = None
    elapsed: Optional[float] = None

    @property
    def defect(self) -> int:
        """Largest absolute defect over the checks of the trial."""
        return max((abs(c['defect']) for c in self.checks.values()), default=0)

    @property
    def failed(self) -> bool:
        return self.error is None and self.defect != 0

    @classmethod
    def from_outcome(cls, index: int, outcome: TrialOutcome) -> "TrialRecord":
        checks: Dict[str, Dict[str, int]] = {}
        for check in outcome.checks:
            checks[check.name] = {'lhs': check.lhs, 'rhs': check.rhs, 'defect': check.defect}
        return cls(trial=index, digest=outcome.digest, checks=checks, summary=dict(outcome.summary))

    def as_dict(self, timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'trial': self.trial,
            'digest': self.digest,
            'checks': self.checks,
            'defect': self.defect,
            'summary': self.summary,
            'error': self.error,
        }
        if self.instance is not None:
            data['instance'] = self.instance
        if timing and self.elapsed is not None:
            data['elapsed'] = self.elapsed
        return data


def _error_record(e: SfMaslovError) -> Dict[str, Any]:
    record = {'type': type(e).__name__, 'message': str(e), 'exit_code': e.exit_code}
    if e.details:
        record['details'] = e.details
    return record


def execute_trial(task: TrialTask) -> TrialRecord:
    """
    Run one trial (or one explicit instance) and capture any package error as
    part of the record. Module level so that pool workers can pickle it.
    """
    suite = SUITES[task.kind](task.policy)
    started = time.perf_counter()
    name = None
    if task.instance is not None:
        name = str(task.instance.get('name', f"instance-{task.index}"))
    try:
        try:
            if task.instance is not None:
                outcome = suite.run_instance(task.instance, task.params)
            else:
                outcome = suite.run_trial(Seed(task.master, task.index), task.params)
        except np.linalg.LinAlgError as e:
            raise NumericError(f"Linear algebra failure: {e}")
        record = TrialRecord.from_outcome(task.index, outcome)
        if record.failed:
            failing = ', '.join(n for n, c in record.checks.items() if c['defect'])
            logger.warning(f"Trial {task.index} ({task.kind}): identity defect in {failing} "
                           f"(digest {record.digest})")
    except SfMaslovError as e:
        logger.error(f"Trial {task.index} ({task.kind}) failed with {type(e).__name__}: {e}")
        record = TrialRecord(trial=task.index, error=_error_record(e))
    record.instance = name
    if task.timing:
        record.elapsed = time.perf_counter() - started
    return record


@dataclass
class RunResult:
    kind: str
    seed: int
    dims: Tuple[int, int]
    records: List[TrialRecord]
    environment: Dict[str, Any] = field(default_factory=dict)
    elapsed: Optional[float] = None

    @property
    def failures(self) -> int:
        return sum(1 for r in self.records if r.failed)

    @property
    def errors(self) -> int:
        return sum(1 for r in self.records if r.error is not None)

    @property
    def max_defect(self) -> int:
        return max((r.defect for r in self.records), default=0)

    def check_totals(self) -> Dict[str, Dict[str, int]]:
        """Per check name: how often it was evaluated and how often it had a nonzero defect."""
        totals: Dict[str, Dict[str, int]] = {}
        for record in self.records:
            for name, check in record.checks.items():
                entry = totals.setdefault(name, {'evaluated': 0, 'failures': 0})
                entry['evaluated'] += 1
                entry['failures'] += int(check['defect'] != 0)
        return dict(sorted(totals.items()))

    def aggregate(self) -> Dict[str, Any]:
        return {
            'trials': len(self.records),
            'failures': self.failures,
            'errors': self.errors,
            'max_defect': self.max_defect,
            'checks': self.check_totals(),
        }

    @property
    def exit_code(self) -> int:
        """0 when every identity holds, 1 on a defect, else the largest error exit code."""
        codes = [r.error['exit_code'] for r in self.records if r.error is not None]
        if codes:
            return max(codes)
        return 1 if self.failures else 0

    def as_dict(self, timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'kind': self.kind,
            'seed': self.seed,
            'dims': list(self.dims),
            'environment': self.environment,
            'aggregate': self.aggregate(),
            'trials': [r.as_dict(timing) for r in self.records],
        }
        if timing and self.elapsed is not None:
            data['elapsed'] = self.elapsed
        return data


class SuiteRunner:
    """
    Runs a plan with a fixed config. With jobs > 1 trials are spread over a
    process pool; results come back in trial order either way.
    """

    def __init__(self, config: RunConfig) -> None:
        self.logger = logging.getLogger(__name__)
        self.config = config

    def parameters(self, plan: RunPlan) -> SuiteParameters:
        return SuiteParameters(
            dims=plan.dims,
            options=dict(plan.options),
            oracle_samples=self.config.oracle_samples,
            search_budget=self.config.search_budget,
            max_step_angle=self.config.max_step_angle,
        )

    def tasks(self, plan: RunPlan) -> List[TrialTask]:
        policy = self.config.policy
        params = self.parameters(plan)
        timing = self.config.timing
        tasks = [TrialTask(plan.kind, policy, params, plan.seed, i, None, timing) for i in range(plan.trials)]
        tasks.extend(TrialTask(plan.kind, policy, params, plan.seed, plan.trials + j, instance, timing)
                     for j, instance in enumerate(plan.instances))
        return tasks

    def run(self, plan: RunPlan) -> RunResult:
        tasks = self.tasks(plan)
        jobs = max(1, min(self.config.jobs, len(tasks)))
        self.logger.info(f"Running {plan.trials} '{plan.kind}' trial(s) and {len(plan.instances)} explicit "
                         f"instance(s), seed {plan.seed}, dims {plan.dims[0]}..{plan.dims[1]}, jobs {jobs}")

        started = time.perf_counter()
        if jobs > 1:
            with multiprocessing.Pool(processes=jobs) as pool:
                records = list(pool.imap(execute_trial, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
        else:
            records = [execute_trial(task) for task in tasks]
        elapsed = time.perf_counter() - started

        environment = dict(self.config.environment())
        environment['version'] = __version__
        environment['options'] = dict(plan.options)
        result = RunResult(plan.kind, plan.seed, plan.dims, records, environment,
                           elapsed if self.config.timing else None)
        self.logger.info(f"Finished '{plan.kind}': {result.failures} failure(s), {result.errors} error(s), "
                         f"max defect {result.max_defect}")
        return result
