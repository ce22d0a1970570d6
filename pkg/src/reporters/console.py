from typing import TYPE_CHECKING

from .base import BaseReporter

if TYPE_CHECKING:
    from ..engine.runner import RunResult, TrialRecord

WIDTH = 78
MAX_LISTED = 10


class ConsoleReporter(BaseReporter):
    """
    Outputs the per-check tally of a run and the failing trials to standard output.
    """

    def generate(self, result: "RunResult") -> None:
        aggregate = result.aggregate()
        print("\n" + "=" * WIDTH)
        print(f"Scenario '{result.kind}'  seed {result.seed}  dims {result.dims[0]}..{result.dims[1]}  "
              f"trials {aggregate['trials']}")
        print("-" * WIDTH)
        print(f"{'Check':<30} | {'Evaluated':>9} | {'Failures':>8} | {'Status':>6}")
        print("-" * WIDTH)
        for name, totals in aggregate['checks'].items():
            status = "ok" if totals['failures'] == 0 else "FAIL"
            print(f"{name:<30} | {totals['evaluated']:>9} | {totals['failures']:>8} | {status:>6}")
        print("-" * WIDTH)
        print(f"failures {aggregate['failures']}  errors {aggregate['errors']}  "
              f"max defect {aggregate['max_defect']}")

        bad = [r for r in result.records if r.failed or r.error is not None]
        for record in bad[:MAX_LISTED]:
            print(self._describe(record))
        if len(bad) > MAX_LISTED:
            print(f"... and {len(bad) - MAX_LISTED} more")
        print("=" * WIDTH)

    def _describe(self, record: "TrialRecord") -> str:
        label = record.instance or f"trial {record.trial}"
        if record.error is not None:
            return f"  {label}: {record.error['type']}: {record.error['message']}"
        defects = ', '.join(f"{name} {c['lhs']} != {c['rhs']}" for name, c in record.checks.items() if c['defect'])
        return f"  {label} [{record.digest}]: {defects}"
