from .config import RunConfig
from .config_loader import ConfigLoader
from .scenario_file import Scenario, SCHEMA_VERSION, load_scenario, load_instance, parse_scenario, parse_dims
from .runner import RunPlan, RunResult, SuiteRunner, TrialRecord, execute_trial
from .report_manager import ReportManager

__all__ = [
    "RunConfig",
    "ConfigLoader",
    "Scenario",
    "SCHEMA_VERSION",
    "load_scenario",
    "load_instance",
    "parse_scenario",
    "parse_dims",
    "RunPlan",
    "RunResult",
    "SuiteRunner",
    "TrialRecord",
    "execute_trial",
    "ReportManager",
]
