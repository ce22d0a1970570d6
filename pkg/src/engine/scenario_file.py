import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..errors import ScenarioError
from ..scenarios import check_fields, integer_from
from ..suites import SUITES

SCHEMA_VERSION = "1"

TOP_FIELDS = {'schema_version', 'kind', 'parameters', 'explicit_instances', 'description'}
PARAMETER_FIELDS = {'dims', 'trials', 'seed', 'options', 'policy', 'oracle_samples', 'search_budget',
                    'max_step_angle'}

logger = logging.getLogger(__name__)


@dataclass
class Scenario:
    """A parsed scenario file. Fields left out of the file stay None."""
    kind: str
    trials: Optional[int] = None
    seed: Optional[int] = None
    dims: Optional[Tuple[int, int]] = None
    options: Dict[str, Any] = field(default_factory=dict)
    policy: Dict[str, Any] = field(default_factory=dict)
    run: Dict[str, Any] = field(default_factory=dict)
    explicit_instances: List[Dict[str, Any]] = field(default_factory=list)
    source: str = '<memory>'


def parse_dims(value: Any, where: str = 'dims') -> Tuple[int, int]:
    """
    Dimension range from an integer, a two-element list, or a string
    "lo-hi" / "n" as given on the command line.
    """
    if isinstance(value, str):
        try:
            numbers = [int(p) for p in value.split('-')]
        except ValueError:
            raise ScenarioError(f"{where}: cannot parse dimension range {value!r}")
        if len(numbers) > 2:
            raise ScenarioError(f"{where}: cannot parse dimension range {value!r}")
        value = numbers if len(numbers) == 2 else numbers[0]
    if isinstance(value, list):
        if len(value) != 2:
            raise ScenarioError(f"{where}: expected [lo, hi], got {value!r}")
        lo, hi = (integer_from(v, where) for v in value)
    else:
        lo = hi = integer_from(value, where)
    if lo < 0 or hi < lo:
        raise ScenarioError(f"{where}: invalid dimension range [{lo}, {hi}]")
    return lo, hi


def check_version(data: Dict[str, Any], where: str) -> None:
    version = data.get('schema_version')
    if version != SCHEMA_VERSION:
        raise ScenarioError(f"{where}: unsupported schema_version {version!r} (expected \"{SCHEMA_VERSION}\")")


def parse_scenario(data: Any, source: str = '<memory>') -> Scenario:
    check_fields(data, TOP_FIELDS, {'schema_version', 'kind'}, source)
    check_version(data, source)
    kind = data['kind']
    if kind not in SUITES:
        raise ScenarioError(f"{source}: unknown scenario kind {kind!r}; expected one of {', '.join(sorted(SUITES))}")

    params = check_fields(data.get('parameters', {}), PARAMETER_FIELDS, (), f"{source}: parameters")
    scenario = Scenario(kind=kind, source=source)
    if 'trials' in params:
        scenario.trials = integer_from(params['trials'], 'parameters.trials')
        if scenario.trials < 0:
            raise ScenarioError(f"{source}: parameters.trials must be nonnegative")
    if 'seed' in params:
        scenario.seed = integer_from(params['seed'], 'parameters.seed')
        if not 0 <= scenario.seed < 2 ** 64:
            raise ScenarioError(f"{source}: parameters.seed must be an unsigned 64-bit integer")
    if 'dims' in params:
        scenario.dims = parse_dims(params['dims'], 'parameters.dims')
    for key in ('options', 'policy'):
        value = params.get(key, {})
        if not isinstance(value, dict):
            raise ScenarioError(f"{source}: parameters.{key} must be an object")
        setattr(scenario, key, dict(value))
    scenario.run = {k: params[k] for k in ('oracle_samples', 'search_budget', 'max_step_angle') if k in params}

    instances = data.get('explicit_instances', [])
    if not isinstance(instances, list):
        raise ScenarioError(f"{source}: explicit_instances must be an array")
    for i, instance in enumerate(instances):
        if not isinstance(instance, dict):
            raise ScenarioError(f"{source}: explicit_instances[{i}] must be an object")
    scenario.explicit_instances = instances
    return scenario


def read_json(path: str) -> Any:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except OSError as e:
        raise ScenarioError(f"Cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise ScenarioError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")


def load_scenario(path: str) -> Scenario:
    """
    Load and validate a scenario file.

    Raises:
        ScenarioError: The file is unreadable, not JSON, of an unknown
            schema_version or kind, or carries unknown fields.
    """
    scenario = parse_scenario(read_json(path), path)
    logger.debug(f"Loaded scenario '{scenario.kind}' from {path} "
                 f"with {len(scenario.explicit_instances)} explicit instance(s)")
    return scenario


def load_instance(path: str, kind: str) -> Dict[str, Any]:
    """Load an instance file for `compute <kind>`; the version is checked, the fields by the parser."""
    data = read_json(path)
    if not isinstance(data, dict):
        raise ScenarioError(f"{path}: expected an object")
    check_version(data, path)
    if data.get('kind', kind) != kind:
        raise ScenarioError(f"{path}: expected a {kind!r} instance, got {data.get('kind')!r}")
    return data
