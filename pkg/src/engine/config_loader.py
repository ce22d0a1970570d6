import os
import logging
import configparser
from typing import Any, Dict, Optional

from ..errors import PolicyError
from .config import RunConfig

# tomllib is stdlib from Python 3.11; older interpreters use the tomli backport
try:
    import tomllib
except ImportError:
    try:
        import tomli as tomllib  # type: ignore
    except ImportError:
        tomllib = None

INI_SECTIONS = {
    '.sfmaslovrc': ('policy', 'run'),
    'setup.cfg': ('sfmaslov:policy', 'sfmaslov:run'),
}

INT_KEYS = {'refine_limit', 'jobs', 'oracle_samples', 'search_budget'}
FLOAT_KEYS = {'rank_tol', 'angle_tol', 'max_step_angle'}
BOOL_KEYS = {'timing'}
LIST_KEYS = {'reporters'}


class ConfigLoader:
    """
    Loads run configuration from standard config files.
    """

    def __init__(self) -> None:
        self.logger = logging.getLogger(__name__)

    def load_config(self, project_root: str, config_file: Optional[str] = None) -> RunConfig:
        """
        Load configuration from an explicit file, pyproject.toml, .sfmaslovrc or setup.cfg.
        The first file with a relevant section wins.

        Args:
            project_root (str): The directory to search for config files.
            config_file (str): Optional explicit path to a config file.

        Returns:
            RunConfig: Configuration object with normalized options.
        """
        config = RunConfig()
        candidates = [config_file] if config_file else ['pyproject.toml', '.sfmaslovrc', 'setup.cfg']

        for cand in candidates:
            path = cand if os.path.isabs(cand) else os.path.join(project_root, cand)
            if not os.path.exists(path):
                if config_file:
                    self.logger.warning(f"Configuration file {path} not found. Using defaults.")
                continue

            try:
                if cand.endswith('.toml'):
                    if tomllib is None:
                        self.logger.warning(f"Found {cand} but neither tomllib nor tomli is available. Skipping.")
                        continue
                    if self._load_toml(path, config):
                        break
                elif self._load_ini(path, os.path.basename(cand), config):
                    break
            except PolicyError:
                raise
            except Exception as e:
                self.logger.warning(f"Failed to parse configuration file {path}: {e}")

        return config

    def _load_ini(self, path: str, name: str, config: RunConfig) -> bool:
        """Parse INI configuration file."""
        parser = configparser.ConfigParser()
        try:
            parser.read(path)
        except configparser.Error as e:
            raise ValueError(f"INI parse error: {e}")

        sections = INI_SECTIONS.get(name)
        if sections is None:
            # explicit files may use either naming
            sections = next((s for s in INI_SECTIONS.values() if any(parser.has_section(x) for x in s)),
                            ('policy', 'run'))
        present = [s for s in sections if parser.has_section(s)]
        if not present:
            return False

        for section in present:
            self.apply(config, dict(parser.items(section)), section)
        return True

    def _load_toml(self, path: str, config: RunConfig) -> bool:
        """Parse TOML configuration file (pyproject.toml)."""
        with open(path, 'rb') as f:
            data = tomllib.load(f)  # type: ignore

        tool = data.get('tool', {}).get('sfmaslov', {})
        policy = tool.get('policy', {})
        run = tool.get('run', {})
        if not policy and not run:
            return False

        self.apply(config, policy, 'policy')
        self.apply(config, run, 'run')
        return True

    def apply(self, config: RunConfig, values: Dict[str, Any], section: str) -> None:
        """Override config fields from a mapping; unknown keys are warned about and skipped."""
        for key, raw in values.items():
            if key not in config.field_names():
                self.logger.warning(f"Ignoring unknown option '{key}' in [{section}]")
                continue
            try:
                setattr(config, key, self._convert(key, raw))
            except (TypeError, ValueError):
                raise PolicyError(f"Invalid value {raw!r} for '{key}' in [{section}]")
        # validates the policy fields eagerly
        _ = config.policy

    def _convert(self, key: str, raw: Any) -> Any:
        if key in INT_KEYS:
            return int(raw)
        if key in FLOAT_KEYS:
            return float(raw)
        if key in BOOL_KEYS:
            if isinstance(raw, bool):
                return raw
            return str(raw).strip().lower() in ('1', 'true', 'yes', 'on')
        if key in LIST_KEYS:
            if isinstance(raw, (list, tuple)):
                return [str(x) for x in raw]
            return self._parse_list(raw)
        return str(raw).strip()

    def _parse_list(self, raw_str: str) -> list:
        """Helper to parse multiline or comma-separated strings into a list."""
        result = []
        for line in raw_str.replace(',', '\n').splitlines():
            clean = line.strip()
            if clean and clean not in result:
                result.append(clean)
        return result
