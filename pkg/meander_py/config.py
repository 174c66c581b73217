"""Configuration management for meander-py."""

import copy
import logging
from pathlib import Path
from typing import Any, Dict, Optional

try:
    import yaml
    YAML_AVAILABLE = True
except ImportError:
    YAML_AVAILABLE = False

from .utils import get_config_dir

logger = logging.getLogger(__name__)


DEFAULT_CONFIG = {
    "oracle": {
        "prime": 2_147_483_647,
        "trials": 5,
        "seed": 0,
        "attempts": 20,
        "workers": 1,
        "max_cybe_n": 6,
        "basis": "gl",  # gl or sl
    },
    "sweep": {
        "workers": 1,
        "format": "summary",  # csv, json, summary
    },
    "render": {
        "format": "dot",  # dot or tikz
        "top_color": "black",
        "bottom_color": "gray",
        "tikz_scale": 1.0,
    },
    "output": {
        "color": "auto",  # auto, always, never
        "style": "monokai",
    },
}


class Config:
    """Configuration manager."""

    def __init__(self, config_file: Optional[Path] = None):
        """Initialize configuration."""
        self.config_file = config_file
        self.data = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file or use defaults."""
        config = copy.deepcopy(DEFAULT_CONFIG)

        if self.config_file and self.config_file.exists():
            config_path = self.config_file
        else:
            if self.config_file:
                logger.warning("Config file not found: %s (using defaults)", self.config_file)
            config_path = get_config_dir() / "config.yaml"

        if config_path.exists() and YAML_AVAILABLE:
            try:
                with open(config_path, 'r', encoding='utf-8') as f:
                    user_config = yaml.safe_load(f)
                    if user_config:
                        config = self._merge_configs(config, user_config)
            except (OSError, yaml.YAMLError) as e:
                logger.warning("Could not load config from %s: %s", config_path, e)

        return config

    def _merge_configs(self, base: Dict, override: Dict) -> Dict:
        """Recursively merge override config into base config."""
        result = base.copy()
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._merge_configs(result[key], value)
            else:
                result[key] = value
        return result

    def get(self, key: str, default: Any = None) -> Any:
        """Get config value by dot-separated key (e.g., 'oracle.prime')."""
        parts = key.split('.')
        value = self.data
        for part in parts:
            if isinstance(value, dict):
                value = value.get(part)
                if value is None:
                    return default
            else:
                return default
        return value

    def override(self, key: str, value: Any) -> None:
        """Set a dotted key, ignoring None so unset CLI flags keep the config value."""
        if value is None:
            return
        *parents, leaf = key.split('.')
        node = self.data
        for part in parents:
            node = node.setdefault(part, {})
        node[leaf] = value

    def dump(self) -> str:
        """Current configuration as YAML text."""
        if not YAML_AVAILABLE:
            return repr(self.data)
        return yaml.dump(self.data, default_flow_style=False, sort_keys=False)

    def create_default_config(self) -> Optional[Path]:
        """Create default config file."""
        if not YAML_AVAILABLE:
            logger.warning("PyYAML not installed. Cannot create config file.")
            return None

        config_dir = get_config_dir()
        config_dir.mkdir(parents=True, exist_ok=True)
        config_path = config_dir / "config.yaml"

        with open(config_path, 'w', encoding='utf-8') as f:
            yaml.dump(DEFAULT_CONFIG, f, default_flow_style=False, sort_keys=False)

        return config_path
