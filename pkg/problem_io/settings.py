"""
Runtime settings for the command line tools, read from YAML with environment
overrides.
"""
import os
from typing import Any, Dict, Optional

import yaml

from polyhedra import ProjectionBackendFactory

CONFIG_ENV = "SETOPT_CONFIG"
LOG_LEVEL_ENV = "SETOPT_LOG_LEVEL"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
VLP_CONES = ("nonnegative_orthant", "full_space")
REQUIRED_KEYS = ["name", "log_level", "max_refinement_rounds", "projection_backend", "default_vlp_cone"]


def load_config_file(config_file: str) -> Dict[str, Any]:
    """
    Loads and validates a settings file.

    Args:
        config_file (str): Path to the YAML settings file.

    Returns:
        Dict[str, Any]: Settings dictionary.

    Raises:
        FileNotFoundError: If the file doesn't exist
        yaml.YAMLError: If the file has invalid YAML
        ValueError: If keys are missing or values are out of range
    """
    try:
        with open(config_file, 'r') as file:
            config = yaml.safe_load(file)
    except FileNotFoundError:
        raise FileNotFoundError(f"Configuration file not found: {config_file}")
    except yaml.YAMLError as e:
        raise yaml.YAMLError(f"Invalid YAML in configuration file {config_file}: {e}")

    if not isinstance(config, dict):
        raise ValueError(f"Configuration file {config_file} must contain a mapping")
    missing_keys = [key for key in REQUIRED_KEYS if key not in config]
    if missing_keys:
        raise ValueError(f"Configuration file missing required keys: {missing_keys}")
    validate_config(config)
    return config


def validate_config(config: Dict[str, Any]) -> None:
    if not config["name"] or not isinstance(config["name"], str):
        raise ValueError("Configuration 'name' must be a non-empty string")
    if str(config["log_level"]).upper() not in LOG_LEVELS:
        raise ValueError(f"Configuration 'log_level' must be one of {LOG_LEVELS}, got {config['log_level']!r}")
    rounds = config["max_refinement_rounds"]
    if isinstance(rounds, bool) or not isinstance(rounds, int) or rounds < 1:
        raise ValueError(f"Configuration 'max_refinement_rounds' must be a positive integer, got {rounds!r}")
    available = ProjectionBackendFactory.get_available_backends()
    if config["projection_backend"] not in available:
        raise ValueError(f"Configuration 'projection_backend' must be one of {available}, got {config['projection_backend']!r}")
    if config["default_vlp_cone"] not in VLP_CONES:
        raise ValueError(f"Configuration 'default_vlp_cone' must be one of {VLP_CONES}, got {config['default_vlp_cone']!r}")


def default_config() -> Dict[str, Any]:
    """
    Provides the built-in settings.

    Returns:
        Dict[str, Any]: Default settings dictionary.
    """
    return {
        "name": "setopt",
        "log_level": "WARNING",
        "max_refinement_rounds": 8,
        "projection_backend": "fourier_motzkin",
        "default_vlp_cone": "nonnegative_orthant",
    }


def resolve_config(config_file: Optional[str] = None) -> Dict[str, Any]:
    """
    Settings for one command run: the explicit file, else $SETOPT_CONFIG, else
    the defaults. $SETOPT_LOG_LEVEL overrides the log level.
    """
    path = config_file or os.getenv(CONFIG_ENV)
    config = load_config_file(path) if path else default_config()
    override = os.getenv(LOG_LEVEL_ENV)
    if override:
        if override.upper() not in LOG_LEVELS:
            raise ValueError(f"{LOG_LEVEL_ENV} must be one of {LOG_LEVELS}, got {override!r}")
        config = dict(config, log_level=override)
    config["log_level"] = str(config["log_level"]).upper()
    return config
