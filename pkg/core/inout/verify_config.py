# core/inout/verify_config.py
"""
Load and validate YAML verification-run configurations for arcalg.
"""
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml
from cerberus import Validator

from core.exceptions import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20080101

# Cerberus schema for a verification run
VERIFY_SCHEMA = {
    'version': {'type': 'float', 'required': False, 'coerce': float},
    'max_vertices': {'type': 'integer', 'required': False, 'min': 0, 'default': 5},
    'samples': {'type': 'integer', 'required': False, 'min': 0, 'default': 10000},
    'seed': {'type': 'integer', 'required': False, 'default': DEFAULT_SEED},
    'workers': {'type': 'integer', 'required': False, 'min': 0, 'default': 0},
    'include_free': {'type': 'boolean', 'required': False, 'default': True},
    'exhaustive_limit': {'type': 'integer', 'required': False, 'min': 0, 'default': 20000},
    'suites': {
        'type': 'list',
        'required': False,
        'schema': {'type': 'string'},
        'default': ['all'],
    },
}


@dataclass(frozen=True)
class VerifyConfig:
    max_vertices: int = 5
    samples: int = 10000
    seed: int = DEFAULT_SEED
    workers: int = 0
    include_free: bool = True
    exhaustive_limit: int = 20000
    suites: Tuple[str, ...] = field(default=('all',))

    def with_overrides(self, **overrides: Optional[Any]) -> "VerifyConfig":
        """Command-line values win over file values; None means 'not given'."""
        given = {k: v for k, v in overrides.items() if v is not None}
        if 'suites' in given:
            given['suites'] = tuple(given['suites'])
        return replace(self, **given)


def parse_verify_config(raw: Any) -> VerifyConfig:
    validator = Validator(VERIFY_SCHEMA, allow_unknown=False)
    if not validator.validate(raw or {}):
        raise ConfigError(f"Verify config schema validation errors: {validator.errors}")
    doc: Dict[str, Any] = validator.document
    return VerifyConfig(
        max_vertices=doc['max_vertices'],
        samples=doc['samples'],
        seed=doc['seed'],
        workers=doc['workers'],
        include_free=doc['include_free'],
        exhaustive_limit=doc['exhaustive_limit'],
        suites=tuple(doc['suites']),
    )


def load_verify_config(path: Path) -> VerifyConfig:
    """
    Load a YAML verification config, validate its schema, and return a VerifyConfig.

    Raises:
        ConfigError: If the file cannot be read or fails schema validation.
    """
    try:
        raw = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except Exception as e:
        raise ConfigError(f"Failed to read verify YAML '{path}': {e}")
    config = parse_verify_config(raw)
    logger.debug("loaded verify config from %s: %s", path, config)
    return config
