"""Configuration management.

This module handles:
- Environment settings (oracle limit, default seed, report directory)
- Loading/saving JSON verification reports
"""

import json
import os
from pathlib import Path

from core.errors import ConfigurationError

# Version of every JSON document this tool writes
SCHEMA_VERSION = 1

DEFAULT_ORACLE_LIMIT = 1_000_000
DEFAULT_SEED = 42

# Report file location
REPORT_DIR = Path(__file__).parent.parent / 'reports'


def _int_from_env(name: str, default: int, minimum: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"Invalid {name}: '{raw}'. Must be an integer")
    if value < minimum:
        raise ConfigurationError(f"Invalid {name}: {value}. Must be at least {minimum}")
    return value


def get_oracle_limit() -> int:
    """Largest Weyl group order the brute-force oracles will enumerate.

    Read from CSPLIT_ORACLE_LIMIT, falling back to DEFAULT_ORACLE_LIMIT.
    """
    return _int_from_env('CSPLIT_ORACLE_LIMIT', DEFAULT_ORACLE_LIMIT, 1)


def get_default_seed() -> int:
    """Default seed for the randomised verification suites (CSPLIT_SEED)."""
    return _int_from_env('CSPLIT_SEED', DEFAULT_SEED, 0)


def get_report_dir() -> Path:
    """Directory for saved reports (CSPLIT_REPORT_DIR or ./reports)."""
    raw = os.environ.get('CSPLIT_REPORT_DIR')
    return Path(raw) if raw else REPORT_DIR


def save_report(report: dict, name: str) -> Path:
    """Save a report as pretty-printed, key-sorted JSON.

    Args:
        report: JSON-serialisable report dict
        name: File stem (without extension)

    Returns:
        Path of the written file
    """
    report_dir = get_report_dir()
    report_dir.mkdir(parents=True, exist_ok=True)

    path = report_dir / f"{name}.json"
    with open(path, 'w') as f:
        json.dump(report, f, indent=2, sort_keys=True)
        f.write('\n')
    return path


def load_report(path: Path) -> dict:
    """Load a previously saved report."""
    with open(path, 'r') as f:
        return json.load(f)
