"""Tests for configuration functions in core/config.py

Environment variables are patched; report writes go to a pytest tmp_path.
"""

import json
import os
from pathlib import Path
from unittest.mock import patch

import pytest

from core.config import (DEFAULT_ORACLE_LIMIT, DEFAULT_SEED, REPORT_DIR, SCHEMA_VERSION, get_default_seed,
                         get_oracle_limit, get_report_dir, load_report, save_report)
from core.errors import ConfigurationError


class TestConstants:
    """Test that constants are properly defined."""

    def test_report_dir(self):
        """REPORT_DIR should point to ./reports next to the package."""
        assert isinstance(REPORT_DIR, Path)
        assert REPORT_DIR.name == 'reports'

    def test_schema_version(self):
        assert SCHEMA_VERSION == 1


class TestOracleLimit:
    """CSPLIT_ORACLE_LIMIT handling."""

    @patch.dict(os.environ, {}, clear=True)
    def test_default(self):
        """Unset falls back to the default."""
        assert get_oracle_limit() == DEFAULT_ORACLE_LIMIT

    @patch.dict(os.environ, {'CSPLIT_ORACLE_LIMIT': '51840'})
    def test_from_env(self):
        assert get_oracle_limit() == 51840

    @patch.dict(os.environ, {'CSPLIT_ORACLE_LIMIT': '  '})
    def test_blank_is_default(self):
        """A blank value is treated as unset."""
        assert get_oracle_limit() == DEFAULT_ORACLE_LIMIT

    @patch.dict(os.environ, {'CSPLIT_ORACLE_LIMIT': 'lots'})
    def test_not_an_integer(self):
        with pytest.raises(ConfigurationError, match='Must be an integer'):
            get_oracle_limit()

    @patch.dict(os.environ, {'CSPLIT_ORACLE_LIMIT': '0'})
    def test_below_minimum(self):
        with pytest.raises(ConfigurationError, match='at least 1'):
            get_oracle_limit()


class TestSeed:
    """CSPLIT_SEED handling."""

    @patch.dict(os.environ, {}, clear=True)
    def test_default(self):
        assert get_default_seed() == DEFAULT_SEED

    @patch.dict(os.environ, {'CSPLIT_SEED': '7'})
    def test_from_env(self):
        assert get_default_seed() == 7

    @patch.dict(os.environ, {'CSPLIT_SEED': '-1'})
    def test_negative(self):
        """Seeds must be non-negative."""
        with pytest.raises(ConfigurationError):
            get_default_seed()


class TestReports:
    """Saving and loading JSON reports."""

    @patch.dict(os.environ, {}, clear=True)
    def test_default_report_dir(self):
        assert get_report_dir() == REPORT_DIR

    def test_save_and_load(self, tmp_path):
        """Reports are written as sorted, indented JSON and read back unchanged."""
        report = {'version': 1, 'passed': True, 'suites': []}
        with patch.dict(os.environ, {'CSPLIT_REPORT_DIR': str(tmp_path / 'out')}):
            path = save_report(report, 'verify-seed0')

        assert path == tmp_path / 'out' / 'verify-seed0.json'
        text = path.read_text()
        assert text == json.dumps(report, indent=2, sort_keys=True) + '\n'
        assert load_report(path) == report
