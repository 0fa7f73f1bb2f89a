"""Pytest configuration and fixtures for component-split tests."""

from fractions import Fraction
from pathlib import Path

import pytest
from click.testing import CliRunner

from models.rootdata import parse_datum


@pytest.fixture
def project_root():
    """Return the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture
def runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture
def cli():
    from component_split import cli
    return cli


@pytest.fixture
def a1_sc():
    return parse_datum('A1:sc')


@pytest.fixture
def a1_ad():
    """PGL_2."""
    return parse_datum('A1:ad')


@pytest.fixture
def a2_sc():
    return parse_datum('A2:sc')


@pytest.fixture
def b2_sc():
    return parse_datum('B2:sc')


@pytest.fixture
def c2_sc():
    return parse_datum('C2:sc')


@pytest.fixture
def d4_sc():
    return parse_datum('D4:sc')


@pytest.fixture
def d4_ad():
    return parse_datum('D4:ad')


@pytest.fixture
def g2_sc():
    return parse_datum('G2:sc')


def frac_vector(*values) -> tuple[Fraction, ...]:
    """Build an exact vector from ints and 'p/q' strings."""
    return tuple(Fraction(v) for v in values)
