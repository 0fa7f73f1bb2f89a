"""Helpers shared by the CLI commands.

- Exit-code exceptions (3 for failed verification, 4 for oracle refusal)
- cli_errors: translate library errors into click exceptions
- load_datum / load_lambda: parse arguments with UsageError on bad input
- echo_json / echo_field / echo_check: consistent output
"""

from contextlib import contextmanager

import click

from core.errors import ComponentSplitError, OracleSizeError, VerificationError
from core.report import dumps
from models.lattice import RationalVector
from models.rootdata import RootDatum, parse_datum
from models.utils import parse_lambda


class VerificationFailed(click.ClickException):
    exit_code = 3

    def __init__(self, error: VerificationError):
        super().__init__(f"{error} {dumps(error.instance) if error.instance else ''}".strip())
        self.error = error


class OracleRefused(click.ClickException):
    exit_code = 4


@contextmanager
def cli_errors():
    """Map library errors to exit codes: usage 2, verification 3, oracle size 4.

    Only ComponentSplitError subclasses count as bad input; any other
    exception is a bug and propagates unchanged.
    """
    try:
        yield
    except VerificationError as e:
        raise VerificationFailed(e)
    except OracleSizeError as e:
        raise OracleRefused(f"{e}. Raise CSPLIT_ORACLE_LIMIT or pass --limit")
    except ComponentSplitError as e:
        raise click.UsageError(str(e))


def load_datum(text: str) -> RootDatum:
    with cli_errors():
        return parse_datum(text)


def load_lambda(text: str, datum: RootDatum, basis: str) -> RationalVector:
    with cli_errors():
        return parse_lambda(text, datum, basis)


def echo_json(document: dict) -> None:
    click.echo(dumps(document))


def echo_heading(text: str) -> None:
    click.echo()
    click.secho(f"=== {text} ===", fg='cyan', bold=True)
    click.echo()


def echo_field(name: str, value, width: int = 22) -> None:
    click.echo(click.style(f"  {name}:".ljust(width + 3), fg='white', dim=True) + str(value))


def echo_check(name: str, passed: bool = True) -> None:
    if passed:
        click.secho(f"  ✓ {name}", fg='green')
    else:
        click.secho(f"  ✗ {name}", fg='red')


def echo_warning(text: str) -> None:
    click.secho(f"⚠️  {text}", fg='yellow')
