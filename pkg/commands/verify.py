"""Verification command.

Runs the suites in core.suites and reports pass/fail counts. Exit code 3
when any suite fails, with the failing instances in the report.
"""

import click

from commands.helpers import cli_errors, echo_json
from core.config import SCHEMA_VERSION, get_default_seed, save_report
from core.suites import DEFAULT_MAX_RANK, SUITES, run_suites
from models.utils import find_similar_strings

SUITE_CHOICES = ['all', *SUITES]


def _validate_suites(ctx, param, values):
    for name in values:
        if name not in SUITE_CHOICES:
            similar = find_similar_strings(name, SUITE_CHOICES, limit=3)
            hint = f" Did you mean: {', '.join(similar)}?" if similar else ''
            raise click.BadParameter(f"Unknown suite '{name}'.{hint}")
    return list(values) or ['all']


@click.command(name='verify')
@click.option('--suite', '-s', 'suites', multiple=True, callback=_validate_suites,
              help=f"Suite to run (repeatable): {', '.join(SUITE_CHOICES)}")
@click.option('--max-rank', type=click.IntRange(1, 8), default=DEFAULT_MAX_RANK, show_default=True,
              help='Skip catalog types of larger rank')
@click.option('--seed', type=int, default=None, help='Seed for random words (default: CSPLIT_SEED or 42)')
@click.option('--jobs', '-j', type=click.IntRange(1), default=1, show_default=True, help='Worker processes')
@click.option('--save', is_flag=True, help='Save the JSON report under CSPLIT_REPORT_DIR')
@click.option('--json', 'as_json', is_flag=True, help='Print the JSON report instead of text')
def verify_command(suites: list[str], max_rank: int, seed: int | None, jobs: int, save: bool, as_json: bool):
    """Run the verification suites.

    \b
    Examples:
      csplit verify
      csplit verify -s adams-vogan --max-rank 4
      csplit verify -s theorem1 -s theorem2 --jobs 8 --save
    """
    with cli_errors():
        seed = get_default_seed() if seed is None else seed
        results = run_suites(suites, max_rank=max_rank, seed=seed, jobs=jobs)
    passed = all(r.passed for r in results)
    report = {
        'version': SCHEMA_VERSION,
        'seed': seed,
        'max_rank': max_rank,
        'passed': passed,
        'suites': [r.to_document() for r in results],
    }

    if as_json:
        echo_json(report)
    else:
        click.echo()
        click.secho("=== Verification ===", fg='cyan', bold=True)
        click.echo()
        for result in results:
            mark, colour = ('✓', 'green') if result.passed else ('✗', 'red')
            click.secho(f"  {mark} {result.name.ljust(16)}", fg=colour, nl=False)
            click.echo(click.style(f"{result.count} checked", dim=True))
            for failure in result.failures:
                click.secho(f"      {failure['identity']}: {failure['instance']}", fg='red')
        click.echo()

    if save:
        name = f"verify-{'-'.join(suites)}-seed{seed}-rank{max_rank}"
        path = save_report(report, name)
        click.secho(f"✓ Report saved to {path}", fg='green', err=as_json)

    if not passed:
        if not as_json:
            click.secho("✗ Verification failed", fg='red', bold=True)
        click.get_current_context().exit(3)
