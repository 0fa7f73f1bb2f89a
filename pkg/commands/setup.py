"""
Help command and the coloured click group for component-split.

The group colours its own --help and answers an unknown command name with
the closest registered commands.
"""

from dataclasses import dataclass

import click

from core.config import get_default_seed, get_oracle_limit, get_report_dir
from models.utils import find_similar_strings


@dataclass(frozen=True)
class CommandSection:
    """One block of the quick reference: a heading and (usage, meaning) rows."""
    name: str
    icon: str
    commands: list[tuple[str, str]]


def _rows(formatter, rows: list[tuple[str, str]], width: int, dim: bool = False) -> None:
    with formatter.indentation():
        for left, right in rows:
            formatter.write_text(click.style(left.ljust(width), fg='green') + '  '
                                 + click.style(right, fg='white', dim=dim))


class ColouredGroup(click.Group):
    """click.Group with coloured help and typo suggestions for subcommands."""

    def resolve_command(self, ctx, args):
        try:
            return super().resolve_command(ctx, args)
        except click.UsageError as exc:
            name = args[0] if args else ''
            nearby = self.suggest(ctx, name) if 'No such command' in str(exc) else []
            if not nearby:
                raise
            message = f"Error: No such command '{name}'.\n\n" + click.style("Did you mean one of these?\n", fg='yellow')
            message += ''.join(click.style(f"  • {candidate}\n", fg='green') for candidate in nearby)
            raise click.UsageError(message) from exc

    def visible_commands(self, ctx) -> list[tuple[str, click.Command]]:
        found = ((name, self.get_command(ctx, name)) for name in self.list_commands(ctx))
        return [(name, command) for name, command in found if command is not None and not command.hidden]

    def suggest(self, ctx, name: str, limit: int = 3) -> list[str]:
        """Visible commands ranked by similarity_score."""
        if not name:
            return []
        return find_similar_strings(name, [n for n, _ in self.visible_commands(ctx)], limit=limit)

    def format_help(self, ctx, formatter):
        formatter.write_paragraph()
        formatter.write_text(click.style('Usage: ', fg='cyan', bold=True)
                             + click.style(f'{ctx.command_path} [OPTIONS] COMMAND [ARGS]...', fg='white'))

        for paragraph in (self.help or '').split('\n\n'):
            if paragraph.strip():
                formatter.write_paragraph()
                for line in paragraph.strip().splitlines():
                    formatter.write_text(click.style(line, fg='white'))

        options = [record for param in self.get_params(ctx) if (record := param.get_help_record(ctx))]
        if options:
            formatter.write_paragraph()
            formatter.write_text(click.style('Options:', fg='yellow', bold=True))
            _rows(formatter, options, max(len(flags) for flags, _ in options))

        commands = [(name, command.get_short_help_str(limit=500)) for name, command in self.visible_commands(ctx)]
        if commands:
            formatter.write_paragraph()
            formatter.write_text(click.style('Commands:', fg='yellow', bold=True))
            _rows(formatter, commands, max(20, *(len(name) for name, _ in commands)), dim=True)


COMMAND_SECTIONS = [
    CommandSection(
        name="ROOT DATA",
        icon="📐",
        commands=[
            ("describe <datum>", "Roots, |W|, connection index, A and A_G"),
            ("describe <datum> --json", "The same as a JSON document"),
        ]
    ),
    CommandSection(
        name="CENTRALISERS",
        icon="🎯",
        commands=[
            ("centralize <datum> -l <lambda>", "Normalise lambda, Phi(s), W^0(s), A_G(s)"),
            ("centralize ... --basis fundamental", "Read lambda in fundamental coweights"),
            ("centralize ... --certify", "Build and verify the splitting A_0"),
            ("centralize ... --oracle", "Cross-check A_G(s) by enumerating W"),
        ]
    ),
    CommandSection(
        name="LIFTS",
        icon="🧬",
        commands=[
            ("lift <datum>", "Flat lift of A and the section tau_2 on A_G"),
            ("lift <datum> --generic", "Use the search instead of the per-type recipe"),
            ("frobenius <datum> -l <lambda> -q <q>", "F-stable splitting for q"),
        ]
    ),
    CommandSection(
        name="VERIFICATION",
        icon="✅",
        commands=[
            ("verify", "Run every verification suite"),
            ("verify -s <suite>", "Run one suite (repeatable)"),
            ("verify --max-rank 4 --jobs 4", "Smaller catalog, parallel workers"),
            ("verify --json --save", "Print and save the JSON report"),
        ]
    ),
]

DATUM_EXAMPLES = [
    ("D4:sc", "simply connected Spin_8"),
    ("A1:ad", "PGL_2"),
    ("A1xA1:sc;p=3", "characteristic 3"),
    ("A3:lattice(1/2,0,1/2)", "Q^vee plus the given rows"),
    ("A2xT1:sc", "with a one-dimensional central torus"),
]


def _echo_rows(rows: list[tuple[str, str]]) -> None:
    for left, right in rows:
        click.echo("  " + click.style(left, fg='green') + " " * max(2, 40 - len(left)) + right)
    click.echo()


@click.command(name='help')
def help_command():
    """Quick reference: common invocations, datum syntax and the environment."""
    click.secho("\ncomponent-split quick reference", fg='cyan', bold=True)
    click.secho("=" * 32, fg='cyan')
    click.echo()

    for section in COMMAND_SECTIONS:
        click.secho(f"{section.icon} {section.name}", fg='yellow', bold=True)
        _echo_rows(section.commands)

    click.secho("🔤 DATUM SYNTAX", fg='yellow', bold=True)
    _echo_rows(DATUM_EXAMPLES)

    click.secho("⚙️  ENVIRONMENT", fg='yellow', bold=True)
    _echo_rows([
        ("CSPLIT_ORACLE_LIMIT", str(get_oracle_limit())),
        ("CSPLIT_SEED", str(get_default_seed())),
        ("CSPLIT_REPORT_DIR", str(get_report_dir())),
    ])
