#!/usr/bin/env python3
"""
component-split CLI
Component groups of centralisers of semisimple elements and their splitting in the Tits group.
"""

# Load environment variables from .env file (CSPLIT_* settings)
from dotenv import load_dotenv
load_dotenv()

import click

from commands.setup import ColouredGroup, help_command
from commands.inspection import describe_command, centralize_command
from commands.lifting import register_lifting_commands
from commands.verify import verify_command


@click.group(
    cls=ColouredGroup,
    context_settings={
        'help_option_names': ['-h', '--help'],
        'max_content_width': 999
    }
)
@click.version_option(version='0.1.0', prog_name='component-split')
def cli():
    """component-split - exact computations with component groups C_G(s)/C_G(s)^0.

Describe root data, normalise semisimple classes into the fundamental alcove,
build the splitting C_G(s) = C_G(s)^0 x| A_0 inside the Tits group, and run
the verification suites.

Use 'help' for a quick reference of all commands.
Use 'COMMAND -h' or 'COMMAND --help' for detailed help on a specific command."""
    pass


cli.add_command(help_command)
cli.add_command(describe_command)
cli.add_command(centralize_command)
register_lifting_commands(cli)
cli.add_command(verify_command)


if __name__ == '__main__':
    cli()
