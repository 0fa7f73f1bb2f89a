"""
Root datum summary command.
"""

import click

from commands.helpers import cli_errors, echo_field, echo_heading, echo_json, load_datum
from core.report import describe_document
from models.utils import format_invariants


@click.command(name='describe')
@click.argument('datum')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON document instead of text')
def describe_command(datum: str, as_json: bool):
    """Summarise a root datum: roots, Weyl group, A and A_G.

    \b
    Examples:
      csplit describe D4:sc
      csplit describe A1:ad --json
    """
    root_datum = load_datum(datum)
    with cli_errors():
        document = describe_document(root_datum)

    if as_json:
        echo_json(document)
        return

    echo_heading(f"Root datum {document['datum']}")
    echo_field("Type", document['type'])
    echo_field("Roots |Phi|", document['roots'])
    echo_field("Weyl group |W|", document['weyl_order'])
    echo_field("Connection index", document['connection_index'])
    echo_field("A", format_invariants(document['a']))
    echo_field("A_G", format_invariants(document['a_g']))
    nodes = document['minuscule_nodes']
    echo_field("Minuscule nodes", ', '.join(map(str, nodes)) if nodes else 'none')
    echo_field("rho^vee", '(' + ', '.join(document['rho_check']) + ')')
    if root_datum.p:
        echo_field("Characteristic", root_datum.p)
    click.echo()
