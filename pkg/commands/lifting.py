"""Lift commands.

This module provides the `lift` command (flat lift of A and the section
tau_2 on A_G) and the `frobenius` command (F-stable splittings).
"""

import click

from commands.helpers import (cli_errors, echo_check, echo_field, echo_heading, echo_json, echo_warning,
                              load_datum, load_lambda)
from core.config import SCHEMA_VERSION
from core.report import frobenius_document
from models.centralizer import SemisimpleClass
from models.frobenius import FrobeniusAction, f_stable_splitting, iota_is_equivariant
from models.fundgroup import a_sub_G, fundamental_group
from models.lattice import format_vector
from models.lifting import group_lift, lift_products
from models.utils import BASES, format_word, one_based


def register_lifting_commands(cli):
    """Register lift commands with the CLI group.

    Args:
        cli: Click group to register commands to
    """
    cli.add_command(lift_command)
    cli.add_command(frobenius_command)


@click.command(name='lift')
@click.argument('datum')
@click.option('--generic', is_flag=True, help='Search for the lift instead of using the per-type recipe')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON document instead of text')
def lift_command(datum: str, generic: bool, as_json: bool):
    """Flat lift of A to the Tits group and the section tau_2 on A_G.

    \b
    Examples:
      csplit lift D4:sc
      csplit lift C3:ad --generic
    """
    root_datum = load_datum(datum)
    with cli_errors():
        lift = lift_products(root_datum, generic=generic)
        tau2 = group_lift(lift, a_sub_G(root_datum))

    group = fundamental_group(root_datum)
    images = [
        {
            'node': g.node + 1,
            'order': g.order,
            'provenance': tag,
            'weyl_word': one_based(image.weyl.reduced_word),
            'torus_class': format_vector(image.torus),
        }
        for g, image, tag in zip(group.generators, lift.flat.images, lift.flat.provenance)
    ]
    tau2_generators = [
        {
            'order': order,
            'weyl_word': one_based(g.weyl.reduced_word),
            'torus_class': format_vector(tau2(g).torus),
        }
        for g, order in zip(tau2.generators, tau2.orders)
    ]
    if as_json:
        echo_json({
            'version': SCHEMA_VERSION,
            'datum': root_datum.label,
            'generic': generic,
            'flat_lift': images,
            'a_g_order': len(tau2),
            'tau2_generators': tau2_generators,
        })
        return

    echo_heading(f"Lift of A for {root_datum.label}")
    if not images:
        click.secho("A is trivial: nothing to lift", fg='white', dim=True)
    for image in images:
        click.secho(f"Node {image['node']} (order {image['order']}, {image['provenance']})", fg='cyan')
        echo_field("Weyl word", format_word([i - 1 for i in image['weyl_word']]))
        echo_field("Torus class", '(' + ', '.join(image['torus_class']) + ')')
    click.echo()
    echo_field("|A_G|", len(tau2))
    for gen in tau2_generators:
        echo_field(f"tau_2 generator (order {gen['order']})", format_word([i - 1 for i in gen['weyl_word']]), 30)
    echo_check('flat condition')
    echo_check('tau_1 orders')
    echo_check('tau_2 homomorphism section')
    click.echo()


@click.command(name='frobenius')
@click.argument('datum')
@click.option('--lambda', '-l', 'lam', required=True, help='Comma-separated rationals, e.g. 1/4,0')
@click.option('--basis', '-b', type=click.Choice(BASES), default='coroot', show_default=True,
              help='Coordinates of lambda')
@click.option('-q', 'q', type=int, required=True, help='The integer q of F (t -> q t)')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON document instead of text')
def frobenius_command(datum: str, lam: str, basis: str, q: int, as_json: bool):
    """F-stable splitting of C_G(s) for a Frobenius root with parameter q.

    Even q uses the characteristic 2 lift.

    \b
    Examples:
      csplit frobenius A1:ad -l 1/4 -q 3
      csplit frobenius D4:ad -l 1/2,0,0,0 -q 4
    """
    root_datum = load_datum(datum)
    point = load_lambda(lam, root_datum, basis)
    with cli_errors():
        F = FrobeniusAction(q)
        splitting = f_stable_splitting(SemisimpleClass.create(root_datum, point), F)
        equivariant = iota_is_equivariant(root_datum, q)

    document = frobenius_document(splitting)
    document['iota_equivariant'] = equivariant
    if as_json:
        echo_json(document)
        return

    certificate = splitting.certificate
    echo_heading(f"F-stable splitting in {certificate.datum.label}, q = {q}")
    if certificate.original.projected:
        echo_warning(f"lambda had {certificate.datum.p}-torsion; using its {certificate.datum.p}'-part")
    echo_field("lambda", '(' + ', '.join(document['lambda']) + ')')
    echo_field("|A_0|", len(certificate))
    for gen in certificate.generators:
        echo_field(f"Generator (order {gen.order})", format_word(gen.image.weyl.reduced_word), 30)
    for check in certificate.checks + splitting.checks:
        echo_check(check)
    if not equivariant:
        echo_warning("iota does not commute with F for this q")
    click.echo()
