"""
Centraliser command.

Normalises lambda into the fundamental alcove and reports Phi(s), W^0(s)
and A_G(s); --certify adds the verified splitting, --oracle the
brute-force cross-check.
"""

import click

from commands.helpers import (cli_errors, echo_check, echo_field, echo_heading, echo_json, echo_warning,
                              load_datum, load_lambda)
from core.config import get_oracle_limit
from core.errors import VerificationError
from core.report import centralizer_document
from models.centralizer import SemisimpleClass, brute_force_w_of_s, centralizer_data
from models.lifting import splitting_certificate
from models.utils import BASES, format_invariants, format_word


@click.command(name='centralize')
@click.argument('datum')
@click.option('--lambda', '-l', 'lam', required=True, help='Comma-separated rationals, e.g. 1/4,0')
@click.option('--basis', '-b', type=click.Choice(BASES), default='coroot', show_default=True,
              help='Coordinates of lambda')
@click.option('--certify', is_flag=True, help='Build and verify the splitting certificate')
@click.option('--generic', is_flag=True, help='Certify with the searched lift instead of the per-type one')
@click.option('--oracle', is_flag=True, help='Cross-check A_G(s) by enumerating W')
@click.option('--limit', type=int, default=None, help='Largest |W| the oracle may enumerate')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON document instead of text')
def centralize_command(datum: str, lam: str, basis: str, certify: bool, generic: bool, oracle: bool,
                       limit: int | None, as_json: bool):
    """Centraliser of the semisimple class of lambda.

    \b
    Examples:
      csplit centralize A1:ad -l 1/4
      csplit centralize E7:ad -l 1 --basis fundamental --certify
    """
    root_datum = load_datum(datum)
    point = load_lambda(lam, root_datum, basis)

    with cli_errors():
        s = SemisimpleClass.create(root_datum, point)
        data = centralizer_data(s)
        certificate = splitting_certificate(s, generic=generic) if certify else None
        brute = None
        if oracle:
            brute = brute_force_w_of_s(data.normalized, limit or get_oracle_limit())
            if brute.quotient_order != len(data.a_w_s) or brute.invariant_factors != data.a_w_invariants:
                raise VerificationError('oracle-agreement', {
                    'datum': root_datum.label,
                    'a_g_s': data.a_w_invariants,
                    'oracle': brute.invariant_factors,
                })

    document = centralizer_document(s, data, certificate)
    if brute is not None:
        document['oracle'] = {'w_s': brute.w_s_order, 'w0_s': brute.w0_s_order,
                              'invariant_factors': brute.invariant_factors}
    if as_json:
        echo_json(document)
        return

    echo_heading(f"Centraliser in {root_datum.label}")
    if s.projected:
        echo_warning(f"lambda had {root_datum.p}-torsion; using its {root_datum.p}'-part")
    echo_field("lambda", '(' + ', '.join(document['lambda']) + ')')
    echo_field("Normalised", '(' + ', '.join(document['normalized']) + ')')
    echo_field("Conjugator w", format_word(data.conjugator.weyl.reduced_word))
    echo_field("Translation", '(' + ', '.join(document['conjugator']['translation']) + ')')
    echo_field("|Phi(s)|", len(data.phi_s))
    basis = ', '.join(str(list(r.coords)) for r in data.basis) or 'empty'
    echo_field("Basis of Phi(s)", basis)
    echo_field("W^0(s)", f"{data.w0s_type} (order {data.w0s_order})")
    click.echo(click.style("  A_G(s):".ljust(25), fg='white', dim=True)
               + click.style(format_invariants(data.a_w_invariants), fg='green', bold=True))

    if brute is not None:
        click.echo()
        click.secho("Oracle", fg='cyan', bold=True)
        echo_field("|W(s)|", brute.w_s_order)
        echo_field("|W^0(s)|", brute.w0_s_order)
        echo_check(f"W(s)/W^0(s) = {format_invariants(brute.invariant_factors)}")

    if certificate is not None:
        click.echo()
        click.secho("Splitting certificate", fg='cyan', bold=True)
        for gen in certificate.generators:
            torus = ', '.join(str(x) for x in gen.image.torus)
            click.echo(f"  {format_word(gen.image.weyl.reduced_word)}  "
                       + click.style(f"torus ({torus})", dim=True)
                       + f"  order {gen.order}")
        for check in certificate.checks:
            echo_check(check)
    click.echo()
