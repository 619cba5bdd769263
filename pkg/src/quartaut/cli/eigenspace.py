"""Eigenspace subcommand for quartaut CLI."""

from math import lcm
from sys import exit

from click import BadParameter, echo, option, pass_context

from . import conductor_option, dump, err, load_matrix, main, plain_option
from ..eigenmod import eigenspace_basis
from ..parse import format_form, parse_scalar


@main.command
@pass_context
@conductor_option
@option("-g", "--gen", "gens", multiple=True, required=True, help="Generator matrix (JSON or @ID); repeatable")
@option("-r", "--rho", "rhos", multiple=True, help="Eigenvalue for the matching generator (default: 1 for each)")
@option("-d", "--degree", default=4, type=int, help="Degree of forms (default: 4)")
@plain_option
def eigenspace(ctx, conductor: int, gens: tuple[str, ...], rhos: tuple[str, ...], degree: int, plain: bool):
    """Basis of the forms f with f_{g⁻¹} = ρ(g)·f for every generator g.

    \b
        quartaut eigenspace -N 7 -g @A6
        quartaut eigenspace -N 56 -g @A7 -g @B7 -g @C_sqrt2
    """
    if rhos and len(rhos) != len(gens):
        raise BadParameter(f"{len(gens)} generators but {len(rhos)} eigenvalues", param_hint="--rho")
    mats = [load_matrix(g, conductor, "--gen") for g in gens]
    N = lcm(conductor, *(M.conductor for M in mats))
    mats = [M.embed(N) for M in mats]
    try:
        rho = [parse_scalar(r, N) for r in rhos] if rhos else [1] * len(mats)
    except ValueError as e:
        raise BadParameter(str(e), param_hint="--rho") from e
    try:
        basis = eigenspace_basis(mats, rho, mats[0].n, degree, log=ctx.obj["log"])
    except Exception as e:
        err(f"Error computing eigenspace: {e}")
        exit(1)
    if plain:
        for f in basis:
            echo(format_form(f, plain=True))
    else:
        dump({'conductor': N, 'dimension': len(basis), 'basis': basis})
