"""Act subcommand for quartaut CLI."""

from sys import exit

from click import argument, echo, option

from . import align, conductor_option, dump, err, load_form, load_matrix, main, plain_option
from ..forms import act as act_on, substitute_direct
from ..parse import format_form


@main.command
@conductor_option
@option("-d", "--direct", is_flag=True, help="Print f(Mx) instead of f_M(x) = f(M⁻¹x)")
@option("-n", "--nvars", default=4, type=int, help="Number of variables (default: 4)")
@plain_option
@argument("form")
@argument("matrix")
def act(conductor: int, direct: bool, nvars: int, plain: bool, form: str, matrix: str):
    """Apply MATRIX to FORM.

    \b
        quartaut act -N 20 @F80 @B80
        quartaut act -d "x^4 + y^4 + z^4 + t^4" '[[0,1,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,1]]'
    """
    f, M = align(load_form(form, nvars, conductor), load_matrix(matrix, conductor))
    try:
        g = substitute_direct(f, M) if direct else act_on(f, M)
    except Exception as e:
        err(f"Error applying matrix: {e}")
        exit(1)
    if plain:
        echo(format_form(g, plain=True))
    else:
        dump({'conductor': g.conductor, 'form': g})
