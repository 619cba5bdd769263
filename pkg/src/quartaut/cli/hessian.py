"""Hessian subcommand for quartaut CLI."""

from sys import exit
from typing import Optional

from click import argument, echo, option

from . import align, conductor_option, dump, err, load_form, main, plain_option
from ..forms import hessian as hess, proportionality
from ..parse import format_form


@main.command
@conductor_option
@option("-c", "--compare", default=None, help="Report the constant λ with Hess(FORM) = λ·COMPARE, or null")
@option("-n", "--nvars", default=4, type=int, help="Number of variables (default: 4)")
@plain_option
@argument("form")
def hessian(conductor: int, compare: Optional[str], nvars: int, plain: bool, form: str):
    """Print the Hessian determinant of FORM.

    \b
        quartaut hessian -n 3 "x^3*y + y^3*z + z^3*x"
        quartaut hessian @F80 -c @h80
    """
    f = load_form(form, nvars, conductor)
    g = load_form(compare, nvars, conductor, "--compare") if compare else None
    try:
        H = hess(f)
        out = {'conductor': H.conductor, 'hessian': H}
        if g is not None:
            H, g = align(H, g)
            out['constant'] = proportionality(H, g)
    except Exception as e:
        err(f"Error computing Hessian: {e}")
        exit(1)
    if plain:
        echo(format_form(H, plain=True))
    else:
        dump(out)
