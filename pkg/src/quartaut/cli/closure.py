"""Closure subcommand for quartaut CLI."""

from math import lcm
from sys import exit

from click import option, pass_context

from . import conductor_option, dump, err, load_matrix, main
from ..projgroup import DEFAULT_CAP, CapExceeded, closure as close, normalize, order_statistics, proj_order


@main.command
@pass_context
@conductor_option
@option("-g", "--gen", "gens", multiple=True, required=True, help="Generator matrix (JSON or @ID); repeatable")
@option("-c", "--cap", default=DEFAULT_CAP, type=int, help=f"Give up past this many elements (default: {DEFAULT_CAP})")
@option("-s", "--stats", is_flag=True, help="Include the element-order statistics")
def closure(ctx, conductor: int, gens: tuple[str, ...], cap: int, stats: bool):
    """Order of the subgroup of PGL_n generated by the given matrices.

    \b
        quartaut closure -g @B80 -g @C80
        quartaut closure -N 4 -g @H2 -g @H3 -g @K2 -g @K3 --stats
    """
    mats = [load_matrix(g, conductor, "--gen") for g in gens]
    N = lcm(conductor, *(M.conductor for M in mats))
    try:
        pgens = [normalize(M.embed(N)) for M in mats]
        G = close(pgens, cap=cap, log=ctx.obj["log"])
        out = {
            'conductor': N,
            'order': G.order,
            'generator_orders': [proj_order(g, cap) for g in pgens],
        }
        if stats:
            out['order_statistics'] = order_statistics(G, cap)
    except CapExceeded as e:
        err(f"Group too large: {e}")
        exit(1)
    except Exception as e:
        err(f"Error computing closure: {e}")
        exit(1)
    dump(out)
