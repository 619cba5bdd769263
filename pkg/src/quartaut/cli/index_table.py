"""Index-table subcommand for quartaut CLI."""

from typing import Optional

from click import BadParameter, option

from . import dump, main
from ..cyclofield import context_new
from ..eigenmod import checking_row, index_table as build_table, monomial_eigenspace, singularity_screen
from ..forms import Form
from ..parse import format_form


def parse_exps(text: str) -> list[int]:
    try:
        return [int(e) for e in text.split(',')]
    except ValueError as e:
        raise BadParameter(f"Expected comma-separated integers, got {text!r}", param_hint="--exps") from e


def monomial_text(m) -> str:
    return format_form(Form.monomial(m, context_new(1)))


@main.command("index-table")
@option("-q", "--q", "q", required=True, type=int, help="Order of ε")
@option("-e", "--exps", required=True, help="Exponents of diag[ε^{e_1},…,ε^{e_n}], comma-separated")
@option("-d", "--d", "d", default=4, type=int, help="Degree (default: 4)")
@option("-i", "--index", default=None, type=int, help="Also list the monomials of this index and the columns that screen them")
def index_table(q: int, exps: str, d: int, index: Optional[int]):
    """Indices of the singularity-checking monomials x_i·x_j^{d−1}, column by column.

    \b
        quartaut index-table --q 7 --exps 0,1,2,4 --d 4
        quartaut index-table --q 5 --exps 0,1,2,3 --index 1
    """
    if q < 2:
        raise BadParameter(f"q must be ≥ 2, got {q}", param_hint="--q")
    if d < 3:
        raise BadParameter(f"The screen needs d ≥ 3, got {d}", param_hint="--d")
    table = build_table(parse_exps(exps), q, d)
    row = checking_row(table)
    out = {
        'q': q,
        'd': d,
        'exps': list(table.exps),
        'columns': [monomial_text(m) for m, _ in row],
        'row': [i for _, i in row],
    }
    if index is not None:
        support = monomial_eigenspace(table, index)
        out['index'] = index % q
        out['eigenspace'] = [monomial_text(m) for m in support]
        out['screened_by'] = singularity_screen(support, table.n, d)
    dump(out)
