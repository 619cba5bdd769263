"""Classify subcommand for quartaut CLI."""

from typing import Optional

from click import BadParameter, option, pass_context

from . import dump, main
from .index_table import parse_exps
from ..eigenmod import CyclicClassLabel, class_representatives, classify_cyclic, invariant_screen_report, is_prime_power


def label_json(label: CyclicClassLabel) -> dict:
    return {'class': label.name, 'kind': label.kind, 'params': list(label.params), 'exps': list(label.exps)}


@main.command
@pass_context
@option("-q", "--q", "q", required=True, type=int, help="Prime-power order of the cyclic group")
@option("-e", "--exps", default=None, help="Exponents of a diagonal generator, comma-separated (default: list every class)")
@option("-s", "--screen", is_flag=True, help="Run the column screen over every class and eigenspace")
@option("-d", "--d", "d", default=4, type=int, help="Degree for --screen (default: 4)")
def classify(ctx, q: int, exps: Optional[str], screen: bool, d: int):
    """Conjugacy class of ⟨diag[ε^{e_1},…,ε^{e_4}]⟩ in PGL₄, with ord(ε) = Q.

    \b
        quartaut classify --q 7 --exps 3,1,0,0
        quartaut classify --q 5
        quartaut classify --q 7 --screen
    """
    if is_prime_power(q) is None:
        raise BadParameter(f"q must be a prime power ≥ 2, got {q}", param_hint="--q")
    if screen:
        if d < 3:
            raise BadParameter(f"The screen needs d ≥ 3, got {d}", param_hint="--d")
        dump(invariant_screen_report(q, d, log=ctx.obj["log"]).to_json())
        return
    if exps is None:
        reps = class_representatives(q)
        dump({'q': q, 'count': len(reps), 'classes': [label_json(lab) for lab in reps]})
        return
    try:
        label = classify_cyclic(q, parse_exps(exps))
    except ValueError as e:
        raise BadParameter(str(e), param_hint="--exps") from e
    dump(label_json(label))
