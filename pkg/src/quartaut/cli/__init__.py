"""Command-line interface for quartaut."""

import json
from functools import partial
from math import lcm
from typing import Union

from click import BadParameter, echo, group, option, pass_context

from ..atlas import CatalogId, form_catalog, matrix_catalog, to_jsonable
from ..forms import Form
from ..matrix import SquareMatrix
from ..parse import parse_form, parse_matrix

err = partial(echo, err=True)


def conductor_option(fn):
    return option("-N", "--conductor", default=1, type=int, help="Work over Q(ζ_N) (default: 1)")(fn)


def plain_option(fn):
    return option("-p", "--plain", is_flag=True, help="Print forms as human-readable text instead of JSON")(fn)


def dump(obj):
    """One JSON document on stdout."""
    echo(json.dumps(to_jsonable(obj), ensure_ascii=False))


def load_form(text: str, n: int, conductor: int, hint: str = "FORM") -> Form:
    """Form text in the grammar, or `@ID[:params]` from the catalog."""
    try:
        if text.startswith('@'):
            return form_catalog(CatalogId.parse(text[1:], conductor), conductor=conductor if conductor > 1 else None)
        return parse_form(text, n, conductor)
    except ValueError as e:
        raise BadParameter(str(e), param_hint=hint) from e


def load_matrix(text: str, conductor: int, hint: str = "MATRIX") -> SquareMatrix:
    """Matrix JSON (`{"entries": [[...]]}` or bare rows), or `@ID[:params]` from the catalog."""
    try:
        if text.startswith('@'):
            return matrix_catalog(CatalogId.parse(text[1:], conductor), conductor=conductor if conductor > 1 else None)
        return parse_matrix(text, conductor)
    except ValueError as e:
        raise BadParameter(str(e), param_hint=hint) from e


def align(*objs: Union[Form, SquareMatrix]) -> list:
    """Embed forms and matrices into their least common field."""
    N = lcm(*(o.conductor for o in objs))
    return [o.embed(N) for o in objs]


@group
@option("-v", "--verbose", is_flag=True, help="Log progress to stderr")
@pass_context
def main(ctx, verbose: bool):
    """quartaut - exact computations on quartic surfaces and their projective automorphism groups."""
    ctx.ensure_object(dict)
    ctx.obj["log"] = err if verbose else None


# Import subcommands to register them with the main group
from . import act, classify, closure, eigenspace, hessian, index_table, parse, singular, verify  # noqa: E402, F401


if __name__ == "__main__":
    main()
