"""Parse subcommand for quartaut CLI."""

from click import BadParameter, Choice, argument, echo, option

from . import conductor_option, dump, load_form, load_matrix, main, plain_option
from ..parse import Node, format_form, format_scalar, parse_scalar, parse_tree


def tree_json(node: Node) -> dict:
    out = {'kind': node.kind, 'pos': node.pos}
    if node.value is not None:
        out['value'] = node.value
    if node.children:
        out['children'] = [tree_json(c) for c in node.children]
    return out


@main.command
@conductor_option
@option("-k", "--kind", type=Choice(["scalar", "form", "matrix", "tree"]), default="form", help="What TEXT denotes (default: form)")
@option("-n", "--nvars", default=4, type=int, help="Number of variables for forms (default: 4)")
@plain_option
@argument("text")
def parse(conductor: int, kind: str, nvars: int, plain: bool, text: str):
    """Parse TEXT and print it in canonical form.

    \b
        quartaut parse -N 5 -k scalar "(3+e(5,1)+e(5,4))/5"
        quartaut parse "x^3*y + y^3*z + z^3*x + t^4"
        quartaut parse -k matrix @B80
    """
    if kind == "form":
        f = load_form(text, nvars, conductor, "TEXT")
        if plain:
            echo(format_form(f, plain=True))
        else:
            dump({'n': f.n, 'd': f.d, 'conductor': f.conductor, 'form': f})
        return
    if kind == "matrix":
        dump(load_matrix(text, conductor, "TEXT"))
        return
    try:
        if kind == "tree":
            dump(tree_json(parse_tree(text)))
            return
        value = parse_scalar(text, conductor)
    except ValueError as e:
        raise BadParameter(str(e), param_hint="TEXT") from e
    if plain:
        echo(format_scalar(value))
    else:
        dump({'conductor': value.conductor, 'scalar': value})
