"""Singular subcommand for quartaut CLI."""

from click import BadParameter, Choice, option

from . import conductor_option, dump, main
from ..atlas import split_args
from ..parse import parse_scalar
from ..singular import FAMILIES, FamilyParams, R_evaluate, family_is_singular, singular_witness


@main.command
@conductor_option
@option("-f", "--family", type=Choice(FAMILIES), required=True, help="F5 (μ,ν,λ), F7 (λ) or M (λ)")
@option("-P", "--params", required=True, help="Comma-separated parameters in the scalar syntax")
@option("-w", "--witness", is_flag=True, help="Also search for an explicit singular point")
def singular(conductor: int, family: str, params: str, witness: bool):
    """Decide whether a family member is singular.

    R is R(μ,ν,λ) for F5 and 256−λ⁴ for F7 and M; the surface is singular iff R = 0.

    \b
        quartaut singular --family F5 --params "0,0,4"
        quartaut singular -N 4 --family M --params "4*i" --witness
    """
    try:
        fp = FamilyParams(family, tuple(parse_scalar(p, conductor) for p in split_args(params)))
    except ValueError as e:
        raise BadParameter(str(e), param_hint="--params") from e
    if family == 'F5':
        R = R_evaluate(*fp.params)
    else:
        R = 256 - fp.params[0] ** 4
    out = {'singular': family_is_singular(fp), 'R': R}
    if witness:
        out['witness'] = singular_witness(fp)
    dump(out)
