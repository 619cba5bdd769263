"""Tests for `quartaut.forms` — homogeneous forms, substitution and Hessians."""

from fractions import Fraction

import pytest

from quartaut.atlas import form_catalog, matrix_catalog
from quartaut.cyclofield import ConductorError, context_new
from quartaut.forms import (
    Form, IndeterminateRatio, act, evaluate, hessian, linear_combination, monomials, partials, proportionality,
    substitute_direct,
)
from quartaut.matrix import SquareMatrix
from quartaut.parse import parse_form

CTX1 = context_new(1)
CTX5 = context_new(5)


def test_monomials():
    ms = monomials(4, 4)
    assert len(ms) == 35
    assert ms[0] == (4, 0, 0, 0)
    assert ms[1] == (3, 1, 0, 0)
    assert ms[-1] == (0, 0, 0, 4)
    assert len(monomials(3, 6)) == 28


def test_form_validation():
    with pytest.raises(ValueError):
        Form(4, 4, CTX1, {(3, 0, 0, 0): 1})
    with pytest.raises(ValueError):
        Form(4, 4, CTX1, {(4, 0, 0): 1})
    f = Form(4, 4, CTX1, {(4, 0, 0, 0): 0, (0, 4, 0, 0): 2})
    assert f.support == [(0, 4, 0, 0)]


def test_arithmetic():
    f = parse_form('x^3*y + t^4')
    g = parse_form('x^3*y - t^4')
    assert f + g == parse_form('2*x^3*y')
    assert f - f == 0
    assert (f * 0).is_zero()
    assert parse_form('x + y') ** 2 == parse_form('x^2 + 2*x*y + y^2')
    assert f / 2 * 2 == f
    with pytest.raises(ValueError):
        f + parse_form('x^2')


def test_substitute_permutation():
    f = parse_form('x^3*y')
    # [e2,e1,e3,e4]: Mx = (y, x, z, t)
    M = SquareMatrix.from_columns([2, 1, 3, 4], CTX1)
    assert substitute_direct(f, M) == parse_form('y^3*x')


def test_substitute_linear():
    M = SquareMatrix.of([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], CTX1)
    assert substitute_direct(parse_form('x^2*z*t'), M) == parse_form('x^2*z*t + 2*x*y*z*t + y^2*z*t')


def test_act_contravariance():
    f = parse_form('x^3*y + y^3*z + z^3*t + t^3*x + 2*x*y*z*t', 4, 5)
    z = CTX5.zeta
    A = SquareMatrix.diag([1, z(1), z(2), z(4)], CTX5)
    B = SquareMatrix.from_columns([3, 1, 2, 4], CTX5)
    C = SquareMatrix.of([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]], CTX5)
    assert act(act(f, A), B) == act(f, B @ A)
    assert act(act(f, C), A) == act(f, A @ C)
    assert act(f, A.inverse()) == substitute_direct(f, A)


def test_conductor_mismatch():
    with pytest.raises(ConductorError):
        substitute_direct(parse_form('x^4', 4, 5), SquareMatrix.identity(4, context_new(7)))


def test_partials_and_evaluate():
    f = parse_form('x^3*y + y^3*z + z^3*x', 3)
    fx, fy, fz = partials(f)
    assert fx == parse_form('3*x^2*y + z^3', 3)
    assert fz == parse_form('y^3 + 3*z^2*x', 3)
    assert evaluate(f, (1, 2, 3)) == 2 + 24 + 27
    with pytest.raises(ValueError):
        evaluate(f, (1, 2))


def test_hessian_fermat():
    assert hessian(parse_form('x^4 + y^4 + z^4 + t^4')) == parse_form('20736*x^2*y^2*z^2*t^2')


def test_hessian_klein():
    f = form_catalog('klein')
    H = hessian(f)
    assert H == parse_form('270*x^2*y^2*z^2 - 54*(x*y^5 + x^5*z + y*z^5)', 3)
    assert proportionality(H, form_catalog('klein_h1')) == -54


def test_hessian_order80():
    assert proportionality(hessian(form_catalog('F80')), form_catalog('h80')) == 81


def test_hessian_m_lambda():
    for lam in (0, 1, 12, -3, Fraction(5, 2)):
        H = hessian(form_catalog('M', [lam]))
        assert H == form_catalog('g_fermat', [Fraction(lam, 12)]) * 12 ** 4


def test_hessian_covariance():
    f = parse_form('x^3*y + y^3*z + z^3*t + t^3*x + 3*x^2*z^2', 4, 5)
    A = matrix_catalog('A5', conductor=5) @ SquareMatrix.from_columns([2, 3, 4, 1], CTX5)
    assert hessian(substitute_direct(f, A)) == substitute_direct(hessian(f), A) * A.det() ** 2


def test_proportionality():
    f = parse_form('x^4 + 2*y^4')
    assert proportionality(f * 3, f) == 3
    assert proportionality(f, parse_form('x^4 + 3*y^4')) is None
    assert proportionality(f, parse_form('x^4')) is None
    with pytest.raises(IndeterminateRatio):
        proportionality(f * 0, f * 0)


def test_linear_combination():
    fs = [parse_form('x^4'), parse_form('y^4')]
    assert linear_combination([CTX1.lift(2), CTX1.lift(-1)], fs) == parse_form('2*x^4 - y^4')
    with pytest.raises(ValueError):
        linear_combination([], [])
