"""Tests for `quartaut.projgroup` — PGL_n elements, closures and orbits."""

import pytest

from quartaut.atlas import matrix_catalog
from quartaut.cyclofield import ConductorError, context_new
from quartaut.matrix import SingularMatrixError, SquareMatrix
from quartaut.projgroup import (
    CapExceeded, closure, intersection_size, is_normal, normalize, order_statistics, point_key, point_orbit, proj_order,
    subgroup_of,
)

CTX1 = context_new(1)
CTX5 = context_new(5)


def perm(cols, ctx=CTX1):
    return normalize(SquareMatrix.from_columns(cols, ctx))


@pytest.fixture(scope="module")
def s4():
    return closure([perm([2, 1, 3, 4]), perm([2, 3, 4, 1])])


@pytest.fixture(scope="module")
def a4():
    return closure([perm([2, 3, 1, 4]), perm([1, 3, 4, 2])])


def test_normalize_scalars():
    z = CTX5.zeta
    M = SquareMatrix.of([[0, 2, 0], [3, 0, 0], [0, 0, z(1)]], CTX5)
    g = normalize(M)
    assert g.rep.rows[0][1] == 1
    assert normalize(M.scale(z(3))) == g
    assert normalize(SquareMatrix.identity(3, CTX5).scale(7)).is_identity()
    with pytest.raises(SingularMatrixError):
        normalize(SquareMatrix.of([[1, 1], [1, 1]], CTX5))


def test_proj_order():
    z = CTX5.zeta
    assert proj_order(normalize(SquareMatrix.diag([1, z(1), z(2), z(4)], CTX5))) == 5
    # ζ·E is trivial in PGL
    assert proj_order(normalize(SquareMatrix.diag([z(1)] * 4, CTX5))) == 1
    assert proj_order(perm([2, 3, 4, 1])) == 4
    with pytest.raises(CapExceeded):
        proj_order(perm([2, 3, 4, 1]), cap=3)


def test_group_ops():
    g = perm([2, 3, 4, 1])
    assert (g ** -1 @ g).is_identity()
    assert g ** 4 == g ** 0
    h = perm([2, 1, 3, 4])
    assert h.conjugate(g) == g @ h @ g.inverse()


def test_closure_s4(s4):
    assert s4.order == 24
    assert s4.elements[0].is_identity()
    assert order_statistics(s4) == {1: 1, 2: 9, 3: 8, 4: 6}
    assert all(a @ b in s4 for a in s4.generators for b in s4)


def test_closure_cap():
    with pytest.raises(CapExceeded):
        closure([perm([2, 1, 3, 4]), perm([2, 3, 4, 1])], cap=10)


def test_closure_errors():
    with pytest.raises(ValueError):
        closure([])
    with pytest.raises(ConductorError):
        closure([perm([2, 1, 3, 4]), perm([2, 1, 3, 4], CTX5)])


def test_normality(s4, a4):
    assert a4.order == 12
    assert is_normal(a4, s4)
    t = closure([perm([2, 1, 3, 4])])
    assert t.order == 2
    assert not is_normal(t, s4)
    assert intersection_size(a4, t) == 1
    assert intersection_size(a4, s4) == 12
    with pytest.raises(ValueError):
        is_normal(s4, a4)


def test_subgroup_of(a4):
    H = subgroup_of(a4.elements)
    assert H.order == 12
    assert H.keys == a4.keys


def test_order80():
    B = normalize(matrix_catalog('B80'))
    C = normalize(matrix_catalog('C80', conductor=20))
    assert proj_order(B) == 20
    assert proj_order(C) == 4
    assert closure([B, C]).order == 80


def test_order80_generators():
    gB = normalize(matrix_catalog('B80'))
    gBp = normalize(matrix_catalog('B80_prime'))
    assert gBp != gB
    assert gBp == gB ** 17
    assert gBp in closure([gB])
    assert proj_order(gBp) == proj_order(gB) == 20


def test_point_key():
    p = tuple(CTX5.lift(c) for c in (0, 2, 4, 6))
    assert point_key(p) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        point_key((CTX5.zero,) * 4)


def test_point_orbit():
    gens = [SquareMatrix.from_columns([2, 1, 3, 4], CTX1), SquareMatrix.from_columns([2, 3, 4, 1], CTX1)]
    e1 = tuple(CTX1.lift(c) for c in (1, 0, 0, 0))
    assert len(point_orbit(gens, e1)) == 4
    e12 = tuple(CTX1.lift(c) for c in (1, 1, 0, 0))
    assert len(point_orbit(gens, e12)) == 6
    ones = tuple(CTX1.lift(1) for _ in range(4))
    assert point_orbit(gens, ones) == [ones]
