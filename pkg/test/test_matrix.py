"""Tests for `quartaut.matrix` — square matrices over Q(ζ_N)."""

from random import Random

import pytest

from quartaut.cyclofield import ConductorError, context_new, known_constant
from quartaut.matrix import SingularMatrixError, SquareMatrix, bareiss_det, laplace_det, nullspace, rank, rref

CTX5 = context_new(5)
CTX4 = context_new(4)


def rand_matrix(rng: Random, ctx, n: int = 4) -> SquareMatrix:
    return SquareMatrix.of([
        [rng.randint(-3, 3) * ctx.zeta(rng.randrange(ctx.conductor)) for _ in range(n)]
        for _ in range(n)
    ], ctx)


def test_from_columns():
    # [e3,e1,e2,e4] sends e1 to e3
    M = SquareMatrix.from_columns([3, 1, 2, 4], CTX5)
    assert M.apply([1, 0, 0, 0]) == (0, 0, 1, 0)
    assert M.rows[2][0] == 1
    i = known_constant('i', CTX4)
    S = SquareMatrix.from_columns([2, 1, 3, 4], CTX4, [i, -i, 1, 1])
    assert S.rows[1][0] == i
    assert S.rows[0][1] == -i
    with pytest.raises(ValueError):
        SquareMatrix.from_columns([1, 1, 2, 3], CTX5)


def test_not_square():
    with pytest.raises(ValueError):
        SquareMatrix.of([[1, 2], [3]], CTX5)


def test_det():
    assert SquareMatrix.of([[1, 2], [3, 4]], CTX5).det() == -2
    assert SquareMatrix.identity(4, CTX5).det() == 1
    z = CTX5.zeta
    D = SquareMatrix.diag([1, z(1), z(2), z(4)], CTX5)
    assert D.det() == z(7)
    assert SquareMatrix.from_columns([2, 1, 3, 4], CTX5).det() == -1
    assert SquareMatrix.of([[1, 2], [2, 4]], CTX5).det() == 0


def test_bareiss_matches_laplace():
    rng = Random(7)
    for _ in range(5):
        M = rand_matrix(rng, CTX5)
        assert bareiss_det([list(r) for r in M.rows], CTX5) == laplace_det(M.rows, CTX5.zero)


def test_inverse_and_powers():
    rng = Random(11)
    M = rand_matrix(rng, CTX4)
    while not M.det():
        M = rand_matrix(rng, CTX4)
    E = SquareMatrix.identity(4, CTX4)
    assert M @ M.inverse() == E
    assert M.inverse() @ M == E
    assert M ** 0 == E
    assert M ** 3 == M @ M @ M
    assert M ** -2 == (M @ M).inverse()
    assert (M @ M).det() == M.det() ** 2


def test_singular_inverse():
    with pytest.raises(SingularMatrixError):
        SquareMatrix.of([[1, 2], [2, 4]], CTX5).inverse()


def test_scalar_value():
    assert SquareMatrix.identity(3, CTX5).scale(7).scalar_value() == 7
    assert SquareMatrix.diag([1, 2, 1], CTX5).scalar_value() is None
    assert SquareMatrix.identity(3, CTX5).is_identity()


def test_conductor_mismatch():
    with pytest.raises(ConductorError):
        SquareMatrix.identity(2, CTX5) @ SquareMatrix.identity(2, CTX4)


def test_embed():
    z = CTX5.zeta
    D = SquareMatrix.diag([1, z(1), z(2), z(4)], CTX5)
    D20 = D.embed(20)
    assert D20.conductor == 20
    assert D20.rows[1][1] == context_new(20).zeta(4)
    assert D20 ** 5 == SquareMatrix.identity(4, context_new(20))


def test_rref_and_nullspace():
    rows = [[CTX5.lift(v) for v in r] for r in ([1, 2, 3], [2, 4, 6], [1, 0, 1])]
    reduced, pivots = rref(rows)
    assert pivots == [0, 1]
    assert rank(rows) == 2
    (vec,) = nullspace(rows, 3, CTX5)
    assert vec == (-1, -1, 1)
    for r in rows:
        assert sum((a * b for a, b in zip(r, vec)), CTX5.zero) == 0
    assert len(nullspace([], 3, CTX5)) == 3
