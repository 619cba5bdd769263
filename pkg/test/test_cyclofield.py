"""Tests for `quartaut.cyclofield` — exact arithmetic in Q(ζ_N)."""

from fractions import Fraction
from random import Random

import pytest

from quartaut.cyclofield import (
    ConductorError, QuadraticExtension, arith, context_new, embed, known_constant, root_of_unity,
)

SEED = 20240917


def rand_scalar(rng: Random, ctx):
    return sum(
        (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) * ctx.zeta(k) for k in range(ctx.phi)),
        ctx.zero,
    )


def test_context_degrees():
    assert [context_new(N).phi for N in (1, 3, 4, 5, 7, 8, 12, 20, 120)] == [1, 2, 2, 4, 6, 4, 4, 8, 32]
    assert context_new(5).cyclotomic_poly == (1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        context_new(0)


def test_roots_of_unity():
    ctx = context_new(5)
    z = ctx.zeta
    assert z(5) == 1
    assert z(1) ** 5 == 1
    assert z(1) + z(2) + z(3) + z(4) == -1
    assert z(-1) == z(4)
    assert z(1) * z(4) == ctx.one
    ctx20 = context_new(20)
    assert root_of_unity(ctx20, 5) == ctx20.zeta(4)
    assert root_of_unity(ctx20, 4, 3) == ctx20.zeta(15)
    with pytest.raises(ConductorError):
        root_of_unity(ctx, 7)


@pytest.mark.parametrize("name,N,square", [
    ('i', 4, -1),
    ('sqrt2', 8, 2),
    ('sqrt3', 12, 3),
    ('sqrt5', 5, 5),
    ('sqrt_m7', 7, -7),
    ('sqrt5', 60, 5),
    ('i', 120, -1),
])
def test_known_constants(name, N, square):
    c = known_constant(name, context_new(N))
    assert c * c == square
    assert not c.is_rational()


def test_omega():
    w = known_constant('omega', context_new(3))
    assert w ** 3 == 1
    assert w != 1
    assert 1 + w + w * w == 0


def test_known_constant_errors():
    with pytest.raises(ConductorError):
        known_constant('i', context_new(5))
    with pytest.raises(KeyError):
        known_constant('pi', context_new(4))


def test_field_axioms():
    rng = Random(SEED)
    for N in (5, 7, 12):
        ctx = context_new(N)
        for _ in range(10):
            a, b, c = (rand_scalar(rng, ctx) for _ in range(3))
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a - a == ctx.zero
            if a:
                assert a * a.inverse() == 1
                assert (b / a) * a == b


def test_rational_coercion():
    ctx = context_new(7)
    a = ctx.zeta(2)
    assert 3 * a == a + a + a
    assert a / 2 == a * Fraction(1, 2)
    assert 1 - a == -(a - 1)
    assert (2 / a) * a == 2
    assert ctx.lift(Fraction(4, 2)).coeffs[0] == 2
    assert isinstance(ctx.lift(Fraction(4, 2)).coeffs[0], int)


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        context_new(5).zero.inverse()


def test_conductor_mismatch():
    a = context_new(5).zeta(1)
    b = context_new(7).zeta(1)
    with pytest.raises(ConductorError):
        a + b
    with pytest.raises(ConductorError):
        arith(a, b, 'mul')


def test_arith_ops():
    ctx = context_new(5)
    a, b = ctx.zeta(1), ctx.zeta(2)
    assert arith(a, b, 'add') == a + b
    assert arith(a, b, 'div') == ctx.zeta(4)
    with pytest.raises(ValueError):
        arith(a, b, 'pow')


def test_embed():
    rng = Random(SEED)
    ctx5 = context_new(5)
    a, b = rand_scalar(rng, ctx5), rand_scalar(rng, ctx5)
    assert embed(a * b, 20) == embed(a, 20) * embed(b, 20)
    assert embed(a + b, 60) == embed(a, 60) + embed(b, 60)
    assert embed(ctx5.zeta(1), 20) == context_new(20).zeta(4)
    assert embed(known_constant('sqrt5', ctx5), 20) == known_constant('sqrt5', context_new(20))
    with pytest.raises(ConductorError):
        embed(a, 12)


def test_hash_consistency():
    ctx = context_new(5)
    assert hash(ctx.lift(3)) == hash(3)
    assert len({ctx.zeta(1), ctx.zeta(6), ctx.zeta(2)}) == 2


def test_quadratic_extension():
    ctx = context_new(20)
    r = known_constant('sqrt5', ctx) - 2
    ext = QuadraticExtension(ctx, r)
    u = ext.sqrt
    assert u * u == r
    assert u * u.inverse() == 1
    assert (1 + u) * (1 - u) == 1 - r
    assert u ** 4 + 4 * u ** 2 - 1 == 0
    with pytest.raises(ZeroDivisionError):
        ext.lift(0).inverse()
    with pytest.raises(ConductorError):
        QuadraticExtension(ctx, context_new(5).lift(2))
