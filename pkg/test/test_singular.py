"""Tests for `quartaut.singular` — discriminants, family criteria and critical points."""

from fractions import Fraction
from random import Random

import pytest

from quartaut.cyclofield import ConductorError, CycScalar, QuadScalar, context_new, root_of_unity
from quartaut.singular import (
    FamilyParams, R_evaluate, UniPoly, common_context, critical_point_check, detS_identity_check, f5_singular_points,
    family_form, family_is_singular, field_sqrt, poly_roots, resultant, singular_witness, sylvester, unipoly_gcd,
)

CTX1 = context_new(1)
CTX4 = context_new(4)
CTX5 = context_new(5)
SAMPLES = [Fraction(n, d) for n in range(-6, 7) for d in (1, 2, 3)]


def test_discriminant_slices():
    for lam in SAMPLES:
        assert R_evaluate(0, 0, lam) == 256 - lam ** 4
    for mu in SAMPLES:
        assert R_evaluate(mu, 0, 0) == 256 - 729 * mu ** 4


def test_discriminant_symmetric():
    rng = Random(1)
    for _ in range(20):
        mu, nu, lam = (Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3))
        assert R_evaluate(mu, nu, lam) == R_evaluate(nu, mu, lam)


def test_detS_identity():
    rng = Random(2)
    for _ in range(5):
        mu, nu, lam = (Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3))
        for y in (1, -1):
            assert detS_identity_check(mu, nu, lam, y)
    with pytest.raises(ValueError):
        detS_identity_check(0, 0, 0, 2)


def test_family_params():
    with pytest.raises(ValueError):
        FamilyParams('F6', (CTX1.lift(1),))
    with pytest.raises(ValueError):
        FamilyParams('F5', (CTX1.lift(1),))
    fp = FamilyParams('M', (CTX4.zeta(1),))
    assert fp.ctx.conductor == 4


def test_family_forms():
    f = family_form(FamilyParams('F7', (CTX1.lift(2),)))
    assert f.coeff((1, 1, 1, 1)) == 2
    assert f.coeff((0, 0, 0, 4)) == 1
    assert len(f.terms) == 5
    g = family_form(FamilyParams('F5', tuple(CTX1.lift(c) for c in (1, 0, 3))))
    assert len(g.terms) == 6


@pytest.mark.parametrize("family", ['F7', 'M'])
def test_lambda_criterion(family):
    i = CTX4.zeta(1)
    for k in range(4):
        lam = 4 * i ** k
        fp = FamilyParams(family, (lam,))
        assert family_is_singular(fp)
        point = singular_witness(fp)
        assert point is not None
        assert critical_point_check(family_form(fp), point)
    for lam in (0, 1, 3, 5, 12, 2 + 2 * i):
        fp = FamilyParams(family, (CTX4.lift(lam),))
        assert not family_is_singular(fp)
        assert singular_witness(fp) is None


def test_f5_criterion():
    assert family_is_singular(FamilyParams('F5', tuple(CTX1.lift(c) for c in (0, 0, 4))))
    assert not family_is_singular(FamilyParams('F5', tuple(CTX1.lift(c) for c in (0, 0, 1))))
    # 729μ⁴ = 256 has no rational root
    assert not family_is_singular(FamilyParams('F5', tuple(CTX1.lift(c) for c in (Fraction(2, 3), 0, 0))))
    assert family_is_singular(FamilyParams('F5', tuple(CTX1.lift(c) for c in (0, 0, -4))))


def test_critical_point_check():
    f = family_form(FamilyParams('M', (CTX1.lift(4),)))
    assert critical_point_check(f, (1, 1, -1, 1))
    assert not critical_point_check(f, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        critical_point_check(f, (0, 0, 0, 0))


def test_resultant_and_gcd():
    p = UniPoly([-1, 1], CTX1)
    q = UniPoly([-2, 1], CTX1)
    assert resultant(p, q) == -1
    assert sylvester(p, q).n == 2
    # (x−1)(x−2) and (x−1)(x+3)
    a = UniPoly([2, -3, 1], CTX1)
    b = UniPoly([-3, 2, 1], CTX1)
    assert unipoly_gcd(a, b) == UniPoly([-1, 1], CTX1)
    assert resultant(a, b) == 0
    with pytest.raises(ValueError):
        resultant(UniPoly([], CTX1), p)


def test_unipoly_divmod():
    a = UniPoly([2, -3, 1], CTX1)
    quot, rem = a.divmod(UniPoly([-1, 1], CTX1))
    assert quot == UniPoly([-2, 1], CTX1)
    assert rem.is_zero()
    assert a(2) == 0
    with pytest.raises(ZeroDivisionError):
        a.divmod(UniPoly([0], CTX1))


def test_common_context():
    assert common_context(1, Fraction(1, 2)).conductor == 1
    assert common_context(CTX4.zeta(1), 3).conductor == 4
    with pytest.raises(ConductorError):
        common_context(CTX4.zeta(1), context_new(5).zeta(1))


def test_f5_points_over_tenth_roots():
    fp = FamilyParams('F5', tuple(CTX1.lift(c) for c in (0, 0, 4)))
    ctx = context_new(10)
    points = f5_singular_points(fp)
    assert len(points) == 5
    assert {p[1] for p in points} == {root_of_unity(ctx, 5, k) for k in range(5)}
    assert all(critical_point_check(family_form(fp), p) for p in points)
    assert singular_witness(fp) == (-1, 1, -1, 1)


def test_f5_witness_from_quadratic_gcd():
    # h₂ = (z+2)(z²+z+1) and h₃ = (2z+1)(z²+z+1) at y = 1
    fp = FamilyParams('F5', tuple(CTX1.lift(c) for c in (1, 1, 3)))
    assert family_is_singular(fp)
    x, y, z, t = singular_witness(fp)
    assert isinstance(z, QuadScalar)
    assert z.ext.radicand == -3
    assert z * z + z + 1 == 0
    assert (x, y, t) == (z, 1, 1)
    assert critical_point_check(family_form(fp), (x, y, z, t))


def test_f5_witness_needs_no_extension_when_field_has_root():
    fp = FamilyParams('F5', tuple(context_new(3).lift(c) for c in (1, 1, 3)))
    points = f5_singular_points(fp)
    assert points
    assert all(isinstance(c, CycScalar) and c.conductor == 30 for p in points for c in p)
    assert {p[2] for p in points if p[1] == 1} == {root_of_unity(context_new(30), 3, k) for k in (1, 2)}


def test_field_sqrt():
    assert field_sqrt(CTX5.lift(5)) ** 2 == 5
    assert field_sqrt(context_new(3).lift(-12)) ** 2 == -12
    assert field_sqrt(CTX1.lift(Fraction(9, 4))) == Fraction(3, 2)
    assert field_sqrt(CTX5.lift(-3)) is None
    assert field_sqrt(CTX5.zeta(1)) ** 2 == CTX5.zeta(1)
    assert field_sqrt(CTX5.zeta(1) + 1) is None


def test_poly_roots():
    # (z−2)²(z+1)
    assert sorted(poly_roots(UniPoly([4, 0, -3, 1], CTX1)), key=lambda r: r.rational_value()) == [-1, 2]
    # (z−ζ)²(z+1)
    e = CTX5.zeta(1)
    assert poly_roots(UniPoly([e ** 2, e ** 2 - 2 * e, 1 - 2 * e, 1], CTX5)) == [e]
    assert poly_roots(UniPoly([3], CTX1)) == []
    assert set(poly_roots(UniPoly([-5, 0, 1], CTX5))) == {field_sqrt(CTX5.lift(5)), -field_sqrt(CTX5.lift(5))}
