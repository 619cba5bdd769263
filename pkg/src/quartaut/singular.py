"""Singularity criteria: univariate resultants, the discriminant R = R₀² − R₁² of the
f^{μ,ν,λ} family, closed-form criteria for the g^λ and M^λ families, and critical-point checks.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import lcm
from typing import Optional, Sequence, Union

from sympy import Poly, QQ, Rational as SympyRational, Symbol, integer_nthroot

from quartaut.cyclofield import (
    ConductorError, CycScalar, FieldContext, QuadraticExtension, QuadScalar, context_new, known_constant, root_of_unity,
)
from quartaut.forms import Form, evaluate, partials
from quartaut.matrix import SquareMatrix, bareiss_det

Scalar = Union[CycScalar, int, Fraction]
FAMILIES = ('F5', 'F7', 'M')
_Z = Symbol('z')


def _sqrt_m3(ctx: FieldContext) -> CycScalar:
    return 1 + 2 * known_constant('omega', ctx)


# (conductor, r, √r): √r lies in Q(ζ_N) whenever the conductor divides N
QUADRATIC_UNITS = (
    (4, -1, partial(known_constant, 'i')),
    (3, -3, _sqrt_m3),
    (8, 2, partial(known_constant, 'sqrt2')),
    (12, 3, partial(known_constant, 'sqrt3')),
    (5, 5, partial(known_constant, 'sqrt5')),
    (7, -7, partial(known_constant, 'sqrt_m7')),
)


def common_context(*values) -> FieldContext:
    """The field shared by every `CycScalar` among `values` (Q if there are none)."""
    conductors = {v.conductor for v in values if isinstance(v, CycScalar)}
    if len(conductors) > 1:
        raise ConductorError(f"Scalars have mixed conductors {sorted(conductors)}")
    return context_new(conductors.pop() if conductors else 1)


class UniPoly:
    """A univariate polynomial over Q(ζ_N), coefficients lowest degree first, trailing zeros trimmed."""
    __slots__ = ('ctx', 'coeffs')

    def __init__(self, coeffs: Sequence[Scalar], ctx: FieldContext):
        cs = [ctx.lift(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> CycScalar:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Scalar) -> CycScalar:
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __sub__(self, other: 'UniPoly') -> 'UniPoly':
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (self.ctx.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (self.ctx.zero,) * (n - len(other.coeffs))
        return UniPoly([x - y for x, y in zip(a, b)], self.ctx)

    def divmod(self, other: 'UniPoly') -> tuple['UniPoly', 'UniPoly']:
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        rem = list(self.coeffs)
        quot = [self.ctx.zero] * max(0, len(rem) - other.degree)
        inv = other.leading.inverse()
        for k in range(len(rem) - 1, other.degree - 1, -1):
            c = rem[k] * inv
            if not c:
                continue
            shift = k - other.degree
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
        return UniPoly(quot, self.ctx), UniPoly(rem[:other.degree] if other.degree else [], self.ctx)

    def monic(self) -> 'UniPoly':
        inv = self.leading.inverse()
        return UniPoly([c * inv for c in self.coeffs], self.ctx)

    def derivative(self) -> 'UniPoly':
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.ctx)

    def __repr__(self) -> str:
        from quartaut.parse import format_scalar
        return f"UniPoly([{', '.join(format_scalar(c) for c in self.coeffs)}])"


def unipoly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def sylvester_matrix(p_high: Sequence[CycScalar], q_high: Sequence[CycScalar], ctx: FieldContext) -> list[list[CycScalar]]:
    """Sylvester matrix of two coefficient lists given highest degree first, degrees taken from their lengths."""
    m = len(p_high) - 1
    n = len(q_high) - 1
    size = m + n
    rows = []
    for shift in range(n):
        rows.append([ctx.zero] * shift + [ctx.lift(c) for c in p_high] + [ctx.zero] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([ctx.zero] * shift + [ctx.lift(c) for c in q_high] + [ctx.zero] * (size - shift - n - 1))
    return rows


def sylvester(p: UniPoly, q: UniPoly) -> SquareMatrix:
    rows = sylvester_matrix(p.coeffs[::-1], q.coeffs[::-1], p.ctx)
    return SquareMatrix(len(rows), p.ctx, tuple(tuple(r) for r in rows))


def resultant(p: UniPoly, q: UniPoly) -> CycScalar:
    """det of the Sylvester matrix, by Bareiss elimination."""
    if p.is_zero() or q.is_zero():
        raise ValueError("Resultant of the zero polynomial")
    if p.ctx.conductor != q.ctx.conductor:
        raise ConductorError(f"Conductor mismatch: {p.ctx.conductor} vs {q.ctx.conductor}")
    return bareiss_det(sylvester_matrix(p.coeffs[::-1], q.coeffs[::-1], p.ctx), p.ctx)


def R0(u: Scalar, v: Scalar, w: Scalar):
    return 16 - 18 * (u + v) * w + 48 * u**2 * v**2 + 20 * u * v * w**2


def R1(u: Scalar, v: Scalar, w: Scalar):
    return (
        27 * (u**2 + v**2) + 6 * u * v - w**2 - 36 * (u + v) * u * v * w + (u + v) * w**3
        - 16 * u**3 * v**3 + 8 * u**2 * v**2 * w**2 - u * v * w**4
    )


def R_evaluate(mu: Scalar, nu: Scalar, lam: Scalar) -> CycScalar:
    """R(μ,ν,λ) = R₀² − R₁²; f^{μ,ν,λ} is singular iff this vanishes."""
    ctx = common_context(mu, nu, lam)
    mu, nu, lam = (ctx.lift(s) for s in (mu, nu, lam))
    r0 = R0(mu, nu, lam)
    r1 = R1(mu, nu, lam)
    return r0 * r0 - r1 * r1


@dataclass(frozen=True)
class FamilyParams:
    family: str  # 'F5' | 'F7' | 'M'
    params: tuple[CycScalar, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"Unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        want = 3 if self.family == 'F5' else 1
        if len(self.params) != want:
            raise ValueError(f"{self.family} takes {want} parameter(s), got {len(self.params)}")
        ctx = common_context(*self.params)
        object.__setattr__(self, 'params', tuple(ctx.lift(p) for p in self.params))

    @property
    def ctx(self) -> FieldContext:
        return self.params[0].ctx


def family_form(fp: FamilyParams) -> Form:
    """f^{μ,ν,λ} = x³y+y³z+z³t+t³x+μx²z²+νy²t²+λxyzt; g^λ = x³y+y³z+z³x+t⁴+λxyzt; M^λ = x⁴+y⁴+z⁴+t⁴+λxyzt."""
    ctx = fp.ctx
    if fp.family == 'F5':
        mu, nu, lam = fp.params
        terms = {(3, 1, 0, 0): 1, (0, 3, 1, 0): 1, (0, 0, 3, 1): 1, (1, 0, 0, 3): 1,
                 (2, 0, 2, 0): mu, (0, 2, 0, 2): nu, (1, 1, 1, 1): lam}
    elif fp.family == 'F7':
        terms = {(3, 1, 0, 0): 1, (0, 3, 1, 0): 1, (1, 0, 3, 0): 1, (0, 0, 0, 4): 1, (1, 1, 1, 1): fp.params[0]}
    else:
        terms = {(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1, (0, 0, 0, 4): 1, (1, 1, 1, 1): fp.params[0]}
    return Form(4, 4, ctx, terms)


def family_is_singular(fp: FamilyParams) -> bool:
    if fp.family == 'F5':
        return not R_evaluate(*fp.params)
    lam = fp.params[0]
    return lam**4 == 256


def _point_conductor(point: Sequence) -> int:
    M = 1
    for c in point:
        if isinstance(c, CycScalar):
            M = lcm(M, c.conductor)
        elif isinstance(c, QuadScalar):
            M = lcm(M, c.ext.base.conductor)
    return M


def critical_point_check(f: Form, point: Sequence) -> bool:
    """Whether every partial derivative of f vanishes at `point`.

    The form is carried into the field of the point's coordinates when that field is larger.
    """
    if not any(bool(c) for c in point):
        raise ValueError("The zero vector is not a projective point")
    M = lcm(f.conductor, _point_conductor(point))
    if M != f.conductor:
        f = f.embed(M)
    point = tuple(c.embed(M) if isinstance(c, CycScalar) else c for c in point)
    return all(evaluate(g, point) == 0 for g in partials(f))


def h2_h3(mu: CycScalar, nu: CycScalar, lam: CycScalar, y: CycScalar) -> tuple[UniPoly, UniPoly]:
    """h₂ = z³+λy⁴z²+3y³z+2νy² and h₃ = 2μz³+3y⁴z²+λy⁸z+y⁷, as polynomials in z."""
    ctx = y.ctx
    h2 = UniPoly([2 * nu * y**2, 3 * y**3, lam * y**4, 1], ctx)
    h3 = UniPoly([y**7, lam * y**8, 3 * y**4, 2 * mu], ctx)
    return h2, h3


def _tenth_roots(ctx: FieldContext) -> list[CycScalar]:
    return [root_of_unity(ctx, 10, k) for k in range(10)]


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, num_exact = integer_nthroot(q.numerator, 2)
    den, den_exact = integer_nthroot(q.denominator, 2)
    return Fraction(int(num), int(den)) if num_exact and den_exact else None


def _rational_field_sqrt(q: Fraction, ctx: FieldContext) -> Optional[CycScalar]:
    root = _rational_sqrt(q)
    if root is not None:
        return ctx.lift(root)
    for base_N, square, unit in QUADRATIC_UNITS:
        if ctx.conductor % base_N:
            continue
        root = _rational_sqrt(q / square)
        if root is not None:
            return unit(ctx) * root
    return None


def field_sqrt(a: CycScalar) -> Optional[CycScalar]:
    """A square root of `a` inside its own field, when `a` is a root of unity times a rational.

    The rational part is rooted with the quadratic constants the field contains. None when no root was found.
    """
    ctx = a.ctx
    for k in range(ctx.conductor):
        b = a * ctx.zeta(-2 * k)
        if not b.is_rational():
            continue
        root = _rational_field_sqrt(Fraction(b.rational_value()), ctx)
        if root is not None:
            return root * ctx.zeta(k)
    return None


def _quadratic_roots(g: UniPoly) -> list:
    """Both roots of a monic quadratic, in the working field when its discriminant is a square there, else in K(√disc)."""
    c, b = g.coeffs[0], g.coeffs[1]
    disc = b * b - 4 * c
    if not disc:
        return [-b / 2]
    s = field_sqrt(disc)
    if s is None:
        s = QuadraticExtension(g.ctx, disc).sqrt
    return [(-b + s) / 2, (-b - s) / 2]


def _rational_factors(g: UniPoly) -> list[UniPoly]:
    """The monic irreducible factors of a polynomial with rational coefficients, over Q."""
    coeffs = [Fraction(c.rational_value()) for c in reversed(g.coeffs)]
    poly = Poly([SympyRational(c.numerator, c.denominator) for c in coeffs], _Z, domain=QQ)
    _, factors = poly.factor_list()
    return [
        UniPoly([Fraction(int(c.p), int(c.q)) for c in reversed(h.all_coeffs())], g.ctx).monic()
        for h, _ in factors
    ]


def poly_roots(g: UniPoly) -> list:
    """Roots of a gcd of degree ≤ 3 that can be written down exactly.

    Rational polynomials are factored over Q first. Quadratics always give both roots; a cubic over a
    larger field only gives its repeated root, if it has one.
    """
    if g.degree < 1:
        return []
    if g.degree == 1:
        return [-g.coeffs[0] / g.coeffs[1]]
    if all(c.is_rational() for c in g.coeffs):
        factors = _rational_factors(g)
        if len(factors) > 1 or factors[0].degree < g.degree:
            return [z for h in factors for z in poly_roots(h)]
    g = g.monic()
    if g.degree == 2:
        return _quadratic_roots(g)
    if g.degree == 3:
        d = unipoly_gcd(g, g.derivative())
        if d.degree == 1:
            return [-d.coeffs[0]]
        if d.degree == 2:
            return [-g.coeffs[2] / 3]
    return []


def f5_singular_points(fp: FamilyParams) -> list[tuple]:
    """Every singular point (y³z, y, z, 1) of f^{μ,ν,λ} with y¹⁰ = 1 and z a root of gcd(h₂, h₃) found by `poly_roots`.

    Points live over Q(ζ_M), M = lcm(10, N), or a quadratic extension of it.
    """
    if fp.family != 'F5':
        raise ValueError(f"Expected the F5 family, got {fp.family!r}")
    M = lcm(10, fp.ctx.conductor)
    ctx = context_new(M)
    mu, nu, lam = (p.embed(M) for p in fp.params)
    f = family_form(fp).embed(M)
    points = []
    for y in _tenth_roots(ctx):
        g = unipoly_gcd(*h2_h3(mu, nu, lam, y))
        for z in poly_roots(g):
            point = (y**3 * z, y, z, ctx.one)
            if z and critical_point_check(f, point):
                points.append(point)
    return points


def singular_witness(fp: FamilyParams) -> Optional[tuple]:
    """An explicit singular point of the family form, when one can be written down.

    F5 points come from `f5_singular_points`, so their coordinates may lie in a larger field than the
    parameters. None means no point was found ("criterion-only").
    """
    if fp.family in ('F7', 'M'):
        lam = fp.params[0]
        if lam**4 != 256:
            return None
        c = -4 / lam
        return (1, 1, 1, c) if fp.family == 'F7' else (1, 1, c, 1)
    points = f5_singular_points(fp)
    return points[0] if points else None


def detS_identity_check(mu: Scalar, nu: Scalar, lam: Scalar, y: Scalar) -> bool:
    """Build the 6×6 Sylvester matrix S of h₂, h₃ in z, and compare det S with 4y·(R₀ + y⁵R₁)."""
    ctx = common_context(mu, nu, lam, y)
    mu, nu, lam, y = (ctx.lift(s) for s in (mu, nu, lam, y))
    if y**10 != 1:
        raise ValueError("y must be a 10th root of unity")
    delta = y**5
    p_high = [1, lam * y**4, 3 * y**3, 2 * nu * y**2]
    q_high = [2 * mu, 3 * y**4, lam * y**8, y**7]
    det = bareiss_det(sylvester_matrix(p_high, q_high, ctx), ctx)
    return det == 4 * y * (R0(mu, nu, lam) + delta * R1(mu, nu, lam))
