"""Exact arithmetic in cyclotomic fields Q(ζ_N).

Elements are dense coefficient vectors over the power basis 1, ζ, …, ζ^{φ(N)−1},
reduced modulo the N-th cyclotomic polynomial. Coefficients are Python ints or
`Fraction`s, so every operation is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import Poly, QQ, Rational as SympyRational, Symbol, cyclotomic_poly, totient

Rational = Union[int, Fraction]

# Minimal conductor of each named constant
KNOWN_CONSTANTS = {
    'i': 4,
    'omega': 3,
    'sqrt2': 8,
    'sqrt3': 12,
    'sqrt5': 5,
    'sqrt_m7': 7,
}

_X = Symbol('x')


class ConductorError(ValueError):
    """Scalars from different cyclotomic fields were mixed, or a field is too small."""


@dataclass(frozen=True)
class FieldContext:
    """Q(ζ_N): conductor N, φ(N), and Φ_N as integer coefficients, lowest degree first."""
    conductor: int
    phi: int
    cyclotomic_poly: tuple[int, ...]

    def zeta(self, k: int = 1) -> 'CycScalar':
        return zeta_power(self, k)

    @property
    def zero(self) -> 'CycScalar':
        return CycScalar(self, (0,) * self.phi)

    @property
    def one(self) -> 'CycScalar':
        return CycScalar(self, (1,) + (0,) * (self.phi - 1))

    def lift(self, value: Union['CycScalar', Rational]) -> 'CycScalar':
        """Coerce an int, `Fraction` or same-field `CycScalar` into this field."""
        if isinstance(value, CycScalar):
            if value.ctx.conductor != self.conductor:
                raise ConductorError(f"Scalar has conductor {value.ctx.conductor}, expected {self.conductor}")
            return value
        if isinstance(value, (int, Fraction)):
            return CycScalar(self, (_canon(value),) + (0,) * (self.phi - 1))
        raise TypeError(f"Can't lift {type(value).__name__} into Q(ζ_{self.conductor})")

    def __repr__(self) -> str:
        return f"FieldContext(N={self.conductor})"


@lru_cache(maxsize=None)
def context_new(N: int) -> FieldContext:
    """Build (and cache) the context for Q(ζ_N)."""
    if N < 1:
        raise ValueError(f"Conductor must be positive, got {N}")
    coeffs = Poly(cyclotomic_poly(N, _X), _X).all_coeffs()
    phi = int(totient(N))
    poly = tuple(int(c) for c in reversed(coeffs))
    assert len(poly) == phi + 1 and poly[-1] == 1
    return FieldContext(conductor=N, phi=phi, cyclotomic_poly=poly)


def _canon(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _reduce(vec: list, ctx: FieldContext) -> tuple:
    """Reduce a coefficient list (lowest first) modulo the monic Φ_N."""
    phi = ctx.phi
    poly = ctx.cyclotomic_poly
    for k in range(len(vec) - 1, phi - 1, -1):
        c = vec[k]
        if not c:
            continue
        vec[k] = 0
        base = k - phi
        for i in range(phi):
            p = poly[i]
            if p:
                vec[base + i] -= c * p
    return tuple(_canon(c) for c in vec[:phi]) + (0,) * max(0, phi - len(vec))


@lru_cache(maxsize=None)
def _zeta_vector(N: int, k: int) -> tuple:
    ctx = context_new(N)
    k %= N
    vec = [0] * max(k + 1, ctx.phi)
    vec[k] = 1
    return _reduce(vec, ctx)


@lru_cache(maxsize=4096)
def _inverse_vector(N: int, coeffs: tuple) -> tuple:
    ctx = context_new(N)
    a = Poly([SympyRational(c.numerator, c.denominator) for c in reversed(coeffs)], _X, domain=QQ)
    m = Poly(list(reversed(ctx.cyclotomic_poly)), _X, domain=QQ)
    inv = a.invert(m).all_coeffs()
    out = [_canon(Fraction(int(c.p), int(c.q))) for c in reversed(inv)]
    return tuple(out) + (0,) * (ctx.phi - len(out))


class CycScalar:
    """An element of Q(ζ_N) in reduced power-basis form.

    Arithmetic with ints and `Fraction`s is implicit; arithmetic across conductors is an error,
    callers `embed` first.
    """
    __slots__ = ('ctx', 'coeffs')

    def __init__(self, ctx: FieldContext, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    @property
    def conductor(self) -> int:
        return self.ctx.conductor

    def _coerce(self, other) -> 'CycScalar':
        if isinstance(other, CycScalar):
            if other.ctx.conductor != self.ctx.conductor:
                raise ConductorError(f"Conductor mismatch: {self.ctx.conductor} vs {other.ctx.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.lift(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar(self.ctx, tuple(_canon(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> 'CycScalar':
        return CycScalar(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar(self.ctx, tuple(_canon(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.ctx, tuple(_canon(a * other) for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        nz_b = [(j, bj) for j, bj in enumerate(b) if bj]
        if not nz_b or not any(a):
            return self.ctx.zero
        prod = [0] * (2 * self.ctx.phi - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in nz_b:
                prod[i + j] += ai * bj
        return CycScalar(self.ctx, _reduce(prod, self.ctx))

    __rmul__ = __mul__

    def inverse(self) -> 'CycScalar':
        if not self:
            raise ZeroDivisionError("Inverse of zero in Q(ζ_N)")
        if self.is_rational():
            return self.ctx.lift(_canon(1 / Fraction(self.coeffs[0])))
        return CycScalar(self.ctx, _inverse_vector(self.ctx.conductor, self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("Division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> 'CycScalar':
        if k < 0:
            return self.inverse() ** -k
        result = self.ctx.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycScalar):
            return self.ctx.conductor == other.ctx.conductor and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.ctx.conductor, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Rational | None:
        return self.coeffs[0] if self.is_rational() else None

    def embed(self, M: int) -> 'CycScalar':
        return embed(self, M)

    def __repr__(self) -> str:
        from quartaut.parse import format_scalar
        return f"CycScalar({format_scalar(self)!r}, N={self.ctx.conductor})"


def zeta_power(ctx: FieldContext, k: int) -> CycScalar:
    """ζ_N^k, with k taken mod N."""
    return CycScalar(ctx, _zeta_vector(ctx.conductor, k))


def root_of_unity(ctx: FieldContext, order: int, k: int = 1) -> CycScalar:
    """ζ_order^k inside Q(ζ_N), for order | N."""
    if ctx.conductor % order:
        raise ConductorError(f"Q(ζ_{ctx.conductor}) has no primitive {order}-th root of unity")
    return zeta_power(ctx, k * (ctx.conductor // order))


def arith(a: CycScalar, b: CycScalar, op: str) -> CycScalar:
    """Apply one of 'add' | 'sub' | 'mul' | 'div'."""
    if a.ctx.conductor != b.ctx.conductor:
        raise ConductorError(f"Conductor mismatch: {a.ctx.conductor} vs {b.ctx.conductor}")
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise ValueError(f"Unknown op {op!r}")


def embed(a: CycScalar, M: int) -> CycScalar:
    """Map `a` into Q(ζ_M) via ζ_N ↦ ζ_M^{M/N}."""
    N = a.ctx.conductor
    if M == N:
        return a
    if M % N:
        raise ConductorError(f"Can't embed Q(ζ_{N}) into Q(ζ_{M}): {N} ∤ {M}")
    target = context_new(M)
    step = M // N
    vec = [0] * target.phi
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        for j, z in enumerate(_zeta_vector(M, i * step)):
            if z:
                vec[j] += c * z
    return CycScalar(target, tuple(_canon(c) for c in vec))


def known_constant(name: str, ctx: FieldContext) -> CycScalar:
    """One of `KNOWN_CONSTANTS`, embedded into `ctx`."""
    if name not in KNOWN_CONSTANTS:
        raise KeyError(f"Unknown constant {name!r}; expected one of {', '.join(KNOWN_CONSTANTS)}")
    base_N = KNOWN_CONSTANTS[name]
    if ctx.conductor % base_N:
        raise ConductorError(f"{name} needs a conductor divisible by {base_N}, got {ctx.conductor}")
    base = context_new(base_N)
    z = base.zeta
    if name == 'i' or name == 'omega':
        value = z(1)
    elif name == 'sqrt2' or name == 'sqrt3':
        value = z(1) + z(-1)
    elif name == 'sqrt5':
        value = 1 + 2 * z(1) + 2 * z(4)
    else:
        value = -z(1) - z(2) + z(3) - z(4) + z(5) + z(6)
    return embed(value, ctx.conductor)


@dataclass(frozen=True)
class QuadraticExtension:
    """K[s]/(s² − r) over a cyclotomic field K, for a non-square r ∈ K."""
    base: FieldContext
    radicand: CycScalar

    def __post_init__(self):
        if self.radicand.ctx.conductor != self.base.conductor:
            raise ConductorError("Radicand must lie in the base field")

    @property
    def sqrt(self) -> 'QuadScalar':
        return QuadScalar(self, self.base.zero, self.base.one)

    def lift(self, value) -> 'QuadScalar':
        if isinstance(value, QuadScalar):
            if value.ext != self:
                raise ConductorError("Elements of different quadratic extensions")
            return value
        return QuadScalar(self, self.base.lift(value), self.base.zero)


class QuadScalar:
    """a + b·s in a `QuadraticExtension`."""
    __slots__ = ('ext', 'a', 'b')

    def __init__(self, ext: QuadraticExtension, a: CycScalar, b: CycScalar):
        self.ext = ext
        self.a = a
        self.b = b

    def _coerce(self, other) -> 'QuadScalar':
        if isinstance(other, (QuadScalar, CycScalar, int, Fraction)):
            return self.ext.lift(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadScalar(self.ext, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> 'QuadScalar':
        return QuadScalar(self.ext, -self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadScalar(self.ext, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadScalar(self.ext, a * c + b * d * self.ext.radicand, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> 'QuadScalar':
        norm = self.a * self.a - self.b * self.b * self.ext.radicand
        if not norm:
            raise ZeroDivisionError("Inverse of zero in quadratic extension")
        inv = norm.inverse()
        return QuadScalar(self.ext, self.a * inv, -self.b * inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, k: int) -> 'QuadScalar':
        if k < 0:
            return self.inverse() ** -k
        result = self.ext.lift(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __repr__(self) -> str:
        return f"QuadScalar({self.a!r} + {self.b!r}·s)"
