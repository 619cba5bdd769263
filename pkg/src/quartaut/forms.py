"""Sparse homogeneous polynomials over Q(ζ_N), and the linear-substitution action on them.

A `Form` maps exponent tuples to nonzero `CycScalar` coefficients. The action of a matrix is
`act(f, A)(x) = f(A⁻¹x)`, so `act(f, A @ B) == act(act(f, B), A)`.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union

from quartaut.cyclofield import ConductorError, CycScalar, FieldContext, context_new, embed
from quartaut.matrix import SquareMatrix, laplace_det

Monomial = tuple[int, ...]
VARIABLES = {
    3: ('x', 'y', 'z'),
    4: ('x', 'y', 'z', 't'),
}


class IndeterminateRatio(ValueError):
    """Both forms are zero, so every scalar relates them."""


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple[Monomial, ...]:
    """All degree-`d` monomials in `n` variables, in descending lexicographic order (x⁴ first)."""
    if n == 1:
        return ((d,),)
    return tuple(
        (a,) + rest
        for a in range(d, -1, -1)
        for rest in monomials(n - 1, d - a)
    )


def unit(i: int, n: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(n))


class Form:
    __slots__ = ('n', 'd', 'ctx', 'terms')

    def __init__(self, n: int, d: int, ctx: FieldContext, terms: dict[Monomial, CycScalar]):
        self.n = n
        self.d = d
        self.ctx = ctx
        clean = {}
        for m, c in terms.items():
            if len(m) != n:
                raise ValueError(f"Monomial {m} doesn't have {n} exponents")
            if sum(m) != d:
                raise ValueError(f"Monomial {m} has degree {sum(m)}, expected {d}")
            c = ctx.lift(c)
            if c:
                clean[m] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int, d: int, ctx: FieldContext) -> 'Form':
        return cls(n, d, ctx, {})

    @classmethod
    def monomial(cls, m: Monomial, ctx: FieldContext, coeff: Union[CycScalar, int, Fraction] = 1) -> 'Form':
        return cls(len(m), sum(m), ctx, {m: coeff})

    @classmethod
    def variable(cls, i: int, n: int, ctx: FieldContext) -> 'Form':
        return cls.monomial(unit(i, n), ctx)

    @classmethod
    def from_terms(cls, terms: dict[Monomial, CycScalar], n: int, ctx: FieldContext) -> 'Form':
        """Infer the degree from `terms`, which must be homogeneous."""
        degrees = {sum(m) for m, c in terms.items() if c}
        if len(degrees) > 1:
            raise ValueError(f"Polynomial is not homogeneous (degrees {sorted(degrees)})")
        d = degrees.pop() if degrees else 0
        return cls(n, d, ctx, {m: c for m, c in terms.items() if c})

    @property
    def conductor(self) -> int:
        return self.ctx.conductor

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, m: Monomial) -> CycScalar:
        return self.terms.get(m, self.ctx.zero)

    @property
    def support(self) -> list[Monomial]:
        return sorted(self.terms, reverse=True)

    def items(self) -> Iterator[tuple[Monomial, CycScalar]]:
        for m in self.support:
            yield m, self.terms[m]

    def _check(self, other: 'Form'):
        if other.n != self.n:
            raise ValueError(f"Variable count mismatch: {self.n} vs {other.n}")
        if other.ctx.conductor != self.ctx.conductor:
            raise ConductorError(f"Conductor mismatch: {self.conductor} vs {other.conductor}")

    def __add__(self, other: 'Form') -> 'Form':
        if not isinstance(other, Form):
            return NotImplemented
        self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        if other.d != self.d:
            raise ValueError(f"Degree mismatch: {self.d} vs {other.d}")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Form(self.n, self.d, self.ctx, terms)

    def __neg__(self) -> 'Form':
        return Form(self.n, self.d, self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: 'Form') -> 'Form':
        return self + (-other)

    def __mul__(self, other) -> 'Form':
        if isinstance(other, Form):
            self._check(other)
            terms: dict[Monomial, CycScalar] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    c = c1 * c2
                    terms[m] = terms[m] + c if m in terms else c
            return Form(self.n, self.d + other.d, self.ctx, terms)
        c = self.ctx.lift(other)
        if not c:
            return Form.zero(self.n, self.d, self.ctx)
        return Form(self.n, self.d, self.ctx, {m: a * c for m, a in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c) -> 'Form':
        return self * (1 / self.ctx.lift(c))

    def __pow__(self, k: int) -> 'Form':
        result = Form.monomial((0,) * self.n, self.ctx)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.n == other.n
            and self.ctx.conductor == other.ctx.conductor
            and (self.d == other.d or not self.terms)
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.ctx.conductor, frozenset(self.terms.items())))

    def embed(self, M: int) -> 'Form':
        return Form(self.n, self.d, context_new(M), {m: embed(c, M) for m, c in self.terms.items()})

    def __repr__(self) -> str:
        from quartaut.parse import format_form
        return f"Form({format_form(self)!r}, N={self.conductor})"


def linear_forms(M: SquareMatrix) -> list[Form]:
    """The rows of M as linear forms: L_i = Σ_j M[i,j]·x_j."""
    return [
        Form(M.n, 1, M.ctx, {unit(j, M.n): a for j, a in enumerate(row) if a})
        for row in M.rows
    ]


def substitute_direct(f: Form, M: SquareMatrix) -> Form:
    """g(x) = f(Mx)."""
    if M.n != f.n:
        raise ValueError(f"Matrix is {M.n}×{M.n} but form has {f.n} variables")
    if M.conductor != f.conductor:
        raise ConductorError(f"Conductor mismatch: form {f.conductor}, matrix {M.conductor}")
    n = f.n
    ctx = f.ctx
    if not f.terms:
        return f
    lin = linear_forms(M)
    one = Form.monomial((0,) * n, ctx)
    powers: dict[tuple[int, int], Form] = {}

    def power(i: int, k: int) -> Form:
        if k == 0:
            return one
        key = (i, k)
        if key not in powers:
            powers[key] = power(i, k - 1) * lin[i]
        return powers[key]

    # products over leading variables, shared between monomials with a common prefix
    prefixes: dict[Monomial, Form] = {(): one}

    def prefix(e: Monomial) -> Form:
        if e not in prefixes:
            head = prefix(e[:-1])
            k = e[-1]
            prefixes[e] = head * power(len(e) - 1, k) if k else head
        return prefixes[e]

    terms: dict[Monomial, CycScalar] = {}
    for m, c in f.items():
        for mm, cc in prefix(m).terms.items():
            v = c * cc
            terms[mm] = terms[mm] + v if mm in terms else v
    return Form(n, f.d, ctx, terms)


def act(f: Form, A: SquareMatrix) -> Form:
    """f_A(x) = f(A⁻¹x)."""
    return substitute_direct(f, A.inverse())


def partials(f: Form) -> list[Form]:
    if f.d < 1:
        raise ValueError("Partial derivatives need degree ≥ 1")
    out = []
    for i in range(f.n):
        terms = {}
        for m, c in f.terms.items():
            if m[i]:
                mm = tuple(e - 1 if k == i else e for k, e in enumerate(m))
                terms[mm] = c * m[i]
        out.append(Form(f.n, f.d - 1, f.ctx, terms))
    return out


def hessian(f: Form) -> Form:
    """det of the matrix of second partials; degree n·(d−2)."""
    if f.d < 2:
        raise ValueError("Hessian needs degree ≥ 2")
    second = [partials(g) for g in partials(f)]
    zero = Form.zero(f.n, f.n * (f.d - 2), f.ctx)
    return laplace_det(second, zero)


def proportionality(f: Form, g: Form) -> Optional[CycScalar]:
    """λ with f = λ·g, or None if the forms are not proportional."""
    f._check(g)
    if not f.terms and not g.terms:
        raise IndeterminateRatio("Both forms are zero")
    if f.terms.keys() != g.terms.keys():
        return None
    if f.d != g.d:
        raise ValueError(f"Degree mismatch: {f.d} vs {g.d}")
    m0 = f.support[0]
    ratio = f.terms[m0] / g.terms[m0]
    for m, c in f.terms.items():
        if c != ratio * g.terms[m]:
            return None
    return ratio


def evaluate(f: Form, point: Sequence):
    """f(P) for a point of scalars (ints, `CycScalar`s, or elements of an extension field)."""
    if len(point) != f.n:
        raise ValueError(f"Point has {len(point)} coordinates, form has {f.n} variables")
    total = f.ctx.zero
    for m, c in f.terms.items():
        term = c
        for p, e in zip(point, m):
            if e:
                term = term * (p ** e)
        total = total + term
    return total


def linear_combination(coeffs: Iterable[CycScalar], forms: Iterable[Form]) -> Form:
    total = None
    for c, f in zip(coeffs, forms):
        total = f * c if total is None else total + f * c
    if total is None:
        raise ValueError("Empty linear combination")
    return total
