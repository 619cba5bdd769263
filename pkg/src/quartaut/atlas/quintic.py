"""Forms and matrices with an order-5 symmetry: the f^{μ,ν,λ} family, the S₅ representations and their normal forms."""

from fractions import Fraction
from random import Random

from quartaut.cyclofield import CycScalar, FieldContext, known_constant, root_of_unity
from quartaut.eigenmod import eigenspace_basis, forms_rank
from quartaut.forms import Form, proportionality, substitute_direct
from quartaut.matrix import SquareMatrix
from quartaut.parse import parse_form, parse_matrix, parse_scalar
from quartaut.projgroup import closure, normalize, proj_order
from quartaut.singular import FamilyParams, R_evaluate, critical_point_check, detS_identity_check, family_form, singular_witness

from .registry import Checker, check, form, form_catalog, matrix, matrix_catalog


def _names(ctx: FieldContext, **extra) -> dict:
    return {'eps': root_of_unity(ctx, 5), **extra}


def _int(p: CycScalar) -> int:
    v = p.rational_value()
    if v is None or int(v) != v:
        raise ValueError(f"Expected an integer parameter, got {p!r}")
    return int(v)


# Forms

@form('F0')
def F0(ctx):
    """x³y+y³z+z³t+t³x+3xyzt"""
    return parse_form('x^3*y + y^3*z + z^3*t + t^3*x + 3*x*y*z*t', 4, ctx.conductor)


@form('F1')
def F1(ctx):
    """x²z²+y²t²+2xyzt"""
    return parse_form('x^2*z^2 + y^2*t^2 + 2*x*y*z*t', 4, ctx.conductor)


@form('F5', params=('mu', 'nu', 'lam'))
def F5(ctx, mu, nu, lam):
    """f^{μ,ν,λ} = x³y+y³z+z³t+t³x+μx²z²+νy²t²+λxyzt"""
    return family_form(FamilyParams('F5', (mu, nu, lam)))


@form('h0', conductor=60)
def h0(ctx):
    return parse_form(
        '-x^4 + 2*sqrt3*sqrt5*(y^3 + z^3 + t^3)*x + 10*(z^3 + t^3)*y + 13*x^2*y^2 + 5*z^2*t^2'
        ' + (26*x^2 - 6*sqrt3*sqrt5*x*y + 20*y^2)*z*t',
        4, ctx.conductor,
    )


@form('h1')
def h1(ctx):
    """(x²+y²+2zt)²"""
    return parse_form('x^4 + y^4 + 2*x^2*y^2 + 4*z^2*t^2 + 4*(x^2 + y^2)*z*t', 4, ctx.conductor)


@form('f0', conductor=24)
def f0(ctx):
    return parse_form(
        'x^4 + y^4 + 2*sqrt3*(-x^3*y + y^3*x) + 2*sqrt2*sqrt3*(z^3*x + t^3*y) + 2*sqrt2*(-z^3*y + t^3*x)'
        ' + 6*(x^2*y^2 + z^2*t^2) + 6*sqrt3*(-x^2 + y^2)*z*t - 12*x*y*z*t',
        4, ctx.conductor,
    )


@form('f1', conductor=24)
def f1(ctx):
    return parse_form(
        'x^4 - y^4 + 2/sqrt3*(x^3*y + y^3*x) + 2*sqrt2/sqrt3*(z^3*x - t^3*y) + 2*sqrt2*(z^3*y + t^3*x)'
        ' + 2*sqrt3*(x^2 + y^2)*z*t',
        4, ctx.conductor,
    )


@form('f0p', conductor=12)
def f0p(ctx):
    """f′₀ = x³y−y³z+z³t+t³x−(√3/2)(x²z²+y²t²)"""
    return parse_form('x^3*y - y^3*z + z^3*t + t^3*x - sqrt3/2*x^2*z^2 - sqrt3/2*y^2*t^2', 4, ctx.conductor)


@form('f1p', conductor=12)
def f1p(ctx):
    """f′₁ = x³y+y³z+z³t−t³x+√3(x²z²−y²t²)+3√3xyzt"""
    return parse_form('x^3*y + y^3*z + z^3*t - t^3*x + sqrt3*x^2*z^2 - sqrt3*y^2*t^2 + 3*sqrt3*x*y*z*t', 4, ctx.conductor)


# Matrices

@matrix('A5', conductor=5)
def A5(ctx):
    """diag[ε,ε²,ε⁴,ε³]"""
    return parse_matrix([['eps', 0, 0, 0], [0, 'eps^2', 0, 0], [0, 0, 'eps^4', 0], [0, 0, 0, 'eps^3']], ctx.conductor, _names(ctx))


@matrix('tau_12345', conductor=5)
def tau_12345(ctx):
    return A5(ctx)


@matrix('tau_12', conductor=5)
def tau_12(ctx):
    """The image of a transposition after diagonalizing the 5-cycle; η = (3+ε+ε⁴)/5."""
    eta = (3 + root_of_unity(ctx, 5, 1) + root_of_unity(ctx, 5, 4)) / 5
    rows = [
        ['eta', '2*eta-1', '-eta+1', '-2*eta+1'],
        ['2*eta-1', '-eta+1', '-2*eta+1', 'eta'],
        ['-eta+1', '-2*eta+1', 'eta', '2*eta-1'],
        ['-2*eta+1', 'eta', '2*eta-1', '-eta+1'],
    ]
    return parse_matrix(rows, ctx.conductor, {'eta': eta})


@matrix('D_l', conductor=5, params=('l',))
def D_l(ctx, l):
    """diag[1,1,ε,ε^ℓ] with ε of order 5"""
    eps = root_of_unity(ctx, 5)
    return SquareMatrix.diag([1, 1, eps, eps ** _int(l)], ctx)


@matrix('D_jl', conductor=5, params=('j', 'l'))
def D_jl(ctx, j, l):
    """diag[1,ε,ε^j,ε^ℓ] with ε of order 5"""
    eps = root_of_unity(ctx, 5)
    return SquareMatrix.diag([1, eps, eps ** _int(j), eps ** _int(l)], ctx)


@matrix('rho_t1')
def rho_t1(ctx):
    """Standard representation of S₅ on x₁+⋯+x₅ = 0, basis e_j − e_5: the transposition (12)."""
    return SquareMatrix.from_columns([2, 1, 3, 4], ctx)


@matrix('rho_s1')
def rho_s1(ctx):
    return SquareMatrix.from_columns([2, 3, 1, 4], ctx)


@matrix('rho_s123')
def rho_s123(ctx):
    return SquareMatrix.of([[-1, -1, -1, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], ctx)


@matrix('T5', conductor=5)
def T5(ctx):
    """[ε^{−ij}], i,j ∈ 1..4"""
    return SquareMatrix.of([[root_of_unity(ctx, 5, -i * j) for j in range(1, 5)] for i in range(1, 5)], ctx)


@matrix('S5', conductor=5)
def S5(ctx):
    """T·diag[ε⁴,ε³,ε²,ε]·[e1,e2,e4,e3]; conjugates the 5-cycle to τ₁₂₃₄₅."""
    eps = root_of_unity(ctx, 5)
    return T5(ctx) @ SquareMatrix.diag([eps ** 4, eps ** 3, eps ** 2, eps], ctx) @ SquareMatrix.from_columns([1, 2, 4, 3], ctx)


@matrix('R11', conductor=3)
def R11(ctx):
    return parse_matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 'w', 0], [0, 0, 0, 'w^2']], ctx.conductor)


@matrix('R12')
def R12(ctx):
    return parse_matrix([
        [1, 0, 0, 0],
        [0, '-1/3', '2/3', '2/3'],
        [0, '2/3', '-1/3', '2/3'],
        [0, '2/3', '2/3', '-1/3'],
    ], ctx.conductor)


@matrix('R13', conductor=60)
def R13(ctx):
    s15 = 'sqrt3*sqrt5/4'
    return parse_matrix([['-1/4', s15, 0, 0], [s15, '1/4', 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], ctx.conductor)


@matrix('R14')
def R14(ctx):
    """[e1,e2,e4,e3]"""
    return SquareMatrix.from_columns([1, 2, 4, 3], ctx)


@matrix('R21', conductor=3)
def R21(ctx):
    return R11(ctx)


@matrix('R22', conductor=24)
def R22(ctx):
    a, b = '1/sqrt3', 'sqrt2/sqrt3'
    return parse_matrix([[a, 0, 0, b], [0, f'-{a}', b, 0], [0, b, a, 0], [b, 0, 0, f'-{a}']], ctx.conductor)


@matrix('R23', conductor=12)
def R23(ctx):
    return parse_matrix([['sqrt3/2', '1/2', 0, 0], ['1/2', '-sqrt3/2', 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], ctx.conductor)


@matrix('R24')
def R24(ctx):
    return SquareMatrix.of([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], ctx)


E_LAMBDA = (
    'sqrt2*sqrt3*(1 + w*lam - 2*w*lam^2)',
    'sqrt2*(-3 + (2 + w)*lam)',
    '2*((1 - w)*lam + 3*w*lam^2 - 3*w*lam^3)',
    '2*sqrt3*(1 - 2*lam + lam^2)',
)


@matrix('S120', conductor=120)
def S120(ctx):
    """Columns e_λ for λ = −ε, −ε², −ε³, −ε⁴: eigenvectors of R21·R22·R23."""
    cols = []
    for k in range(1, 5):
        lam = -root_of_unity(ctx, 5, k)
        cols.append([parse_scalar(e, ctx.conductor, {'lam': lam}) for e in E_LAMBDA])
    return SquareMatrix.of([list(row) for row in zip(*cols)], ctx)


ALPHA = 'eps^2 + eps^4 + w*(-1 + eps^4)'
BETA = '(3 + 2*eps - eps^2 - 2*eps^3 + w*(2 + eps^3 + 2*eps^4))/sqrt3'
GAMMA = '(-2*eps - 4*eps^2 - 3*eps^3 + w*(3 + 2*eps - 2*eps^2 - 3*eps^3))/sqrt3'


@matrix('S_prime', conductor=120)
def S_prime(ctx):
    """S·diag[α,β,γ,1]·[e1,e2,e4,e3]"""
    names = _names(ctx)
    T = parse_matrix([[ALPHA, 0, 0, 0], [0, BETA, 0, 0], [0, 0, GAMMA, 0], [0, 0, 0, 1]], ctx.conductor, names)
    return S120(ctx) @ T @ R14(ctx)


@matrix('R24_prime', conductor=60)
def R24_prime(ctx):
    a = 'sqrt3*(eps^2 - eps^3)/5'
    b = '(1 + 2*eps^3 + 2*eps^4)/5'
    c = 'sqrt3*(eps - eps^4)/5'
    d = '(1 + 2*eps^2 + 2*eps^4)/5'
    e = '(1 + 2*eps + 2*eps^2)/5'
    rows = [
        [a, b, c, d],
        [b, f'-{c}', d, a],
        [c, d, f'-{a}', e],
        [d, a, e, c],
    ]
    return parse_matrix(rows, ctx.conductor, _names(ctx))


@matrix('T0_stretch', conductor=480)
def T0_stretch(ctx):
    """diag[α,α⁻³,−α⁹,−α⁻²⁷] with α⁸⁰ = −1."""
    a = root_of_unity(ctx, 160)
    return SquareMatrix.diag([a, a ** -3, -(a ** 9), -(a ** -27)], ctx)


@matrix('T1_stretch', conductor=480)
def T1_stretch(ctx):
    """diag[α,α⁻³,α⁹,α⁻²⁷] with α⁸⁰ = −1."""
    a = root_of_unity(ctx, 160)
    return SquareMatrix.diag([a, a ** -3, a ** 9, a ** -27], ctx)


# Checks

def _fixed(f: Form, M: SquareMatrix) -> bool:
    """f_{M⁻¹} = f"""
    return substitute_direct(f, M) == f


@check('vandermonde-inverses', conductor=35, aliases=('lemma_3_8',))
def vandermonde_inverses(c: Checker):
    """Inverse formulas for [δ^{ij}] and [δ^{(i−1)(j−1)}] at p = 5, 7, and (U − I)T = 5E."""
    ctx = c.ctx
    for p in (5, 7):
        d = root_of_unity(ctx, p)
        A = SquareMatrix.of([[d ** (i * j) for j in range(1, p)] for i in range(1, p)], ctx)
        B = SquareMatrix.of([[d ** (-i * j) for j in range(1, p)] for i in range(1, p)], ctx)
        C = SquareMatrix.of([[1] * (p - 1) for _ in range(p - 1)], ctx)
        c.expect(A @ (B - C) == SquareMatrix.identity(p - 1, ctx).scale(p), f"A(B−C) = {p}E at p={p}")
        V = SquareMatrix.of([[d ** (i * j) for j in range(p)] for i in range(p)], ctx)
        W = SquareMatrix.of([[d ** (-i * j) for j in range(p)] for i in range(p)], ctx).scale(ctx.lift(1) / p)
        c.expect((V @ W).is_identity(), f"[δ^(i−1)(j−1)] inverse at p={p}")
    U = SquareMatrix.of([[root_of_unity(ctx, 5, i * j) for j in range(1, 5)] for i in range(1, 5)], ctx)
    I = SquareMatrix.of([[1] * 4 for _ in range(4)], ctx)
    c.expect((U - I) @ matrix_catalog('T5', conductor=ctx.conductor) == SquareMatrix.identity(4, ctx).scale(5), "(U − I)T = 5E")


@check('quintic-discriminant', aliases=('lemma_3_3', 'lemma_3_4', 'lemma_3_5', 'lemma_3_6'))
def quintic_discriminant(c: Checker):
    """Specializations of R = R₀² − R₁² on a rational grid, and explicit singular points on the zero locus."""
    grid = [Fraction(k, 3) for k in range(-7, 8)]
    samples = 0
    ok = {'mu00': True, 'lam00': True, 'mu0lam': True, 'nu0lam': True, 'munu0': True}
    for a in grid:
        ok['mu00'] &= R_evaluate(a, 0, 0) == 256 - 729 * a ** 4
        ok['lam00'] &= R_evaluate(0, 0, a) == 256 - a ** 4
        for b in grid:
            lhs = (16 - 18 * a * b) ** 2 - (27 * a ** 2 - b ** 2 + a * b ** 3) ** 2
            ok['mu0lam'] &= R_evaluate(a, 0, b) == lhs
            ok['nu0lam'] &= R_evaluate(0, a, b) == lhs
            ok['munu0'] &= R_evaluate(a, b, 0) == 256 * (1 + 3 * a ** 2 * b ** 2) ** 2 - (27 * a ** 2 + 6 * a * b + 27 * b ** 2 - 16 * a ** 3 * b ** 3) ** 2
            samples += 1
    c.record('samples', samples)
    c.expect(ok['mu00'], "R(μ,0,0) = 256 − 729μ⁴")
    c.expect(ok['lam00'], "R(0,0,λ) = 256 − λ⁴")
    c.expect(ok['mu0lam'], "R(μ,0,λ) = (16−18μλ)² − (27μ²−λ²+μλ³)²")
    c.expect(ok['nu0lam'], "R(0,ν,λ) = (16−18νλ)² − (27ν²−λ²+νλ³)²")
    c.expect(ok['munu0'], "R(μ,ν,0) = 256(1+3μ²ν²)² − (27μ²+6μν+27ν²−16μ³ν³)²")
    for lam in (4, -4):
        fp = FamilyParams('F5', (c.ctx.lift(0), c.ctx.lift(0), c.ctx.lift(lam)))
        point = singular_witness(fp)
        c.record(f'witness_lam{lam}', list(point) if point else None)
        c.expect(point is not None and critical_point_check(family_form(fp), point), f"f^(0,0,{lam}) has a rational singular point")


@check('quintic-resultant', conductor=10, aliases=('thm_3_7',))
def quintic_resultant(c: Checker):
    """det of the Sylvester matrix of h₂, h₃ equals 4y(R₀ + y⁵R₁) for random rational triples and every y with y¹⁰ = 1."""
    rng = Random(37)
    ctx = c.ctx
    roots = [root_of_unity(ctx, 10, k) for k in range(10)]
    passed = 0
    for _ in range(25):
        mu, nu, lam = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        for y in roots:
            passed += detS_identity_check(mu, nu, lam, y)
    c.record('cases', 250)
    c.record('passed', passed)
    c.expect(passed == 250, "det S = 4y(R₀ + y⁵R₁) in every case")


@check('quintic-invariance', conductor=5, aliases=('lemma_3_9',))
def quintic_invariance(c: Checker):
    """F_{i,τ⁻¹} = F_i for i ∈ {0,1} and τ ∈ {τ₁₂, τ₁₂₃₄₅}."""
    N = c.ctx.conductor
    forms = {'F0': form_catalog('F0', conductor=N), 'F1': form_catalog('F1', conductor=N)}
    for tau in ('tau_12', 'tau_12345'):
        M = matrix_catalog(tau, conductor=N)
        for name, f in forms.items():
            c.expect(_fixed(f, M), f"{name} fixed by {tau}")


@check('quintic-conjugation', conductor=5, aliases=('lemma_3_9_conjugation', 'thm_3_10'))
def quintic_conjugation(c: Checker):
    """S diagonalizes the 5-cycle of the standard S₅ representation; the transposition lands on τ₁₂."""
    N = c.ctx.conductor
    S = matrix_catalog('S5', conductor=N)
    S_inv = S.inverse()
    s123 = matrix_catalog('rho_s123', conductor=N)
    t1 = matrix_catalog('rho_t1', conductor=N)
    c.expect(S_inv @ s123 @ S == matrix_catalog('tau_12345', conductor=N), "S⁻¹ρ(s₁s₂s₃)S = τ₁₂₃₄₅")
    c.expect(S_inv @ t1 @ S == matrix_catalog('tau_12', conductor=N), "S⁻¹ρ(t₁)S = τ₁₂")
    orders = {k: proj_order(normalize(matrix_catalog(k, conductor=N))) for k in ('rho_t1', 'rho_s1', 'rho_s123')}
    c.record('orders', orders)
    c.expect(orders == {'rho_t1': 2, 'rho_s1': 3, 'rho_s123': 5}, "projective orders 2, 3, 5")
    G = closure([normalize(matrix_catalog(k, conductor=N)) for k in ('tau_12', 'tau_12345')], log=c.log)
    c.record('order', G.order)
    c.expect(G.order == 120, "⟨τ₁₂, τ₁₂₃₄₅⟩ has order 120")
    basis = eigenspace_basis([matrix_catalog('tau_12', conductor=N), matrix_catalog('tau_12345', conductor=N)], [1, 1], 4, 4, c.log)
    c.record('invariant_dimension', len(basis))
    F = [form_catalog('F0', conductor=N), form_catalog('F1', conductor=N)]
    c.expect(forms_rank(basis + F) == len(basis), "F0, F1 lie in the invariant space")


@check('maschke-eigenspace', conductor=60, aliases=('r1_eigenspace',))
def maschke_eigenspace(c: Checker):
    """Form_{4,4}(R11,R12,R13,R14;1,1,1,1) = ⟨h0,h1⟩."""
    N = c.ctx.conductor
    gens = [matrix_catalog(k, conductor=N) for k in ('R11', 'R12', 'R13', 'R14')]
    basis = eigenspace_basis(gens, [1, 1, 1, 1], 4, 4, c.log)
    c.record('dimension', len(basis))
    c.expect(len(basis) == 2, "invariant space is 2-dimensional")
    for name in ('h0', 'h1'):
        f = form_catalog(name, conductor=N)
        c.expect(forms_rank(basis + [f]) == len(basis), f"{name} is invariant")


@check('r2-eigenspaces', conductor=24, aliases=('r2_eigenspace',))
def r2_eigenspaces(c: Checker):
    """⟨f0,f1⟩ is the R21–R23 invariant space; R24 splits it into f0 (sign +1) and f1 (sign −1)."""
    N = c.ctx.conductor
    gens = [matrix_catalog(k, conductor=N) for k in ('R21', 'R22', 'R23', 'R24')]
    f0_, f1_ = form_catalog('f0', conductor=N), form_catalog('f1', conductor=N)
    three = eigenspace_basis(gens[:3], [1, 1, 1], 4, 4, c.log)
    c.record('dimension_R21_R23', len(three))
    c.expect(forms_rank(three + [f0_, f1_]) == len(three), "f0, f1 lie in the R21–R23 invariant space")
    for sign, f, name in ((1, f0_, 'f0'), (-1, f1_, 'f1')):
        basis = eigenspace_basis(gens, [1, 1, 1, sign], 4, 4, c.log)
        c.record(f'dimension_sign{sign:+d}', len(basis))
        c.expect(len(basis) == 1, f"R24 eigenvalue {sign:+d} space is 1-dimensional")
        if basis:
            c.constant(f'{name}_ratio', proportionality(f, basis[0]))


V_ENTRIES = [
    ['-2*eps-eps^3-2*eps^4', '-9*eps-5*eps^3-6*eps^4+w*(-3-3*eps-4*eps^3)', '-3-5*eps^2-2*eps^4+w*(4+4*eps+7*eps^3)', '1-eps^3+w*(1+eps-2*eps^3)'],
    ['-3-2*eps^3-5*eps^4+w*(4+7*eps+4*eps^2)', '-eps-2*eps^2-2*eps^3', '1-eps+w*(1-2*eps+eps^2)', '-5*eps-9*eps^2-6*eps^3+w*(-3-4*eps-3*eps^2)'],
    ['-6*eps^2-9*eps^3-5*eps^4+w*(-3-3*eps^3-4*eps^4)', '1-eps^4+w*(1+eps^3-2*eps^4)', '-2*eps^2-2*eps^3-eps^4', '-3-5*eps-2*eps^2+w*(4+4*eps^3+7*eps^4)'],
    ['1-eps^2+w*(1-2*eps^2+eps^4)', '-3-2*eps-5*eps^3+w*(4+7*eps^2+4*eps^4)', '-6*eps-5*eps^2-9*eps^4+w*(-3-4*eps^2-3*eps^4)', '-2*eps-eps^2-2*eps^4'],
]
W_ENTRIES = [
    ['3*eps^2-3*eps^3', '1-eps+2*eps^2-2*eps^3+w*(2*eps+2*eps^2+eps^4)', '2-7*eps+6*eps^2-6*eps^3+w*(11*eps^2-7*eps^3+11*eps^4)', '3-3*eps+w*(6+3*eps^2+6*eps^4)'],
    ['2-6*eps-7*eps^2+6*eps^4+w*(-7*eps+11*eps^3+11*eps^4)', '-3*eps+3*eps^4', '3-3*eps^2+w*(6+6*eps^3+3*eps^4)', '1-2*eps-eps^2+2*eps^4+w*(2*eps^2+eps^3+2*eps^4)'],
    ['1+2*eps-eps^3-2*eps^4+w*(2*eps+eps^2+2*eps^3)', '3-3*eps^3+w*(6+3*eps+6*eps^2)', '3*eps-3*eps^4', '2+6*eps-7*eps^3-6*eps^4+w*(11*eps+11*eps^2-7*eps^4)'],
    ['3-3*eps^4+w*(6+6*eps+3*eps^3)', '2-6*eps^2+6*eps^3-7*eps^4+w*(11*eps-7*eps^2+11*eps^3)', '1-2*eps^2+2*eps^3-eps^4+w*(eps+2*eps^3+2*eps^4)', '-3*eps^2+3*eps^3'],
]
# (row, col) of the letters used in the product identities, 0-based
LETTERS = {
    'u': (0, 1), 'v': (0, 2), 'w': (0, 3),
    'x': (1, 0), 'l': (1, 2), 'm': (1, 3),
    'y': (2, 0), 'p': (2, 1), 'n': (2, 3),
    'z': (3, 0), 'q': (3, 1), 'r': (3, 2),
}


@check('quintic-diagonalization', conductor=120, aliases=('lemma_3_11', 'lemma_3_12'))
def quintic_diagonalization(c: Checker):
    """U = R21R22R23 has U⁵ = −E; S = [e_{−ε},…,e_{−ε⁴}] diagonalizes it; entries of V = S⁻¹R21S and W = S⁻¹R24S."""
    ctx = c.ctx
    N = ctx.conductor
    names = _names(ctx)
    U = matrix_catalog('R21', conductor=N) @ matrix_catalog('R22', conductor=N) @ matrix_catalog('R23', conductor=N)
    c.expect((U ** 5).scalar_value() == -1, "U⁵ = −E")
    S = matrix_catalog('S120', conductor=N)
    S_inv = S.inverse()
    eps = names['eps']
    c.expect(S_inv @ U @ S == SquareMatrix.diag([-eps, -eps ** 2, -eps ** 3, -eps ** 4], ctx), "S⁻¹US = −diag[ε,ε²,ε³,ε⁴]")
    V = (S_inv @ matrix_catalog('R21', conductor=N) @ S).scale(5)
    W = (S_inv @ matrix_catalog('R24', conductor=N) @ S).scale(5 * known_constant('sqrt3', ctx))
    c.expect(V == parse_matrix(V_ENTRIES, N, names), "5V matches the displayed entries")
    c.expect(W == parse_matrix(W_ENTRIES, N, names), "5√3W matches the displayed entries")
    L = {k: W[ij] for k, ij in LETTERS.items()}
    def e(text: str) -> CycScalar:
        return parse_scalar(text, N, names)

    products = {
        'xu': (L['x'] * L['u'], e('-9+12*(eps^2+eps^3)')),
        'rn': (L['r'] * L['n'], e('-9+12*(eps^2+eps^3)')),
        'yv': (L['y'] * L['v'], e('-9+12*(eps+eps^4)')),
        'qm': (L['q'] * L['m'], e('-9+12*(eps+eps^4)')),
        'zw': (L['z'] * L['w'], e('9*(eps-eps^4)^2')),
        'pl': (L['p'] * L['l'], e('9*(eps^2-eps^3)^2')),
    }
    for key, (found, want) in products.items():
        c.record(key, found)
        c.expect(found == want, f"product {key}")
    # zw and pℓ are displayed without the square
    c.constant('zw', products['zw'][0], e('9*(eps-eps^4)'))
    c.constant('pl', products['pl'][0], e('9*(eps^2-eps^3)'))
    c.expect(e('-9+12*(eps^2+eps^3)') == e('(sqrt3*(1+2*eps+2*eps^2))^2'), "−9+12(ε²+ε³) is a square")
    c.expect(e('-9+12*(eps+eps^4)') == e('(sqrt3*(1+2*eps^2+2*eps^4))^2'), "−9+12(ε+ε⁴) is a square")


@check('quintic-normal-basis', conductor=120, aliases=('thm_3_13_basis',))
def quintic_normal_basis(c: Checker):
    """S′ = S·diag[α,β,γ,1]·R14 sends R21R22R23 to −τ₁₂₃₄₅ and R24 to R′24."""
    ctx = c.ctx
    N = ctx.conductor
    names = _names(ctx)
    S = matrix_catalog('S120', conductor=N)
    W = (S.inverse() @ matrix_catalog('R24', conductor=N) @ S).scale(5 * known_constant('sqrt3', ctx))
    alpha, beta, gamma = (parse_scalar(t, N, names) for t in (ALPHA, BETA, GAMMA))
    L = {k: W[ij] for k, ij in LETTERS.items()}
    three = parse_scalar('3*(eps-eps^4)', N, names)
    c.expect(alpha * L['z'] == three and L['w'] / alpha == three, "αz = α⁻¹w = 3(ε−ε⁴)")
    rb = parse_scalar('sqrt3*(1+2*eps^2+2*eps^4)', N, names)
    c.expect(beta * L['q'] == rb and L['m'] / beta == rb, "βq = β⁻¹m = √3(1+2ε²+2ε⁴)")
    rg = parse_scalar('sqrt3*(1+2*eps+2*eps^2)', N, names)
    c.expect(gamma * L['r'] == rg and L['n'] / gamma == rg, "γr = γ⁻¹n = √3(1+2ε+2ε²)")
    Sp = matrix_catalog('S_prime', conductor=N)
    Sp_inv = Sp.inverse()
    U = matrix_catalog('R21', conductor=N) @ matrix_catalog('R22', conductor=N) @ matrix_catalog('R23', conductor=N)
    c.expect(Sp_inv @ U @ Sp == matrix_catalog('tau_12345', conductor=N).scale(-1), "S′⁻¹US′ = −τ₁₂₃₄₅")
    c.expect(Sp_inv @ matrix_catalog('R24', conductor=N) @ Sp == matrix_catalog('R24_prime', conductor=N), "S′⁻¹R24S′ = R′24")


@check('quintic-normal-forms', conductor=60, aliases=('thm_3_13',))
def quintic_normal_forms(c: Checker):
    """f′₀ and f′₁ are τ₁₂₃₄₅-invariant; R′24 fixes f′₀ and negates f′₁."""
    N = c.ctx.conductor
    tau = matrix_catalog('tau_12345', conductor=N)
    R = matrix_catalog('R24_prime', conductor=N)
    for name, sign in (('f0p', 1), ('f1p', -1)):
        f = form_catalog(name, conductor=N)
        c.expect(_fixed(f, tau), f"{name} fixed by τ₁₂₃₄₅")
        ratio = proportionality(substitute_direct(f, R), f)
        c.record(f'{name}_R24_prime', ratio)
        c.expect(ratio == sign, f"{name} has R′24 eigenvalue {sign:+d}")
    basis = eigenspace_basis([tau, R], [1, 1], 4, 4, c.log)
    c.record('dimension_plus', len(basis))


@check('quintic-stretch', conductor=480, aliases=('t0_t1',), slow=True)
def quintic_stretch(c: Checker):
    """Diagonal rescalings T0, T1 (α⁸⁰ = −1, θ = α²⁰) put f′₀, f′₁ into the f^{μ,ν,λ} family."""
    ctx = c.ctx
    N = ctx.conductor
    theta = root_of_unity(ctx, 8)
    names = {'theta': theta}
    g0 = substitute_direct(form_catalog('f0p', conductor=N), matrix_catalog('T0_stretch', conductor=N))
    g1 = substitute_direct(form_catalog('f1p', conductor=N), matrix_catalog('T1_stretch', conductor=N))
    want0 = parse_form('x^3*y + y^3*z + z^3*t + t^3*x - sqrt3/2*theta*(x^2*z^2 - y^2*t^2)', 4, N, names)
    want1 = parse_form('x^3*y + y^3*z + z^3*t + t^3*x + sqrt3*theta*(x^2*z^2 + y^2*t^2) - 3*sqrt3*theta^3*x*y*z*t', 4, N, names)
    c.record('f0p_T0', g0)
    c.record('f1p_T1', g1)
    c.expect(g0 == want0, "f′₀ under T0")
    c.expect(g1 == want1, "f′₁ under T1")
    c.note("T0 = diag[α,α⁻³,−α⁹,−α⁻²⁷] and T1 = diag[α,α⁻³,α⁹,α⁻²⁷]; the x²z²−y²t² coefficient of f′₀ comes out −(√3/2)θ, printed +(√3/2)θ")
