"""The Fermat-type family M^λ = x⁴+y⁴+z⁴+t⁴+λxyzt, its groups of order 384 and 1920, and the S₅ inside."""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from quartaut.cyclofield import known_constant, root_of_unity
from quartaut.forms import hessian, proportionality, substitute_direct
from quartaut.matrix import SingularMatrixError, SquareMatrix
from quartaut.parse import format_scalar, parse_form, parse_matrix, parse_scalar
from quartaut.projgroup import (
    CapExceeded, FiniteMatrixGroup, closure, intersection_size, is_normal, normalize, order_statistics, point_key, point_orbit,
    proj_order,
)
from quartaut.singular import FamilyParams, critical_point_check, family_form, family_is_singular, singular_witness

from .registry import Checker, check, form, form_catalog, matrix, matrix_catalog


def verify_s5_coxeter(T: Sequence[SquareMatrix]) -> bool:
    """Projective Coxeter relations of S₅: ord(T_i) = 2, ord(T_jT_{j+1}) = 3, ord(T_iT_j) = 2 for |i−j| ≥ 2."""
    if len(T) != 4:
        raise ValueError(f"Expected 4 matrices, got {len(T)}")
    try:
        g = [normalize(M) for M in T]
    except SingularMatrixError:
        return False
    try:
        for i in range(4):
            if proj_order(g[i], cap=6) != 2:
                return False
            for j in range(i + 1, 4):
                want = 3 if j == i + 1 else 2
                if proj_order(g[i] @ g[j], cap=6) != want:
                    return False
    except CapExceeded:
        return False
    return True


# Forms

@form('M', params=('lam',))
def M(ctx, lam):
    """M^λ = x⁴+y⁴+z⁴+t⁴+λxyzt"""
    return family_form(FamilyParams('M', (lam,)))


@form('M12')
def M12(ctx):
    """x⁴+y⁴+z⁴+t⁴+12xyzt"""
    return family_form(FamilyParams('M', (ctx.lift(12),)))


@form('g_fermat', params=('mu',))
def g_fermat(ctx, mu):
    """12⁻⁴·Hess(M^λ) with μ = λ/12"""
    return parse_form(
        '(1 - 3*mu^4)*x^2*y^2*z^2*t^2 + 2*mu^3*x*y*z*t*(x^4 + y^4 + z^4 + t^4)'
        ' - mu^2*(x^4*(y^4 + z^4 + t^4) + y^4*(z^4 + t^4) + z^4*t^4)',
        4, ctx.conductor, {'mu': mu},
    )


# Matrices

@matrix('G16_a', conductor=4)
def G16_a(ctx):
    """diag[i,−i,1,1]"""
    i = known_constant('i', ctx)
    return SquareMatrix.diag([i, -i, 1, 1], ctx)


@matrix('G16_b', conductor=4)
def G16_b(ctx):
    """diag[i,1,−i,1]"""
    i = known_constant('i', ctx)
    return SquareMatrix.diag([i, 1, -i, 1], ctx)


@matrix('S3_12')
def S3_12(ctx):
    """[e2,e1,e3,e4]"""
    return SquareMatrix.from_columns([2, 1, 3, 4], ctx)


@matrix('S3_123')
def S3_123(ctx):
    """[e2,e3,e1,e4]"""
    return SquareMatrix.from_columns([2, 3, 1, 4], ctx)


@matrix('B1920')
def B1920(ctx):
    """[e2,e3,e4,e1]"""
    return SquareMatrix.from_columns([2, 3, 4, 1], ctx)


@matrix('C1920', conductor=4)
def C1920(ctx):
    """½ times the order-5 matrix with ±1, ±√−1 entries"""
    rows = [
        ['-1', '-i', '-i', '1'],
        ['-i', '-1', '1', '-i'],
        ['1', 'i', '-i', '1'],
        ['-i', '-1', '-1', 'i'],
    ]
    return parse_matrix(rows, ctx.conductor).scale(Fraction(1, 2))


# Displayed powers of C, compared against the computed ones
C_POWERS = {
    2: [['-i', 'i', '-1', '-1'], ['i', 'i', '-1', '1'], ['-i', '-i', '-1', '1'], ['i', '-i', '-1', '-1']],
    3: [['i', '-i', 'i', '-i'], ['-i', '-i', 'i', 'i'], ['-1', '-1', '-1', '-1'], ['-1', '1', '1', '-1']],
    4: [['-1', 'i', '1', 'i'], ['i', '-1', '-i', '-1'], ['i', '1', 'i', '-1'], ['1', 'i', '1', '-i']],
}


@matrix('H2')
def H2(ctx):
    """[−e1,−e2,e3,e4]"""
    return SquareMatrix.diag([-1, -1, 1, 1], ctx)


@matrix('H3')
def H3(ctx):
    """[−e1,e2,−e3,e4]"""
    return SquareMatrix.diag([-1, 1, -1, 1], ctx)


@matrix('H4')
def H4(ctx):
    return SquareMatrix.diag([1, -1, -1, 1], ctx)


@matrix('K2')
def K2(ctx):
    """[e2,e1,e4,e3]"""
    return SquareMatrix.from_columns([2, 1, 4, 3], ctx)


@matrix('K3')
def K3(ctx):
    """[e3,e4,e1,e2]"""
    return SquareMatrix.from_columns([3, 4, 1, 2], ctx)


@matrix('K4')
def K4(ctx):
    """[e4,e3,e2,e1]"""
    return SquareMatrix.from_columns([4, 3, 2, 1], ctx)


@matrix('T1')
def T1(ctx):
    """[e3,e2,e1,e4]"""
    return SquareMatrix.from_columns([3, 2, 1, 4], ctx)


@matrix('T2', conductor=4)
def T2(ctx):
    """[ie2,−ie1,e3,e4]"""
    i = known_constant('i', ctx)
    return SquareMatrix.from_columns([2, 1, 3, 4], ctx, [i, -i, 1, 1])


@matrix('T3', conductor=4)
def T3(ctx):
    """[e1,ie4,e3,−ie2]"""
    i = known_constant('i', ctx)
    return SquareMatrix.from_columns([1, 4, 3, 2], ctx, [1, i, 1, -i])


@matrix('T4', conductor=4)
def T4(ctx):
    """½ times the ±1, ±√−1 matrix completing the S₅ Coxeter generators"""
    rows = [
        ['1', 'i', '-1', 'i'],
        ['-i', '1', '-i', '-1'],
        ['-1', 'i', '1', 'i'],
        ['-i', '-1', '-i', '1'],
    ]
    return parse_matrix(rows, ctx.conductor).scale(Fraction(1, 2))


# c_i and γ_i over Q(ζ₂₀), with e = ε a primitive fifth root of unity
C_ENTRIES = (
    '-1',
    '1 - e^2 + e^4 + i*(-1 - e + e^3)',
    '-e + e^4 + i*(e^2 + e^3)',
    '-e^3 - e^4 - i*(e + e^2)',
)
GAMMA_ENTRIES = (
    '-2 + e + e^4 + i*(-e^2 + e^3)',
    '-e^3 + e^4 + i*(e - e^2)',
    '1 + 2*e + 2*e^3',
    '-e + e^3 + i*(-e^2 + e^4)',
)
P_TEXT = '3 + 20*e + 28*e^2 + 16*e^3 + i*(17 + 20*e + 4*e^2 - 8*e^3)'


def _scalars(ctx, texts: Sequence[str]) -> list:
    names = {'e': root_of_unity(ctx, 5)}
    return [parse_scalar(s, ctx.conductor, names) for s in texts]


def _cyclic(ctx, v: Sequence, pattern: Sequence[Sequence[int]]) -> SquareMatrix:
    return SquareMatrix.of([[v[k] for k in row] for row in pattern], ctx)


@matrix('D_fermat', conductor=4)
def D_fermat(ctx):
    """diag[1,√−1,1,−1]"""
    i = known_constant('i', ctx)
    return SquareMatrix.diag([1, i, 1, -1], ctx)


@matrix('C_fermat', conductor=20)
def C_fermat(ctx):
    """D·[c1 c2 c3 c4; c3 c4 c1 c2; c4 c1 c2 c3; c2 c3 c4 c1]"""
    c = _scalars(ctx, C_ENTRIES)
    core = _cyclic(ctx, c, [[0, 1, 2, 3], [2, 3, 0, 1], [3, 0, 1, 2], [1, 2, 3, 0]])
    return matrix_catalog('D_fermat', conductor=ctx.conductor) @ core


@matrix('C_fermat_inv', conductor=20)
def C_fermat_inv(ctx):
    """(1/10)·[γ1 γ3 γ4 γ2; γ2 γ4 γ1 γ3; γ3 γ1 γ2 γ4; γ4 γ2 γ3 γ1]·D⁻¹"""
    g = _scalars(ctx, GAMMA_ENTRIES)
    core = _cyclic(ctx, g, [[0, 2, 3, 1], [1, 3, 0, 2], [2, 0, 1, 3], [3, 1, 2, 0]])
    return (core @ matrix_catalog('D_fermat', conductor=ctx.conductor).inverse()).scale(Fraction(1, 10))


@matrix('S_fermat', conductor=20)
def S_fermat(ctx):
    """C·σ̂²·diag[ε⁴,ε³,ε,ε²], conjugating the S₅ generators onto τ₁₂, τ₁₂₃₄₅"""
    e = root_of_unity(ctx, 5)
    N = ctx.conductor
    sigma2 = SquareMatrix.from_columns([3, 4, 1, 2], ctx)
    return matrix_catalog('C_fermat', conductor=N) @ sigma2 @ SquareMatrix.diag([e ** 4, e ** 3, e, e ** 2], ctx)


# Groups

def _gens(names: Sequence[str], N: int) -> list:
    return [normalize(matrix_catalog(k, conductor=N)) for k in names]


G96_GENS = ('G16_a', 'G16_b', 'S3_12', 'S3_123')
G384_GENS = G96_GENS + ('B1920',)
G1920_GENS = G384_GENS + ('C1920',)
A16_GENS = ('H2', 'H3', 'K2', 'K3')
S5_GENS = ('T1', 'T2', 'T3', 'T4')


@lru_cache(maxsize=None)
def fermat_group(gens: tuple[str, ...], N: int = 4) -> FiniteMatrixGroup:
    """Closure of catalog generators over Q(ζ_N), cached per generator set."""
    return closure(_gens(gens, N))


# Checks

@check('fermat-family', conductor=4, aliases=('lemma_7_1', 'lemma_7_1_singular'))
def fermat_family(c: Checker):
    """M^λ is singular iff λ⁴ = 4⁴, with singular point (1,1,−4/λ,1); M^{αλ} = M^λ_{D⁻¹} for α⁴ = 1."""
    ctx = c.ctx
    N = ctx.conductor
    i = known_constant('i', ctx)
    singular = [ctx.lift(4) * i ** k for k in range(4)]
    regular = [ctx.lift(x) for x in (0, 1, -3, 12, Fraction(7, 2))] + [2 * i, 12 * i, 1 + i]
    for lam in singular:
        fp = FamilyParams('M', (lam,))
        P = singular_witness(fp)
        c.expect(family_is_singular(fp) and P is not None and critical_point_check(family_form(fp), P), f"M^λ singular at λ = {format_scalar(lam)}")
    c.expect(not any(family_is_singular(FamilyParams('M', (lam,))) for lam in regular), "M^λ nonsingular off λ⁴ = 256")
    c.record('singular_lambdas', singular)
    c.expect(singular_witness(FamilyParams('M', (ctx.lift(12),))) is None, "no witness at λ = 12")
    lam = ctx.lift(5)
    for k in range(4):
        alpha = i ** k
        D = SquareMatrix.diag([1, 1, 1, alpha], ctx)
        c.expect(substitute_direct(form_catalog('M', [lam], conductor=N), D) == form_catalog('M', [lam * alpha], conductor=N), f"M^(αλ) = M^λ_(D⁻¹), α = i^{k}")


@check('m-lambda-hessian', conductor=4)
def m_lambda_hessian(c: Checker):
    """Hess(M^λ) = 12⁴·g with μ = λ/12 for sample λ."""
    ctx = c.ctx
    N = ctx.conductor
    i = known_constant('i', ctx)
    samples = [ctx.lift(x) for x in (1, 3, 12, -7, Fraction(5, 2))] + [4 * i, 1 + i]
    for lam in samples:
        H = hessian(form_catalog('M', [lam], conductor=N))
        g = form_catalog('g_fermat', [lam / 12], conductor=N)
        c.expect(H == g * 12 ** 4, f"Hess(M^λ) = 12⁴g at λ = {format_scalar(lam)}")
    c.record('samples', samples)


@check('order384-group', conductor=4, aliases=('lemma_7_1_g384',))
def order384_group(c: Checker):
    """G₉₆ = Ŝ₃G₁₆ has order 96, G₃₈₄ = ⟨G₉₆,(B)⟩ has order 384, and both fix every M^λ."""
    N = c.ctx.conductor
    G16 = fermat_group(('G16_a', 'G16_b'), N)
    G96 = fermat_group(G96_GENS, N)
    G384 = fermat_group(G384_GENS, N)
    orders = {'G16': G16.order, 'G96': G96.order, 'G384': G384.order}
    c.record('orders', orders)
    c.expect(orders == {'G16': 16, 'G96': 96, 'G384': 384}, "orders 16, 96, 384")
    c.expect(is_normal(G16, G96), "G₁₆ ◁ G₉₆")
    c.expect(proj_order(normalize(matrix_catalog('B1920', conductor=N))) == 4, "ord(B) = 4")
    lam = c.ctx.lift(7)
    f = form_catalog('M', [lam], conductor=N)
    c.expect(all(proportionality(substitute_direct(f, g.rep), f) is not None for g in G384.generators), "G₃₈₄ generators fix (M^λ)")


@check('order1920-group', conductor=4, aliases=('lemma_7_1_g1920',))
def order1920_group(c: Checker):
    """G₁₉₂₀ = ⟨G₃₈₄,(C)⟩ has order 1920 and fixes (M¹²); Sing V(g) at μ = 1 is one orbit of 20 points."""
    ctx = c.ctx
    N = ctx.conductor
    C = matrix_catalog('C1920', conductor=N)
    gC = normalize(C)
    c.expect(proj_order(gC) == 5, "ord(C) = 5")
    for k, rows in C_POWERS.items():
        printed = parse_matrix(rows, N).scale(Fraction(1, 2))
        if normalize(printed) != gC ** k:
            c.note(f"C^{k} differs from its printed form")
    G = fermat_group(G1920_GENS, N)
    c.record('order', G.order)
    c.expect(G.order == 1920, "|G₁₉₂₀| = 1920")
    f = form_catalog('M12', conductor=N)
    c.expect(all(proportionality(substitute_direct(f, g.rep), f) is not None for g in G.generators), "G₁₉₂₀ generators fix (M¹²)")
    c.record('order_statistics', order_statistics(G))

    g = form_catalog('g_fermat', [1], conductor=N)
    P4 = [ctx.lift(int(k == 3)) for k in range(4)]
    pts = point_orbit([h.rep for h in G.generators], P4)
    c.record('singular_orbit_size', len(pts))
    c.expect(len(pts) == 20, "G₁₉₂₀·P₄ has 20 points")
    c.expect(all(critical_point_check(g, P) for P in pts), "G₁₉₂₀·P₄ ⊂ Sing V(g)")
    i = known_constant('i', ctx)
    Q = {point_key((i ** a, i ** b, i ** (-a - b), ctx.one)) for a in range(4) for b in range(4)}
    P0 = {point_key([ctx.lift(int(k == j)) for k in range(4)]) for j in range(4)}
    c.expect(set(pts) == P0 | Q, "G₁₉₂₀·P₄ = P₀ ∪ Q")


@check('a16-normal', conductor=4, aliases=('lemma_7_2',))
def a16_normal(c: Checker):
    """A₁₆ = {(H_i)(K_j)} is elementary abelian of order 16 and normal in G₁₉₂₀."""
    N = c.ctx.conductor
    A16 = fermat_group(A16_GENS, N)
    stats = order_statistics(A16)
    c.record('order_statistics', stats)
    c.expect(stats == {1: 1, 2: 15}, "A₁₆ ≅ C₂⁴")
    for a in A16.generators:
        c.expect(all(a @ b == b @ a for b in A16.generators), "A₁₆ is abelian")
    c.expect(normalize(matrix_catalog('H4', conductor=N)) in A16 and normalize(matrix_catalog('K4', conductor=N)) in A16, "H₄, K₄ ∈ A₁₆")
    G = fermat_group(G1920_GENS, N)
    c.expect(A16.keys <= G.keys, "A₁₆ ⊂ G₁₉₂₀")
    c.expect(is_normal(A16, G), "A₁₆ ◁ G₁₉₂₀")


@check('s5-coxeter', conductor=4, aliases=('lemma_7_4', 'prop_7_5'))
def s5_coxeter(c: Checker):
    """T₁..T₄ satisfy the S₅ Coxeter relations, fix M¹², and G₁₉₂₀ = ⟨(T_i)⟩·A₁₆ with trivial intersection."""
    N = c.ctx.conductor
    T = [matrix_catalog(k, conductor=N) for k in S5_GENS]
    c.expect(verify_s5_coxeter(T), "Coxeter relations")
    f = form_catalog('M12', conductor=N)
    c.expect(all(substitute_direct(f, M) == f for M in T), "M¹²_{T_i⁻¹} = M¹²")
    H = fermat_group(S5_GENS, N)
    A16 = fermat_group(A16_GENS, N)
    G = fermat_group(G1920_GENS, N)
    meet = intersection_size(H, A16)
    c.record('order', H.order)
    c.record('intersection_with_a16', meet)
    c.expect(H.order == 120, "|⟨(T_i)⟩| = 120")
    c.expect(meet == 1, "⟨(T_i)⟩ ∩ A₁₆ = 1")
    c.expect(H.keys <= G.keys and H.order * A16.order // meet == G.order, "G₁₉₂₀ = ⟨(T_i)⟩A₁₆")


@check('fermat-to-quintic', conductor=20, aliases=('thm_7_6',))
def fermat_to_quintic(c: Checker):
    """M¹²_{S⁻¹} = 80p(F₀ − ¾(1+√−1)F₁): M¹² is projectively equivalent to a member of the f^{μ,ν,λ} family."""
    ctx = c.ctx
    N = ctx.conductor
    i = known_constant('i', ctx)
    e = root_of_unity(ctx, 5)
    C = matrix_catalog('C_fermat', conductor=N)
    c.expect((C @ matrix_catalog('C_fermat_inv', conductor=N)).is_identity(), "C⁻¹ = (1/10)[γ]D⁻¹")
    S = matrix_catalog('S_fermat', conductor=N)
    T = [matrix_catalog(k, conductor=N) for k in S5_GENS]
    tau = matrix_catalog('tau_12345', conductor=N)
    S_inv = S.inverse()
    c.expect(normalize(S_inv @ T[0] @ T[1] @ T[2] @ T[3] @ S) == normalize(tau), "S⁻¹T₁T₂T₃T₄S ∼ τ₁₂₃₄₅")
    tau12 = matrix_catalog('tau_12', conductor=N)
    conj = S_inv @ T[0] @ S
    c.record('t1_conjugate', conj)
    c.expect(conj.rows[3] == tau12.rows[3], "last row of S⁻¹T₁S = last row of τ₁₂")
    if normalize(conj) != normalize(tau12):
        c.note("S⁻¹T₁S agrees with τ₁₂ only in its last row")
    c.expect(SquareMatrix.diag([e ** 4, e ** 3, e, e ** 2], ctx) == tau ** 4, "diag[ε⁴,ε³,ε,ε²] = τ₁₂₃₄₅⁴")

    image = substitute_direct(form_catalog('M12', conductor=N), S)
    F0 = form_catalog('F0', conductor=N)
    F1 = form_catalog('F1', conductor=N)
    target = F0 - F1 * (Fraction(3, 4) * (1 + i))
    p = _scalars(ctx, [P_TEXT])[0]
    c.record('image', image)
    c.constant('constant', proportionality(image, target), 80 * p)
    c.expect(substitute_direct(form_catalog('M12', conductor=N), C) == image, "σ̂² and τ₁₂₃₄₅⁴ drop out")
