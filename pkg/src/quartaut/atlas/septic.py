"""Forms and matrices with an order-7 symmetry: the g^λ family, PSL₂(F₇) in PGL₃ and PGL₄, and the Klein quartic."""

from quartaut.cyclofield import CycScalar, known_constant, root_of_unity
from quartaut.eigenmod import diagonal_conjugate, eigenspace_basis, forms_rank
from quartaut.forms import hessian, proportionality, substitute_direct
from quartaut.matrix import SingularMatrixError, SquareMatrix
from quartaut.parse import parse_form, parse_matrix, parse_scalar
from quartaut.projgroup import closure, normalize, proj_order
from quartaut.singular import FamilyParams, common_context, critical_point_check, family_form, family_is_singular, singular_witness

from .registry import Checker, check, form, form_catalog, matrix, matrix_catalog


def _int(p: CycScalar) -> int:
    v = p.rational_value()
    if v is None or int(v) != v:
        raise ValueError(f"Expected an integer parameter, got {p!r}")
    return int(v)


def make_Z(tau, alpha, beta, gamma) -> SquareMatrix:
    """The symmetric matrix with cyclic α,β,γ rows, a τ border and corner 1."""
    ctx = common_context(tau, alpha, beta, gamma)
    t, a, b, g = (ctx.lift(s) for s in (tau, alpha, beta, gamma))
    return SquareMatrix.of([
        [a, b, g, t],
        [b, g, a, t],
        [g, a, b, t],
        [t, t, t, 1],
    ], ctx)


def verify_psl27(X: SquareMatrix, Y: SquareMatrix, Z: SquareMatrix) -> bool:
    """x⁷ = y³ = z² = 1, y⁻¹xy = x², z⁻¹yz = y⁻¹ and zxz = x⁻¹zx⁻¹, all in PGL."""
    try:
        x, y, z = (normalize(M) for M in (X, Y, Z))
    except SingularMatrixError:
        return False
    xi, yi, zi = x.inverse(), y.inverse(), z.inverse()
    return (
        (x ** 7).is_identity()
        and (y ** 3).is_identity()
        and (z ** 2).is_identity()
        and yi @ x @ y == x ** 2
        and zi @ y @ z == yi
        and z @ x @ z == xi @ z @ xi
    )


# Forms

@form('F7', params=('lam',))
def F7(ctx, lam):
    """g^λ = x³y+y³z+z³x+t⁴+λxyzt"""
    return family_form(FamilyParams('F7', (lam,)))


@form('klein')
def klein(ctx):
    """x³y+y³z+z³x in three variables"""
    return parse_form('x^3*y + y^3*z + z^3*x', 3, ctx.conductor)


@form('klein_h1')
def klein_h1(ctx):
    return parse_form('x^5*z + y^5*x + z^5*y - 5*x^2*y^2*z^2', 3, ctx.conductor)


@form('klein_h2')
def klein_h2(ctx):
    """Degree 12; the z¹⁰y² and z⁷x²y³ terms complete the cyclic pattern."""
    return parse_form(
        'x^10*z^2 + y^10*x^2 + z^10*y^2 - 2*(x^9*y^3 + y^9*z^3 + z^9*x^3) - 4*(x^6*y^5*z + y^6*z^5*x + z^6*x^5*y)'
        ' - 16*(x^7*y^2*z^3 + y^7*z^2*x^3 + z^7*x^2*y^3) + 13*x^4*y^4*z^4',
        3, ctx.conductor,
    )


@form('klein_sextic')
def klein_sextic(ctx):
    return parse_form('x^5*z + y^5*x + z^5*y', 3, ctx.conductor)


@form('klein_sextic_hessian')
def klein_sextic_hessian(ctx):
    return parse_form('33*(x*y*z)^4 - 2*(x^9*y^3 + y^9*z^3 + z^9*x^3)', 3, ctx.conductor)


@form('klein_t4')
def klein_t4(ctx):
    return parse_form('x^3*y + y^3*z + z^3*x + t^4', 4, ctx.conductor)


@form('edge', conductor=8)
def edge(ctx):
    return parse_form('2*(x^3*y + y^3*z + z^3*x) + t^4 + 6*sqrt2*x*y*z*t', 4, ctx.conductor)


@form('A6_form', params=('a', 'b', 'c', 'd', 'e'))
def A6_form(ctx, a, b, c, d, e):
    """ax⁴+by³t+ct³z+dz³y+e·xyzt, the general A₆-invariant quartic"""
    return parse_form('a*x^4 + b*y^3*t + c*t^3*z + d*z^3*y + e*x*y*z*t', 4, ctx.conductor, dict(a=a, b=b, c=c, d=d, e=e))


# Matrices

def _A(ctx, i: int) -> SquareMatrix:
    eps = root_of_unity(ctx, 7)
    return SquareMatrix.diag([eps ** (4 * i), eps ** (2 * i), eps ** i, 1], ctx)


def _C_sqrt2(ctx, i: int, sign: int = 1) -> SquareMatrix:
    e = lambda k: root_of_unity(ctx, 7, k * i)
    return make_Z(sign * known_constant('sqrt2', ctx), e(1) + e(6), e(2) + e(5), e(3) + e(4))


@matrix('A7', conductor=7)
def A7(ctx):
    """diag[ε⁴,ε²,ε,1]"""
    return _A(ctx, 1)


@matrix('A7_i', conductor=7, params=('i',))
def A7_i(ctx, i):
    """diag[ε^{4i},ε^{2i},ε^i,1]"""
    return _A(ctx, _int(i))


@matrix('B7')
def B7(ctx):
    """[e3,e1,e2,e4]"""
    return SquareMatrix.from_columns([3, 1, 2, 4], ctx)


@matrix('C0', conductor=7)
def C0(ctx):
    alpha = '(-2 - eps + 2*eps^2 + 2*eps^5 - eps^6)/7'
    beta = '(-2 - eps^2 + 2*eps^3 + 2*eps^4 - eps^5)/7'
    gamma = '(-2 + 2*eps - eps^3 - eps^4 + 2*eps^6)/7'
    names = {'eps': root_of_unity(ctx, 7)}
    a, b, g = (parse_scalar(s, ctx.conductor, names) for s in (alpha, beta, gamma))
    return make_Z(0, a, b, g)


@matrix('deltaC0', conductor=7)
def deltaC0(ctx):
    """√−7·C₀, the 3×3 block of ε^k − ε^{−k} entries plus δ in the corner"""
    return C0(ctx).scale(known_constant('sqrt_m7', ctx))


@matrix('C_sqrt2', conductor=56)
def C_sqrt2(ctx):
    """Z(√2, ε+ε⁶, ε²+ε⁵, ε³+ε⁴)"""
    return _C_sqrt2(ctx, 1)


@matrix('C_minus_sqrt2', conductor=56)
def C_minus_sqrt2(ctx):
    return _C_sqrt2(ctx, 1, -1)


@matrix('C_sqrt2_i', conductor=56, params=('i',))
def C_sqrt2_i(ctx, i):
    return _C_sqrt2(ctx, _int(i))


@matrix('A3', conductor=7)
def A3(ctx):
    eps = root_of_unity(ctx, 7)
    return SquareMatrix.diag([eps ** 4, eps ** 2, eps], ctx)


@matrix('B3')
def B3(ctx):
    """[e3,e1,e2] in three variables"""
    return SquareMatrix.from_columns([3, 1, 2], ctx)


@matrix('C3', conductor=7)
def C3(ctx):
    rows = [
        ['eps-eps^6', 'eps^2-eps^5', 'eps^4-eps^3'],
        ['eps^2-eps^5', 'eps^4-eps^3', 'eps-eps^6'],
        ['eps^4-eps^3', 'eps-eps^6', 'eps^2-eps^5'],
    ]
    M = parse_matrix(rows, ctx.conductor, {'eps': root_of_unity(ctx, 7)})
    return M.scale(known_constant('sqrt_m7', ctx).inverse())


@matrix('D21', conductor=21)
def D21(ctx):
    """diag[δ,δ⁵,1] with δ of order 21"""
    d = root_of_unity(ctx, 21)
    return SquareMatrix.diag([d, d ** 5, 1], ctx)


@matrix('A6', conductor=7)
def A6(ctx):
    """diag[1,ε,ε²,ε⁴], the D_{2,4} generator at q = 7"""
    eps = root_of_unity(ctx, 7)
    return SquareMatrix.diag([1, eps, eps ** 2, eps ** 4], ctx)


# Checks

@check('psl27-relations', conductor=56, aliases=('lemma_4_4',))
def psl27_relations(c: Checker):
    """C_√2² = 7E and C_√2·X·C_√2 = (1+2ε+2ε²+2ε⁴)X⁻¹C_√2X⁻¹; C₀² = E and C₀XC₀ = X⁻¹C₀X⁻¹; both triples satisfy the PSL₂(F₇) relations."""
    ctx = c.ctx
    N = ctx.conductor
    X = matrix_catalog('A7', conductor=N)
    B = matrix_catalog('B7', conductor=N)
    X_inv = X.inverse()
    C = matrix_catalog('C_sqrt2', conductor=N)
    c.expect((C @ C).scalar_value() == 7, "C_√2² = 7E")
    k = 1 + 2 * root_of_unity(ctx, 7, 1) + 2 * root_of_unity(ctx, 7, 2) + 2 * root_of_unity(ctx, 7, 4)
    c.expect(C @ X @ C == (X_inv @ C @ X_inv).scale(k), "C_√2XC_√2 = (1+2ε+2ε²+2ε⁴)X⁻¹C_√2X⁻¹")
    c.expect(verify_psl27(X, B, C), "(A, B, C_√2) satisfies the relations")
    X7 = matrix_catalog('A7', conductor=7)
    C0_ = matrix_catalog('C0', conductor=7)
    X7_inv = X7.inverse()
    c.expect((C0_ @ C0_).is_identity(), "C₀² = E")
    c.expect(C0_ @ X7 @ C0_ == X7_inv @ C0_ @ X7_inv, "C₀XC₀ = X⁻¹C₀X⁻¹")
    B7_ = matrix_catalog('B7', conductor=7)
    c.expect(verify_psl27(X7, B7_, C0_), "(A, B, C₀) satisfies the relations")
    c.expect(not verify_psl27(X7, B7_, SquareMatrix.identity(4, X7.ctx)), "(A, B, E) does not")
    orders = {name: proj_order(normalize(M)) for name, M in (('A', X7), ('B', B7_), ('C0', C0_))}
    c.record('orders', orders)
    c.expect(orders == {'A': 7, 'B': 3, 'C0': 2}, "projective orders 7, 3, 2")
    G = closure([normalize(X7), normalize(B7_), normalize(C0_)], log=c.log)
    c.record('order_C0', G.order)
    c.expect(G.order == 168, "⟨A, B, C₀⟩ has order 168")


@check('septic-conjugations', conductor=56, aliases=('prop_4_7',))
def septic_conjugations(c: Checker):
    """Conjugating by B permutes A_i and C_√2,i as i ↦ 2i; eigenvalue multisets separate A₁ from A₆."""
    ctx = c.ctx
    N = ctx.conductor
    B = matrix_catalog('B7', conductor=N)
    B_inv = B.inverse()
    A = {i: _A(ctx, i) for i in range(1, 7)}
    C = {i: _C_sqrt2(ctx, i) for i in range(1, 7)}
    for fam, M in (('A', A), ('C', C)):
        c.expect(B_inv @ M[1] @ B == M[2], f"B⁻¹{fam}₁B = {fam}₂")
        c.expect(B_inv @ B_inv @ M[1] @ B @ B == M[4], f"B⁻²{fam}₁B² = {fam}₄")
        c.expect(B_inv @ M[6] @ B == M[5], f"B⁻¹{fam}₆B = {fam}₅")
        c.expect(B_inv @ B_inv @ M[6] @ B @ B == M[3], f"B⁻²{fam}₆B² = {fam}₃")
    c.expect(normalize(C[1].inverse().transpose()) == normalize(C[6]), "(C_√2,1ᵀ)⁻¹ ∼ C_√2,6")
    c.expect(not diagonal_conjugate([4, 2, 1, 0], [3, 5, 6, 0], 7), "A₁ and A₆ are not conjugate")
    c.expect(diagonal_conjugate([4, 2, 1, 0], [1, 4, 2, 0], 7), "A₁ and A₂ are conjugate")


@check('septic-fixed-form', conductor=7, aliases=('prop_4_8',))
def septic_fixed_form(c: Checker):
    """x³y+y³z+z³x+t⁴ is fixed by A and B and scaled by 49 under C = δC₀."""
    N = c.ctx.conductor
    f = form_catalog('klein_t4', conductor=N)
    A, B, C = (matrix_catalog(k, conductor=N) for k in ('A7', 'B7', 'deltaC0'))
    c.expect(substitute_direct(f, A) == f, "A fixes f")
    c.expect(substitute_direct(f, B) == f, "B fixes f")
    c.constant('C_scalar', proportionality(substitute_direct(f, C), f), 49)
    basis = eigenspace_basis([A, B, C], [1, 1, 49], 4, 4, c.log)
    c.record('dimension', len(basis))
    parts = [parse_form('x^3*y + y^3*z + z^3*x', 4, N), parse_form('t^4', 4, N)]
    c.expect(forms_rank(basis + parts) == len(basis), "klein quartic and t⁴ lie in the eigenspace")


@check('edge-quartic', conductor=56, aliases=('prop_4_9',))
def edge_quartic(c: Checker):
    """2(x³y+y³z+z³x)+t⁴+6√2xyzt spans the (A, B, C_√2; 1, 1, 49) eigenspace."""
    N = c.ctx.conductor
    f = form_catalog('edge', conductor=N)
    A, B, C = (matrix_catalog(k, conductor=N) for k in ('A7', 'B7', 'C_sqrt2'))
    c.expect(substitute_direct(f, A) == f, "A fixes f")
    c.expect(substitute_direct(f, B) == f, "B fixes f")
    c.constant('C_scalar', proportionality(substitute_direct(f, C), f), 49)
    basis = eigenspace_basis([A, B, C], [1, 1, 49], 4, 4, c.log)
    c.record('dimension', len(basis))
    c.expect(len(basis) == 1, "eigenspace is 1-dimensional")
    if basis:
        c.constant('basis_ratio', proportionality(basis[0], f))


@check('klein-quartic', conductor=7, aliases=('prop_4_11',))
def klein_quartic(c: Checker):
    """A₃, B₃, C₃ fix x³y+y³z+z³x and generate a group of order 168 whose sextic invariants are ⟨h₁⟩."""
    N = c.ctx.conductor
    f = form_catalog('klein', conductor=N)
    gens = [matrix_catalog(k, conductor=N) for k in ('A3', 'B3', 'C3')]
    for name, M in zip(('A3', 'B3', 'C3'), gens):
        c.expect(substitute_direct(f, M) == f, f"{name} fixes f")
    G = closure([normalize(M) for M in gens], log=c.log)
    c.record('order', G.order)
    c.expect(G.order == 168, "⟨A₃, B₃, C₃⟩ has order 168")
    basis = eigenspace_basis(gens, [1, 1, 1], 3, 6, c.log)
    c.record('sextic_dimension', len(basis))
    c.expect(len(basis) == 1, "sextic invariants are 1-dimensional")
    if basis:
        c.constant('h1_ratio', proportionality(form_catalog('klein_h1', conductor=N), basis[0]))


@check('order63-group', conductor=21, aliases=('lemma_4_10',))
def order63_group(c: Checker):
    """diag[δ,δ⁵,1] (δ of order 21) and [e3,e1,e2] generate a group of order 63 preserving x⁵z+y⁵x+z⁵y up to scalar."""
    N = c.ctx.conductor
    D, B = matrix_catalog('D21', conductor=N), matrix_catalog('B3', conductor=N)
    G = closure([normalize(D), normalize(B)], log=c.log)
    c.record('order', G.order)
    c.expect(G.order == 63, "closure has order 63")
    f = form_catalog('klein_sextic', conductor=N)
    for name, M in (('D21', D), ('B3', B)):
        ratio = proportionality(substitute_direct(f, M), f)
        c.record(f'{name}_scalar', ratio)
        c.expect(ratio is not None, f"{name} preserves f up to scalar")


@check('klein-hessians', aliases=('prop_4_11_hessian', 'lemma_4_10_hessian', 'prop_4_12'))
def klein_hessians(c: Checker):
    """Hessian chain of the Klein quartic, the sextic x⁵z+y⁵x+z⁵y, and x³y+y³z+z³x+t⁴."""
    f = form_catalog('klein')
    h1 = form_catalog('klein_h1')
    c.constant('hess_f_over_h1', proportionality(hessian(f), h1), -57)
    c.constant('hess_h1_over_h2', proportionality(hessian(h1), form_catalog('klein_h2')), 250)
    c.constant('hess_sextic_constant', proportionality(hessian(form_catalog('klein_sextic')), form_catalog('klein_sextic_hessian')), 250)
    g = form_catalog('klein_t4')
    ht2 = parse_form('(x^5*z + y^5*x + z^5*y - 5*x^2*y^2*z^2)*t^2', 4, 1)
    c.constant('hess_g_over_h1t2', proportionality(hessian(g), ht2), -648)


SAMPLE_LAMBDAS = (0, 1, -1, 2, 3, 4, -4, 5, 12)


@check('klein-family', conductor=4, aliases=('lemma_4_1',))
def klein_family(c: Checker):
    """g^λ is singular exactly when λ⁴ = 256, with (1,1,1,−4/λ) a singular point then."""
    ctx = c.ctx
    i = known_constant('i', ctx)
    singular = []
    for lam in [ctx.lift(v) for v in SAMPLE_LAMBDAS] + [4 * i, -4 * i, 2 * i]:
        fp = FamilyParams('F7', (lam,))
        is_sing = family_is_singular(fp)
        c.expect(is_sing == (lam ** 4 == 256), f"criterion at λ = {lam!r}")
        point = singular_witness(fp)
        if is_sing:
            singular.append(lam)
            c.expect(point is not None and critical_point_check(family_form(fp), point), f"witness at λ = {lam!r}")
        else:
            c.expect(point is None, f"no witness at λ = {lam!r}")
    c.record('singular_lambdas', singular)
    g0 = form_catalog('F7', [0], conductor=ctx.conductor)
    c.expect(not critical_point_check(g0, (1, 1, 1, 1)), "g⁰ is smooth at (1,1,1,1)")


@check('septic-normal-form', conductor=7, aliases=('thm_4_2',))
def septic_normal_form(c: Checker):
    """Form(A₆;1) = ⟨x⁴,y³t,t³z,z³y,xyzt⟩, and reversing the variables carries it onto the g^λ family."""
    ctx = c.ctx
    N = ctx.conductor
    A6_ = matrix_catalog('A6', conductor=N)
    basis = eigenspace_basis([A6_], [1], 4, 4, c.log)
    c.record('basis', basis)
    support = sorted({m for f in basis for m in f.terms}, reverse=True)
    c.expect(support == [(4, 0, 0, 0), (1, 1, 1, 1), (0, 3, 0, 1), (0, 1, 3, 0), (0, 0, 1, 3)] and len(basis) == 5, "eigenspace is spanned by five monomials")
    T = SquareMatrix.from_columns([4, 3, 2, 1], ctx)
    c.expect(T.inverse() @ A6_ @ T == matrix_catalog('A7', conductor=N), "T⁻¹A₆T = A")
    lam = ctx.lift(3)
    f = form_catalog('A6_form', [1, 1, 1, 1, lam], conductor=N)
    c.expect(substitute_direct(f, T) == form_catalog('F7', [lam], conductor=N), "f_{T⁻¹} = g^λ")
