"""The form x³y+y³z+z³t+t³x, its group of order 80, and the singular points of its Hessian quartic."""

from quartaut.cyclofield import QuadraticExtension, known_constant, root_of_unity
from quartaut.forms import Form, hessian, proportionality, substitute_direct
from quartaut.matrix import SquareMatrix
from quartaut.parse import parse_form
from quartaut.projgroup import closure, normalize, order_statistics, point_orbit, proj_order
from quartaut.singular import critical_point_check

from .registry import Checker, check, form, form_catalog, matrix, matrix_catalog


# Forms

@form('F80')
def F80(ctx):
    """x³y+y³z+z³t+t³x"""
    return parse_form('x^3*y + y^3*z + z^3*t + t^3*x', 4, ctx.conductor)


@form('h80')
def h80(ctx):
    """3⁻⁴·Hess(x³y+y³z+z³t+t³x)"""
    return parse_form(
        'x^4*z^4 + y^4*t^4 - 4*(x^5*z*t^2 + x^2*y^5*t + x*y^2*z^5 + y*z^2*t^5) + 14*x^2*y^2*z^2*t^2',
        4, ctx.conductor,
    )


# Matrices

@matrix('B80', conductor=20)
def B80(ctx):
    """diag[1,β,β⁻²,β⁷] with ord(β) = 20"""
    b = root_of_unity(ctx, 20)
    return SquareMatrix.diag([1, b, b ** -2, b ** 7], ctx)


@matrix('B80_prime', conductor=20)
def B80_prime(ctx):
    """diag[β,β⁻²,β⁷,1]"""
    b = root_of_unity(ctx, 20)
    return SquareMatrix.diag([b, b ** -2, b ** 7, 1], ctx)


@matrix('C80')
def C80(ctx):
    """[e4,e1,e2,e3]"""
    return SquareMatrix.from_columns([4, 1, 2, 3], ctx)


# Checks

@check('order80-invariance', conductor=20, aliases=('thm_6_1',))
def order80_invariance(c: Checker):
    """f_{B⁻¹} = βf, f_{C⁻¹} = f, CBC⁻¹ = βB¹⁷, and ⟨(B),(C)⟩ has order 80."""
    ctx = c.ctx
    N = ctx.conductor
    beta = root_of_unity(ctx, 20)
    f = form_catalog('F80', conductor=N)
    B = matrix_catalog('B80', conductor=N)
    C = matrix_catalog('C80', conductor=N)
    c.expect(substitute_direct(f, B) == f * beta, "f_{B⁻¹} = βf")
    c.expect(substitute_direct(f, C) == f, "f_{C⁻¹} = f")
    c.expect(C @ B @ C.inverse() == (B ** 17).scale(beta), "CBC⁻¹ = βB¹⁷")
    gB, gC = normalize(B), normalize(C)
    gBp = normalize(matrix_catalog('B80_prime', conductor=N))
    c.expect(gBp in closure([gB]) and proj_order(gBp) == proj_order(gB), "⟨(B)⟩ = ⟨(B′)⟩")
    orders = {'B': proj_order(gB), 'C': proj_order(gC)}
    c.record('orders', orders)
    c.expect(orders == {'B': 20, 'C': 4}, "ord(B) = 20, ord(C) = 4")
    G = closure([gB, gC], log=c.log)
    c.record('order', G.order)
    c.expect(G.order == 80, "|G₈₀| = 80")
    c.record('order_statistics', order_statistics(G))
    sylow = closure([gB ** 5, gC], log=c.log)
    c.expect(sylow.order == 16 and gB ** 5 @ gC == gC @ gB ** 5, "⟨(B⁵)⟩×⟨(C)⟩ is abelian of order 16")
    c.expect(all(proportionality(substitute_direct(f, g.rep), f) is not None for g in G), "every element of G₈₀ fixes (f)")

    H = hessian(f)
    h = form_catalog('h80', conductor=N)
    c.constant('hessian_constant', proportionality(H, h), 81)
    # Hess(f_{A⁻¹}) = det(A)²·Hess(f)_{A⁻¹}
    A = C @ B
    c.expect(hessian(substitute_direct(f, A)) == substitute_direct(H, A) * A.det() ** 2, "Hessian transforms by det²")


@check('order80-singular-points', conductor=20, aliases=('thm_6_1_singular_points',))
def order80_singular_points(c: Checker):
    """Sing V(h) = S₀+S₁+S₂+S₃: coordinate points and the G₂₀-orbits of (1,1,1,1), (u,1,−u,1), (v,1,−v,1)."""
    ctx = c.ctx
    N = ctx.conductor
    h = form_catalog('h80', conductor=N)
    B = matrix_catalog('B80', conductor=N)
    C = matrix_catalog('C80', conductor=N)

    S0 = [tuple(ctx.lift(int(i == k)) for i in range(4)) for k in range(4)]
    c.expect(all(critical_point_check(h, P) for P in S0), "S₀ ⊂ Sing V(h)")

    # u² = −2+√5; v = √−1/u has v² = −2−√5
    ext = QuadraticExtension(ctx, known_constant('sqrt5', ctx) - 2)
    u = ext.sqrt
    v = u.inverse() * known_constant('i', ctx)
    c.expect(v * v == ext.lift(-2 - known_constant('sqrt5', ctx)), "v² = −2−√5")
    w4 = [w ** 4 + 4 * w ** 2 - 1 for w in (u, v)]
    c.expect(all(not x for x in w4), "w⁴+4w²−1 = 0 for w = u, v")

    one = ext.lift(1)
    seeds = {
        'S1': [one, one, one, one],
        'S2': [u, one, -u, one],
        'S3': [v, one, -v, one],
    }
    sets = {}
    for name, seed in seeds.items():
        pts = point_orbit([B], seed)
        sets[name] = pts
        c.expect(all(critical_point_check(h, P) for P in pts), f"{name} ⊂ Sing V(h)")
    sizes = {'S0': len(S0), **{k: len(pts) for k, pts in sets.items()}}
    c.record('g20_orbit_sizes', sizes)
    c.expect(sizes == {'S0': 4, 'S1': 20, 'S2': 20, 'S3': 20}, "G₂₀-orbits of sizes 4·1, 20, 20, 20")
    c.expect(len(set().union(*sets.values())) == 60, "S₁, S₂, S₃ are disjoint")

    big = point_orbit([B, C], seeds['S2'])
    c.record('g80_orbit_sizes', {
        'S0': len(point_orbit([B, C], S0[3])),
        'S1': len(point_orbit([B, C], seeds['S1'])),
        'S2+S3': len(big),
    })
    c.expect(set(big) == set(sets['S2']) | set(sets['S3']), "(C) exchanges S₂ and S₃")
    c.expect(set(point_orbit([B, C], seeds['S1'])) == set(sets['S1']), "S₁ is G₈₀-stable")

    # tangent cone at Q₀ = (0,0,0,1): the terms of highest t-degree
    top = max(m[3] for m in h.terms)
    cone0 = Form(4, 8, ctx, {m: a for m, a in h.terms.items() if m[3] == top})
    c.record('tangent_cone_q0', cone0)
    c.expect(cone0 == parse_form('-4*y*z^2*t^5', 4, N), "T_{Q₀} = V(yz²)")

    # tangent cone at Q₁: the t⁶ part of h(x+t,y+t,z+t,t)
    shift = SquareMatrix.of([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]], ctx)
    moved = substitute_direct(h, shift)
    low = max(m[3] for m in moved.terms)
    cone1 = Form(4, 8, ctx, {m: a for m, a in moved.terms.items() if m[3] == low})
    c.record('tangent_cone_q1', cone1)
    b = parse_form('8*(-3*x^2 - 3*y^2 - 3*z^2 + x*y + y*z + 4*x*z)*t^6', 4, N)
    c.expect(low == 6 and cone1 == b, "T_{Q₁} = V(b) with b = 8(−3x²−3y²−3z²+xy+yz+4xz)")
    q = [[-3 * 2, 1, 4], [1, -3 * 2, 1], [4, 1, -3 * 2]]
    c.expect(SquareMatrix.of(q, ctx).det() != 0, "b is a nondegenerate quadric")
