"""Index tables, cyclic-class counts and singularity screens for diagonal groups of prime-power order."""

from typing import Callable

from quartaut.eigenmod import (
    checking_row, class_representatives, index_table, invariant_screen_report, monomial_eigenspace, projective_order,
    singularity_screen,
)
from quartaut.forms import monomials

from .registry import Checker, check

# Checking-monomial indices in `checking_row` order: x⁴ x³y x³z x³t y³x y⁴ y³z y³t z³x z³y z⁴ z³t t³x t³y t³z t⁴
ROWS_Q5 = {
    'D0': ((0, 0, 1, 0), (0, 0, 1, 0, 0, 0, 1, 0, 3, 3, 4, 3, 0, 0, 1, 0)),
    'D1': ((0, 0, 1, 1), (0, 0, 1, 1, 0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 4, 4)),
    'D2': ((0, 0, 1, 2), (0, 0, 1, 2, 0, 0, 1, 2, 3, 3, 4, 0, 1, 1, 2, 3)),
    # printed with 3 in the z³t column
    'D4': ((0, 0, 1, 4), (0, 0, 1, 4, 0, 0, 1, 4, 3, 3, 4, 2, 2, 2, 3, 1)),
    'D_{2,3}': ((0, 1, 2, 3), (0, 1, 2, 3, 3, 4, 0, 1, 1, 2, 3, 4, 4, 0, 1, 2)),
}
ROWS_Q7 = {
    'D_{2,4}': ((0, 1, 2, 4), (0, 1, 2, 4, 3, 4, 5, 0, 6, 0, 1, 3, 5, 6, 0, 2)),
}

# Symbolic rows for prime q, columns x⁴ y⁴ z⁴ t⁴ x³y x³z x³t y³x y³z y³t z³x z³y z³t t³x t³y t³z
SYMBOLIC_COLUMNS = (
    (4, 0, 0, 0), (0, 4, 0, 0), (0, 0, 4, 0), (0, 0, 0, 4),
    (3, 1, 0, 0), (3, 0, 1, 0), (3, 0, 0, 1),
    (1, 3, 0, 0), (0, 3, 1, 0), (0, 3, 0, 1),
    (1, 0, 3, 0), (0, 1, 3, 0), (0, 0, 3, 1),
    (1, 0, 0, 3), (0, 1, 0, 3), (0, 0, 1, 3),
)


def symbolic_row_d_ell(l: int) -> tuple[int, ...]:
    return (0, 0, 4, 4 * l, 0, 1, l, 0, 1, l, 3, 3, l + 3, 3 * l, 3 * l, 3 * l + 1)


def symbolic_row_d_jl(j: int, l: int) -> tuple[int, ...]:
    return (0, 4, 4 * j, 4 * l, 1, j, l, 3, j + 3, l + 3, 3 * j, 3 * j + 1, 3 * j + l, 3 * l, 3 * l + 1, 3 * l + j)


def prime_power_shapes(q: int) -> dict[str, tuple[int, int, int, int]]:
    """Generator exponents A₀ = (1,0,0,0), A_j = (1,j,0,0), B_j = (1,j,j,0) with p | j, and A_{jℓ} = (1,j,ℓ,0)."""
    shapes = {'A0': (1, 0, 0, 0)}
    for j in range(1, q):
        shapes[f'A_{j}'] = (1, j, 0, 0)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    for j in range(p, q, p):
        shapes[f'B_{j}'] = (1, j, j, 0)
    for j in range(2, q):
        for l in range(j + 1, q):
            shapes[f'A_{j},{l}'] = (1, j, l, 0)
    return shapes


def _bound(name: str, d: int) -> int:
    """The order q must exceed for every form invariant under this shape to be singular."""
    if name == 'A0':
        return d
    if ',' in name:
        return d * (d - 1) ** 2
    return d * (d - 1)


def unscreened_shapes(q: int, d: int, select: Callable[[str], bool] = lambda name: True) -> list[tuple[str, int]]:
    """(shape, index) pairs among `prime_power_shapes(q)` whose eigenspace escapes the column screen."""
    out = []
    for name, exps in prime_power_shapes(q).items():
        if not select(name) or projective_order(exps, q) != q:
            continue
        table = index_table(exps, q, d)
        for i in range(q):
            if not singularity_screen(monomial_eigenspace(table, i), 4, d):
                out.append((name, i))
    return out


# Checks

@check('index-tables', aliases=('lemma_2_9', 'lemma_3_2_table', 'lemma_4_3_table'))
def index_tables(c: Checker):
    """Checking-monomial indices of the order-5 and order-7 class representatives, and the symbolic rows for p = 11, 13."""
    for q, rows in ((5, ROWS_Q5), (7, ROWS_Q7)):
        for name, (exps, printed) in rows.items():
            found = tuple(i for _, i in checking_row(index_table(exps, q, 4)))
            c.expect(found == printed, f"{name} row at q={q}")
    mismatches = 0
    for p in (11, 13):
        for l in range(2, p):
            table = index_table((0, 0, 1, l), p, 4)
            mismatches += tuple(table[m] for m in SYMBOLIC_COLUMNS) != tuple(v % p for v in symbolic_row_d_ell(l))
            for j in range(2, p):
                if j == l:
                    continue
                table = index_table((0, 1, j, l), p, 4)
                mismatches += tuple(table[m] for m in SYMBOLIC_COLUMNS) != tuple(v % p for v in symbolic_row_d_jl(j, l))
    c.record('symbolic_mismatches', mismatches)
    c.expect(mismatches == 0, "symbolic D_ℓ and D_{j,ℓ} rows at p = 11, 13")
    # the D_4 row at q=5 is displayed with 3 in the z³t column
    c.constant('d4_z3t_index', index_table((0, 0, 1, 4), 5, 4)[(0, 0, 3, 1)], 3)


@check('monomial-eigenspaces', aliases=('lemma_2_2',))
def monomial_eigenspaces(c: Checker):
    """Index fibers partition the 35 quartic monomials; the invariant fibers of diag[ε,ε²,ε⁴,ε³] and diag[ε⁴,ε²,ε,1]."""
    all_monomials = set(monomials(4, 4))
    for q, exps, want in ((5, (1, 2, 4, 3), 7), (7, (4, 2, 1, 0), 5)):
        table = index_table(exps, q, 4)
        fibers = [monomial_eigenspace(table, j) for j in range(q)]
        c.expect(sum(len(f) for f in fibers) == 35 and set().union(*fibers) == all_monomials, f"fibers partition at q={q}")
        c.record(f'invariant_q{q}', [list(m) for m in fibers[0]])
        c.expect(len(fibers[0]) == want, f"{want} invariant monomials at q={q}")


@check('cyclic-classes', aliases=('lemma_2_12', 'lemma_2_13', 'lemma_2_14'))
def cyclic_classes(c: Checker):
    """Five classes of cyclic subgroups of order 5 in PGL₄ and seven of order 7."""
    names = {q: [lab.name for lab in class_representatives(q)] for q in (5, 7)}
    c.record('classes', names)
    c.expect(names[5] == ['D_0', 'D_1', 'D_2', 'D_4', 'D_{2,3}'], "order 5: D₀, D₁, D₂, D₄, D_{2,3}")
    c.expect(names[7] == ['D_0', 'D_1', 'D_2', 'D_3', 'D_6', 'D_{2,3}', 'D_{2,4}'], "order 7: D₀, D₁, D₂, D₃, D₆, D_{2,3}, D_{2,4}")


@check('screen-q5', aliases=('lemma_3_3_screen',))
def screen_q5(c: Checker):
    """At q = 5 only the invariant eigenspace of D_{2,3} escapes the column screen."""
    report = invariant_screen_report(5, 4, log=c.log)
    c.record('report', report.to_json())
    c.expect([(lab.name, i) for lab, i in report.unscreened] == [('D_{2,3}', 1)], "only (D_{2,3}, 1) unscreened")


@check('screen-q7', aliases=('lemma_4_3_screen',))
def screen_q7(c: Checker):
    """At q = 7 the unscreened eigenspaces are (D₃, 3) and (D_{2,4}, 0)."""
    report = invariant_screen_report(7, 4, log=c.log)
    c.record('report', report.to_json())
    c.expect([(lab.name, i) for lab, i in report.unscreened] == [('D_3', 3), ('D_{2,4}', 0)], "(D₃, 3) and (D_{2,4}, 0) unscreened")
    # the first of them is displayed under the label D_6
    if report.unscreened:
        c.constant('q7_first_unscreened', report.unscreened[0][0].name, 'D_6')


@check('screen-primes', aliases=('prop_5_4', 'lemma_5_1', 'lemma_5_2', 'lemma_5_3'))
def screen_primes(c: Checker):
    """For primes p ≥ 11 every Z_p-invariant quartic is singular by the column screen."""
    counts = {}
    for p in (11, 13, 17, 19):
        report = invariant_screen_report(p, 4, log=c.log)
        counts[p] = len(report.unscreened)
        c.expect(not report.unscreened, f"no unscreened eigenspace at p={p}")
    c.record('unscreened', counts)


@check('screen-prime-powers', aliases=('lemma_8_1',))
def screen_prime_powers(c: Checker):
    """Forms invariant under A₀, A_j, B_j, A_{jℓ} are singular once q exceeds d, d(d−1), d(d−1)² respectively."""
    cases = [(3, 13), (3, 16), (4, 37), (4, 49)]
    found = {}
    for d, q in cases:
        bad = unscreened_shapes(q, d, lambda name: q > _bound(name, d))
        found[f'q{q}_d{d}'] = len(bad)
        c.expect(not bad, f"every shape screened at q={q}, d={d}")
        report = invariant_screen_report(q, d, log=c.log)
        c.expect(not report.unscreened, f"every class screened at q={q}, d={d}")
    c.record('unscreened', found)
    c.record('small_q_a0', unscreened_shapes(4, 4, lambda name: name == 'A0'))
