"""Tests for `quartaut.eigenmod` — index tables, eigenspaces, screens and cyclic classes."""

from itertools import permutations
from random import Random

import pytest

from quartaut.atlas import form_catalog, matrix_catalog
from quartaut.atlas.screens import ROWS_Q5, ROWS_Q7, prime_power_shapes, symbolic_row_d_ell, symbolic_row_d_jl, SYMBOLIC_COLUMNS
from quartaut.cyclofield import context_new
from quartaut.eigenmod import (
    checking_monomials, checking_row, class_representatives, classify_cyclic, diagonal_conjugate, eigenspace_basis,
    forms_rank, index_table, invariant_screen_report, is_prime_power, monomial_eigenspace, projective_order,
    singularity_screen,
)
from quartaut.forms import monomials
from quartaut.parse import parse_form

SEED = 5


def names(report):
    return [(lab.name, i) for lab, i in report.unscreened]


@pytest.mark.parametrize("q,rows", [(5, ROWS_Q5), (7, ROWS_Q7)])
def test_checking_rows(q, rows):
    for name, (exps, printed) in rows.items():
        assert tuple(i for _, i in checking_row(index_table(exps, q, 4))) == printed, name


def test_checking_row_columns():
    row = checking_row(index_table((0, 1, 2, 4), 7, 4))
    assert [m for m, _ in row[:4]] == [(4, 0, 0, 0), (3, 1, 0, 0), (3, 0, 1, 0), (3, 0, 0, 1)]
    assert row[4][0] == (1, 3, 0, 0)
    assert checking_monomials(4, 4, 3) == [(1, 0, 3, 0), (0, 1, 3, 0), (0, 0, 4, 0), (0, 0, 3, 1)]


@pytest.mark.parametrize("p", [11, 13])
def test_symbolic_rows(p):
    for l in range(2, p):
        table = index_table((0, 0, 1, l), p, 4)
        assert [table[m] for m in SYMBOLIC_COLUMNS] == [v % p for v in symbolic_row_d_ell(l)]
        for j in range(2, p):
            if j != l:
                table = index_table((0, 1, j, l), p, 4)
                assert [table[m] for m in SYMBOLIC_COLUMNS] == [v % p for v in symbolic_row_d_jl(j, l)]


def test_eigenspaces_partition():
    for q in (5, 7):
        for label in class_representatives(q):
            table = index_table(label.exps, q, 4)
            fibers = [monomial_eigenspace(table, j) for j in range(q)]
            assert sorted(m for f in fibers for m in f) == sorted(monomials(4, 4))


def test_invariant_monomials():
    a5 = monomial_eigenspace(index_table((1, 2, 4, 3), 5, 4), 0)
    assert a5 == [(3, 1, 0, 0), (2, 0, 2, 0), (1, 1, 1, 1), (1, 0, 0, 3), (0, 3, 1, 0), (0, 2, 0, 2), (0, 0, 3, 1)]
    a7 = monomial_eigenspace(index_table((4, 2, 1, 0), 7, 4), 0)
    assert a7 == [(3, 1, 0, 0), (1, 1, 1, 1), (1, 0, 3, 0), (0, 3, 1, 0), (0, 0, 0, 4)]


def test_singularity_screen():
    # x³y+y³z+z³x+t⁴ has a checking monomial in every column
    f = parse_form('x^3*y + y^3*z + z^3*x + t^4')
    assert singularity_screen(f.support, 4, 4) == []
    assert singularity_screen([(3, 1, 0, 0), (0, 3, 1, 0)], 4, 4) == [3, 4]
    assert singularity_screen([], 4, 4) == [1, 2, 3, 4]
    with pytest.raises(ValueError):
        singularity_screen([], 4, 2)


def test_eigenspace_basis_diagonal():
    A5 = matrix_catalog('A5')
    basis = eigenspace_basis([A5], [1], 4, 4)
    assert len(basis) == 7
    assert [f.support for f in basis] == [[m] for m in monomial_eigenspace(index_table((1, 2, 4, 3), 5, 4), 0)]


def test_eigenspace_basis_septic():
    # x⁴, xyzt, y³t, yz³, zt³
    basis = eigenspace_basis([matrix_catalog('A6')], [1], 4, 4)
    support = {m for f in basis for m in f.terms}
    assert support == {(4, 0, 0, 0), (1, 1, 1, 1), (0, 3, 0, 1), (0, 1, 3, 0), (0, 0, 1, 3)}
    assert (0, 0, 3, 1) not in support


def test_eigenspace_basis_invariants():
    gens = [matrix_catalog(k, conductor=20) for k in ('B80', 'C80')]
    beta = context_new(20).zeta(1)
    (f,) = eigenspace_basis(gens, [beta, 1], 4, 4)
    assert f == form_catalog('F80', conductor=20)


def test_eigenspace_basis_errors():
    A5 = matrix_catalog('A5')
    with pytest.raises(ValueError):
        eigenspace_basis([A5], [1, 1], 4, 4)
    with pytest.raises(ValueError):
        eigenspace_basis([], [], 4, 4)
    with pytest.raises(ValueError):
        eigenspace_basis([A5], [1], 3, 4)


def test_forms_rank():
    fs = [parse_form('x^4 + y^4'), parse_form('x^4 - y^4'), parse_form('y^4')]
    assert forms_rank(fs) == 2
    assert forms_rank([]) == 0


def test_prime_powers():
    assert [q for q in range(1, 30) if is_prime_power(q)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    assert is_prime_power(49) == 7
    assert projective_order((0, 0, 1, 4), 5) == 5
    assert projective_order((1, 1, 1, 1), 5) == 1
    assert projective_order((0, 2, 4, 6), 8) == 4


def test_class_counts():
    assert [lab.name for lab in class_representatives(5)] == ['D_0', 'D_1', 'D_2', 'D_4', 'D_{2,3}']
    assert [lab.name for lab in class_representatives(7)] == ['D_0', 'D_1', 'D_2', 'D_3', 'D_6', 'D_{2,3}', 'D_{2,4}']


def test_classify_invariance():
    rng = Random(SEED)
    for q in (5, 7, 9):
        units = [u for u in range(1, q) if u % 3 or q != 9]
        for _ in range(20):
            exps = [rng.randrange(q) for _ in range(4)]
            if projective_order(exps, q) != q:
                continue
            label = classify_cyclic(q, exps)
            s, u = rng.randrange(q), rng.choice(units)
            for p in permutations(exps):
                assert classify_cyclic(q, [(u * (e + s)) % q for e in p]) == label


def test_classify_examples():
    assert classify_cyclic(5, (1, 2, 4, 3)).name == 'D_{2,3}'
    assert classify_cyclic(7, (4, 2, 1, 0)).name == 'D_{2,4}'
    assert classify_cyclic(5, (0, 0, 0, 1)).name == 'D_0'
    assert classify_cyclic(9, (0, 0, 1, 3)).kind == 'B_j'
    with pytest.raises(ValueError):
        classify_cyclic(6, (0, 0, 1, 2))
    with pytest.raises(ValueError):
        classify_cyclic(5, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        classify_cyclic(5, (0, 0, 1))


def test_screen_reports():
    assert names(invariant_screen_report(5, 4)) == [('D_{2,3}', 1)]
    assert names(invariant_screen_report(7, 4)) == [('D_3', 3), ('D_{2,4}', 0)]
    for p in (11, 13):
        assert invariant_screen_report(p, 4).unscreened == []
    assert invariant_screen_report(49, 4).unscreened == []
    report = invariant_screen_report(5, 4).to_json()
    assert report == {'q': 5, 'd': 4, 'classes': 5, 'unscreened': [{'class': 'D_{2,3}', 'index': 1}]}


def test_prime_power_shapes():
    shapes = prime_power_shapes(9)
    assert shapes['A0'] == (1, 0, 0, 0)
    assert shapes['B_3'] == (1, 3, 3, 0)
    assert 'B_2' not in shapes
    assert shapes['A_2,5'] == (1, 2, 5, 0)


def test_diagonal_conjugate():
    assert diagonal_conjugate((0, 1, 2, 4), (1, 2, 3, 5), 7)
    assert diagonal_conjugate((0, 1, 2, 4), (4, 0, 2, 1), 7)
    assert not diagonal_conjugate((0, 1, 2, 4), (0, 1, 2, 3), 7)
    assert not diagonal_conjugate((0, 1), (0, 1, 2), 7)
