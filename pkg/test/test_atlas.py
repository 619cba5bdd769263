"""Tests for `quartaut.atlas` — catalogs, the check registry, and the exact checks themselves."""

from fractions import Fraction

import pytest

from quartaut.atlas import (
    ALIASES, CHECKS, FORMS, MATRICES, CatalogId, Checker, UnknownCatalogId, VerificationReport, form_catalog,
    make_Z, matrix_catalog, resolve_check, run_all, split_args, theorem_check, to_jsonable, verify_psl27,
    verify_s5_coxeter,
)
from quartaut.atlas import registry
from quartaut.atlas.registry import CheckEntry
from quartaut.cyclofield import ConductorError, context_new
from quartaut.matrix import SquareMatrix
from quartaut.parse import parse_form

FAST = sorted(id for id, entry in CHECKS.items() if not entry.slow)


def test_split_args():
    assert split_args('e(5,1),2') == ['e(5,1)', '2']
    assert split_args(' 1 , -1/2 ') == ['1', '-1/2']


def test_catalog_id():
    cid = CatalogId.parse('D_jl:2,3', 5)
    assert cid.name == 'D_jl'
    assert cid.params == (2, 3)
    assert CatalogId.parse('klein') == CatalogId('klein')
    assert CatalogId.parse('M:e(4,1)', 4).params == (context_new(4).zeta(1),)
    with pytest.raises(UnknownCatalogId):
        CatalogId.parse(':1')


def test_form_catalog():
    assert form_catalog('klein') == parse_form('x^3*y + y^3*z + z^3*x', 3)
    assert form_catalog('F5', [1, 0, 3]) == parse_form('x^3*y + y^3*z + z^3*t + t^3*x + x^2*z^2 + 3*x*y*z*t')
    assert form_catalog(CatalogId.parse('M:1/2')) == parse_form('x^4 + y^4 + z^4 + t^4 + 1/2*x*y*z*t')
    assert form_catalog('F80', conductor=20).conductor == 20
    with pytest.raises(UnknownCatalogId):
        form_catalog('no_such_form')
    with pytest.raises(ValueError):
        form_catalog('M')


def test_matrix_catalog():
    A5 = matrix_catalog('A5')
    assert A5.conductor == 5
    assert (A5 ** 5).is_identity()
    assert matrix_catalog('A5', conductor=20).conductor == 20
    with pytest.raises(ConductorError):
        matrix_catalog('A5', conductor=3)
    assert set(FORMS) >= {'F0', 'F1', 'F5', 'F7', 'F80', 'M', 'klein', 'edge'}
    assert set(MATRICES) >= {'A5', 'A7', 'B7', 'C0', 'B80', 'C80', 'T1', 'T2', 'T3', 'T4'}


def test_to_jsonable():
    ctx = context_new(5)
    assert to_jsonable(Fraction(1, 2)) == '1/2'
    assert to_jsonable(ctx.zeta(1)) == 'e(5,1)'
    assert to_jsonable({'f': parse_form('x^4'), 'n': [1, True]}) == {'f': 'x^4', 'n': [1, True]}
    assert to_jsonable(SquareMatrix.identity(2, ctx))['entries'] == [['1', '0'], ['0', '1']]
    with pytest.raises(TypeError):
        to_jsonable(object())


def test_checker():
    c = Checker(context_new(1))
    assert c.expect(True, "holds")
    assert not c.expect(False, "does not hold")
    c.constant('k', Fraction(3), Fraction(3))
    c.constant('j', Fraction(2), Fraction(5))
    assert c.failures == ["does not hold"]
    assert c.notes == ["j: computed 2, printed 5"]
    c.constant('h', None)
    assert c.failures[-1] == "h: not proportional"


def test_report():
    with pytest.raises(ValueError):
        VerificationReport('x', 'maybe')
    r = VerificationReport('x', 'skipped')
    assert r.ok
    assert r.to_json() == {'id': 'x', 'status': 'skipped', 'witness': {}, 'ms': 0}
    assert not VerificationReport('x', 'failed', error='boom').ok


def test_aliases():
    assert resolve_check('lemma_3_9').id == 'quintic-invariance'
    assert resolve_check('thm_6_1').id == 'order80-invariance'
    assert resolve_check('screen-q5').id == 'screen-q5'
    assert all(id in CHECKS for id in ALIASES.values())
    with pytest.raises(UnknownCatalogId):
        resolve_check('no_such_check')


def test_s5_coxeter():
    T = [matrix_catalog(k, conductor=4) for k in ('T1', 'T2', 'T3', 'T4')]
    assert verify_s5_coxeter(T)
    assert not verify_s5_coxeter([T[0]] * 4)
    with pytest.raises(ValueError):
        verify_s5_coxeter(T[:3])


def test_psl27():
    X = matrix_catalog('A7')
    Y = matrix_catalog('B7', conductor=7)
    Z = matrix_catalog('C0')
    assert verify_psl27(X, Y, Z)
    assert not verify_psl27(X, Y, SquareMatrix.identity(4, X.ctx))
    assert not verify_psl27(Y, X, Z)


def test_make_Z():
    Z = make_Z(2, 3, 5, 7)
    assert Z == Z.transpose()
    assert Z.rows[3][3] == 1
    assert Z.rows[0] == (3, 5, 7, 2)


@pytest.mark.parametrize("id", FAST)
def test_checks_verify(id):
    report = theorem_check(id)
    assert report.status == 'verified', report.to_json()
    assert report.ok


def test_check_witnesses():
    assert theorem_check('order80-invariance').to_json()['status'] == 'verified'
    report = theorem_check('screen-q5')
    assert report.witness['report']['unscreened'] == [{'class': 'D_{2,3}', 'index': 1}]


def test_check_notes():
    assert theorem_check('index-tables').notes == ["d4_z3t_index: computed 2, printed 3"]
    assert theorem_check('screen-q7').notes == ["q7_first_unscreened: computed D_3, printed D_6"]
    assert theorem_check('screen-q5').notes == []
    notes = theorem_check('quintic-diagonalization').notes
    assert [n.split(':')[0] for n in notes] == ['zw', 'pl']


def broken(c: Checker):
    raise ZeroDivisionError("boom")


def flaky(c: Checker):
    c.expect(False, "never")


def test_failed_reports(monkeypatch):
    monkeypatch.setattr(registry, 'CHECKS', {
        'broken': CheckEntry('broken', broken, 1),
        'flaky': CheckEntry('flaky', flaky, 1),
        'slowpoke': CheckEntry('slowpoke', flaky, 1, slow=True),
    })
    monkeypatch.setattr(registry, 'ALIASES', {})
    report = theorem_check('broken')
    assert report.status == 'failed'
    assert report.error == "ZeroDivisionError: boom"
    assert theorem_check('flaky').failures == ["never"]
    reports = run_all()
    assert [(r.id, r.status) for r in reports] == [('broken', 'failed'), ('flaky', 'failed'), ('slowpoke', 'skipped')]
    assert run_all(slow=True)[2].status == 'failed'
    lines = []
    theorem_check('flaky', log=lines.append)
    assert lines[0] == "flaky: running over Q(ζ_1)"
    assert lines[-1].startswith("flaky: failed in ")
