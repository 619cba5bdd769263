"""Tests for the `quartaut` CLI, driven through click's `CliRunner`."""

import json

import pytest
from click.testing import CliRunner

from quartaut.atlas import Checker, registry
from quartaut.atlas.registry import CheckEntry
from quartaut.atlas.screens import ROWS_Q7
from quartaut.cli import main

SWAP = '[[0,1,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,1]]'
CYCLE = '[[0,0,0,1],[1,0,0,0],[0,1,0,0],[0,0,1,0]]'


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, code=0):
        result = runner.invoke(main, list(args))
        assert result.exit_code == code, result.output
        return result
    return invoke


def out(result):
    return json.loads(result.stdout)


def test_parse_form(run):
    assert out(run('parse', 'x*y*z*t + x^3*y')) == {'n': 4, 'd': 4, 'conductor': 1, 'form': 'x^3*y + x*y*z*t'}
    assert run('parse', '-p', 'x*y*z*t + x^3*y').stdout == 'x³y + xyzt\n'
    assert out(run('parse', '-n', '3', '@klein'))['form'] == 'x^3*y + x*z^3 + y^3*z'
    run('parse', 'x^4 + x^3', code=2)


def test_parse_scalar(run):
    assert run('parse', '-N', '8', '-k', 'scalar', '-p', 'sqrt2^2').stdout == '2\n'
    assert out(run('parse', '-N', '5', '-k', 'scalar', 'e(5,1)')) == {'conductor': 5, 'scalar': 'e(5,1)'}
    run('parse', '-k', 'scalar', 'i', code=2)


def test_parse_tree_and_matrix(run):
    tree = out(run('parse', '-k', 'tree', 'x + 1'))
    assert tree['kind'] == 'add'
    assert [c['kind'] for c in tree['children']] == ['symbol', 'num']
    M = out(run('parse', '-k', 'matrix', SWAP))
    assert M['n'] == 4
    assert M['entries'][0] == ['0', '1', '0', '0']


def test_index_table(run):
    exps, row = ROWS_Q7['D_{2,4}']
    res = out(run('index-table', '--q', '7', '--exps', ','.join(map(str, exps)), '--d', '4'))
    assert res['row'] == list(row)
    assert len(res['columns']) == 16
    assert res['columns'][0] == 'x^4'
    res = out(run('index-table', '--q', '7', '--exps', ','.join(map(str, exps)), '--index', '0'))
    assert 'eigenspace' in res
    run('index-table', '--q', '7', '--exps', '0,a', code=2)
    run('index-table', '--q', '7', '--exps', '0,1,2,4', '--d', '2', code=2)


def test_classify(run):
    res = out(run('classify', '--q', '5'))
    assert res['count'] == 5
    assert [c['class'] for c in res['classes']] == ['D_0', 'D_1', 'D_2', 'D_4', 'D_{2,3}']
    assert out(run('classify', '--q', '7', '--exps', '4,2,1,0'))['class'] == 'D_{2,4}'
    screen = out(run('classify', '--q', '5', '--screen'))
    assert screen['unscreened'] == [{'class': 'D_{2,3}', 'index': 1}]
    run('classify', '--q', '6', code=2)
    run('classify', '--q', '5', '--exps', '0,0,0,0', code=2)


def test_singular(run):
    assert out(run('singular', '--family', 'F5', '--params', '0,0,4')) == {'singular': True, 'R': '0'}
    assert out(run('singular', '--family', 'F7', '--params', '1')) == {'singular': False, 'R': '255'}
    res = out(run('singular', '-N', '4', '--family', 'M', '--params', '4*i', '--witness'))
    assert res['singular']
    assert res['witness'] == [1, 1, 'e(4,1)', 1]
    res = out(run('singular', '--family', 'F5', '--params', '0,0,4', '--witness'))
    assert res['witness'] == ['-1', '1', '-1', '1']
    run('singular', '--family', 'F5', '--params', '1', code=2)


def test_closure(run):
    res = out(run('closure', '-g', SWAP, '-g', CYCLE, '--stats'))
    assert res['order'] == 24
    assert res['generator_orders'] == [2, 4]
    assert res['order_statistics'] == {'1': 1, '2': 9, '3': 8, '4': 6}
    run('closure', '-g', SWAP, '-g', CYCLE, '--cap', '10', code=1)


def test_act(run):
    assert out(run('act', '-d', 'x^3*y', SWAP))['form'] == 'x*y^3'
    assert out(run('act', 'x^3*y', SWAP))['form'] == 'x*y^3'
    assert run('act', '-p', 'x^4', SWAP).stdout == 'y⁴\n'
    run('act', 'x^4', '[[1,1],[1,1]]', code=1)


def test_hessian(run):
    assert out(run('hessian', 'x^4 + y^4 + z^4 + t^4'))['hessian'] == '20736*x^2*y^2*z^2*t^2'
    res = out(run('hessian', '-n', '3', '@klein', '-c', '@klein_h1'))
    assert res['constant'] == '-54'


def test_eigenspace(run):
    res = out(run('eigenspace', '-g', '@A5'))
    assert res['conductor'] == 5
    assert res['dimension'] == 7
    run('eigenspace', '-g', '@A5', '-r', '1', '-r', '1', code=2)


def test_verify(run):
    res = out(run('verify', 'lemma_3_9'))
    assert res['id'] == 'quintic-invariance'
    assert res['status'] == 'verified'
    both = out(run('verify', 'screen-q5', 'screen-q7'))
    assert [r['id'] for r in both] == ['screen-q5', 'screen-q7']
    listing = out(run('verify', '--list'))
    assert any(e['id'] == 'screen-q5' and 'lemma_3_3_screen' in e['aliases'] for e in listing)
    run('verify', 'no_such_id', code=2)
    run('verify', code=2)
    run('verify', '--all', 'lemma_3_9', code=2)


def flaky(c: Checker):
    c.expect(False, "never")


def test_verify_failure(run, monkeypatch):
    monkeypatch.setattr(registry, 'CHECKS', {'flaky': CheckEntry('flaky', flaky, 1)})
    monkeypatch.setattr(registry, 'ALIASES', {})
    res = run('verify', 'flaky', code=1)
    assert out(res)['status'] == 'failed'
    assert out(run('verify', '--all', code=1))['status'] == 'failed'
