"""Command-line surface, driven in-process and once through a subprocess."""

import io
import json
import math
import os
import subprocess
import sys

import pytest

from core.cli.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_table_pi_csv():
    code, text = run('table', '--family', 'pi', '--n-max', '2')
    assert code == EXIT_OK
    lines = text.strip().splitlines()
    assert lines[0] == 'n,c0,c1,c2,c3'
    assert lines[1] == '0,0,1,,'
    assert lines[2] == '1,1,0,1,'
    assert lines[3] == '2,0,2,0,2'


def test_table_q_json():
    code, text = run('table', '--family', 'q', '--n-max', '2', '--format', 'json')
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc['family'] == 'q'
    coefficients = [[num for num, den in e['coefficients']] for e in doc['entries']]
    assert coefficients == [[1], [0, 1], [1, 0, 2]]
    assert all(den == 1 for e in doc['entries'] for _, den in e['coefficients'])


def test_table_stirling_single_row():
    code, text = run('table', '--family', 'stirling2', '--n-max', '0')
    assert code == EXIT_OK
    assert text.strip().splitlines() == ['n,c0', '0,1']


def test_table_fractions_are_exact_pairs():
    code, text = run('table', '--family', 'pnnu', '--n-max', '2', '--nu', '1/2',
                     '--format', 'json')
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc['nu'] == '1/2'
    # P_1^{1/2}(x, 1) = x/2
    assert doc['entries'][1]['coefficients'] == [[0, 1], [1, 2]]


def test_table_delta_has_parts():
    code, text = run('table', '--family', 'delta', '--j', '1', '--n-max', '1')
    assert code == EXIT_OK
    lines = text.strip().splitlines()
    assert lines[0].startswith('n,part,')
    assert lines[4].startswith('1,s,-1')


def test_table_json_roundtrip_reproduces_derivative():
    code, text = run('table', '--family', 'q', '--n-max', '6', '--format', 'json')
    entry = json.loads(text)['entries'][6]
    x = 0.3
    t = math.tan(x)
    q6 = sum(num / den * t ** i for i, (num, den) in enumerate(entry['coefficients']))
    _, deriv = run('deriv', '--fn', 'sec', '--order', '6', '--at', '0.3', '--format', 'json')
    value = json.loads(deriv)['value']
    assert q6 / math.cos(x) == pytest.approx(value, rel=1e-12)


@pytest.mark.parametrize('family', ['lambda', 'delta', 'pnnu'])
def test_table_missing_parameter_is_usage_error(family):
    code, _ = run('table', '--family', family, '--n-max', '3')
    assert code == EXIT_USAGE


def test_deriv_all_methods():
    code, text = run('deriv', '--fn', 'tan', '--order', '1', '--at', '0', '--method', 'all')
    assert code == EXIT_OK
    lines = text.strip().splitlines()
    assert [line.split()[0] for line in lines[:-1]] == ['closed_form', 'leibniz', 'dp', 'oracle']
    for line in lines[:-1]:
        assert float(line.split()[1]) == pytest.approx(1.0)
    assert lines[-1].startswith('max_rel_deviation')


def test_deriv_sech():
    code, text = run('deriv', '--fn', 'sech', '--order', '2', '--at', '0')
    assert code == EXIT_OK
    assert float(text.split()[1]) == pytest.approx(-1.0)


def test_deriv_sec_routes_agree_json():
    code, text = run('deriv', '--fn', 'sec', '--order', '6', '--at', '0.3', '--method', 'all',
                     '--format', 'json')
    assert code == EXIT_OK
    records = json.loads(text)
    assert [r['method'] for r in records] == ['closed_form', 'dp', 'hoppe', 'oracle']
    for record in records:
        assert set(record) == {'fn', 'm', 'x', 'method', 'value', 'residual_im',
                               'max_rel_deviation'}
        assert (record['fn'], record['m'], record['x']) == ('sec', 6, 0.3)
        assert record['max_rel_deviation'] < 1e-9


def test_deriv_single_method_json_record():
    code, text = run('deriv', '--fn', 'sec', '--order', '2', '--at', '0.3', '--format', 'json')
    assert code == EXIT_OK
    record = json.loads(text)
    assert set(record) == {'fn', 'm', 'x', 'method', 'value', 'residual_im'}
    assert record['method'] == 'closed_form'
    assert record['m'] == 2
    sec, tan = 1 / math.cos(0.3), math.tan(0.3)
    assert record['value'] == pytest.approx(sec * tan ** 2 + sec ** 3, rel=1e-12)


def test_deriv_singularity_exits_one():
    code, _ = run('deriv', '--fn', 'sec', '--order', '2', '--at', repr(math.pi / 2))
    assert code == EXIT_FAILURE


def test_deriv_usage_errors():
    assert run('deriv', '--fn', 'sech_pow', '--order', '2', '--at', '0.1')[0] == EXIT_USAGE
    assert run('deriv', '--fn', 'sech', '--order', '2', '--at', '0.1',
               '--method', 'hoppe')[0] == EXIT_USAGE
    assert run('deriv', '--fn', 'nope', '--order', '1', '--at', '0')[0] == EXIT_USAGE
    assert run('deriv', '--fn', 'lorentz_pow', '--order', '1', '--at', '0',
               '--nu', 'abc')[0] == EXIT_USAGE


@pytest.mark.parametrize('at', ['inf', '-inf', 'nan'])
def test_deriv_non_finite_point_is_usage_error(at):
    assert run('deriv', '--fn', 'tan', '--order', '1', '--at', at)[0] == EXIT_USAGE


@pytest.mark.parametrize('argv', [
    ('deriv', '--fn', 'sech_pow', '--order', '2', '--at', '0.1', '--nu', '0'),
    ('deriv', '--fn', 'lorentz_pow', '--order', '2', '--at', '0.1', '--nu', '-2'),
    ('table', '--family', 'pnnu', '--n-max', '3', '--nu', '0'),
])
def test_gamma_pole_nu_is_usage_error(argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_deriv_sech_far_from_origin():
    code, text = run('deriv', '--fn', 'sech', '--order', '2', '--at', '720')
    assert code == EXIT_OK
    assert 0.0 <= float(text.split()[1]) < 1e-300
    # no float jet exists that far out
    assert run('deriv', '--fn', 'sech', '--order', '2', '--at', '720',
               '--method', 'oracle')[0] == EXIT_FAILURE


@pytest.mark.parametrize('suite,n_max', [('chebyshev', '50'), ('bell', '20'), ('gf', '10')])
def test_check_suites_pass(suite, n_max):
    code, text = run('check', '--suite', suite, '--n-max', n_max)
    assert code == EXIT_OK
    assert 'PASS' in text


def test_check_json_report():
    code, text = run('check', '--suite', 'euler', '--format', 'json')
    assert code == EXIT_OK
    [report] = json.loads(text)
    assert report['suite'] == 'euler'
    assert report['passed'] and report['failures'] == []


def test_check_failure_exits_one():
    # a negative tolerance cannot be met by any float comparison
    code, text = run('check', '--suite', 'routes', '--n-max', '1', '--tol', '-1')
    assert code == EXIT_FAILURE
    assert 'FAIL' in text


def test_subprocess_smoke():
    result = subprocess.run(
        [sys.executable, os.path.join('scripts', 'derivpoly.py'), 'table', '--family', 'q',
         '--n-max', '2'],
        cwd=PROJECT_ROOT, capture_output=True, text=True, check=True)
    assert result.stdout.strip().splitlines()[-1] == '2,1,0,2'
