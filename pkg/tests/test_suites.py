"""Check suites at reduced orders."""

import io

import pytest

from core.checks import SUITES, CheckReport, SuiteRunner, grid
from core.config import CONFIG, get_tolerance

SMALL_N = {
    'gf': 8, 'oracle': 5, 'chebyshev': 12, 'bell': 12, 'stirling': 10,
    'operator': 6, 'routes': 4, 'euler': 8, 'conventions': 4,
}


@pytest.mark.parametrize('name', sorted(SUITES))
def test_suite_passes(name):
    report = SUITES[name](SMALL_N[name], 1e-9)
    assert report.cases_run > 0
    assert report.passed, report.failures[:5]


def test_suites_are_deterministic_under_threads():
    serial = SUITES['oracle'](3, 1e-9, 1)
    threaded = SUITES['oracle'](3, 1e-9, 4)
    assert [f.identifier for f in serial.failures] == [f.identifier for f in threaded.failures]
    assert serial.cases_run == threaded.cases_run


def test_report_records_failures():
    report = CheckReport('demo')
    report.record(True, 'ok', 1, 1)
    report.record(False, 'bad', 1, 2, 'context')
    assert report.cases_run == 2
    assert not report.passed
    assert report.to_dict()['failures'][0] == {
        'identifier': 'bad', 'expected': '1', 'got': '2', 'context': 'context'}


def test_runner_writes_banners_to_stream():
    stream = io.StringIO()
    reports = SuiteRunner(1e-9, stream=stream).run('bell', 10)
    assert reports[0].passed
    assert '=== Check suites: bell ===' in stream.getvalue()


def test_grid_avoids_poles():
    xs = grid('tan')
    assert len(xs) == CONFIG['grid_points']
    assert xs.min() >= 0.1 and xs.max() <= 1.4


def test_tolerance_env_override(monkeypatch):
    monkeypatch.setenv(CONFIG['tolerance_env'], '1e-6')
    assert get_tolerance() == 1e-6
    monkeypatch.setenv(CONFIG['tolerance_env'], 'not-a-number')
    assert get_tolerance() == CONFIG['tolerance']
    monkeypatch.delenv(CONFIG['tolerance_env'])
    assert get_tolerance() == CONFIG['tolerance']
