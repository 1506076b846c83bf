"""
Identity and agreement suites behind ``derivpoly check``.

Each suite is a function (n_max, tol, jobs) -> CheckReport. Exact suites
ignore ``tol``; float suites compare with
|a − b| <= tol · max(|a|, |b|, floor), floor = CONFIG['abs_floor']: relative
for magnitudes above the floor, absolute below it.
"""

import logging
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from core.algebra.ext_ring import SIGMA_MINUS, ExtElem, FirstOrderOperator
from core.algebra.poly import ONE, XI, ZERO, Poly
from core.checks.report import CheckReport
from core.combinatorics.stirling import (
    bell_number, stirling2, stirling2_explicit, touchard, xd_expand_apply,
)
from core.config import CONFIG
from core.deriv import derivative_polys as dp
from core.deriv import engine
from core.deriv.engine import Method
from core.deriv.routes import DerivRequest, FnId, evaluate, max_relative_deviation
from core.errors import ConfigurationError, DerivPolyError
from core.oracle.jet import nth_derivative
from core.special.aux_polys import (
    chebyshev_u_poly, falling_factorial, hermite2, hermite_laplace_coefficients,
    pn, pn_coefficients, pn_one_var_poly, pn_via_one_var,
)

logger = logging.getLogger(__name__)

EULER_NUMBERS = (1, 1, 5, 61, 1385)


def grid(fn: str, points: Optional[int] = None) -> np.ndarray:
    start, stop = CONFIG['grids'][fn]
    return np.linspace(start, stop, points or CONFIG['grid_points'])


def _close(a: np.ndarray, b: np.ndarray, tol: float) -> np.ndarray:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    scale = np.maximum(np.maximum(np.abs(a), np.abs(b)), CONFIG['abs_floor'])
    return np.abs(a - b) <= tol * scale


def _map(fn: Callable, items: Sequence, jobs: int) -> List:
    """Ordered map, fanned out over threads when jobs > 1"""
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _compare_grid(report: CheckReport, label: str, xs: np.ndarray,
                  got: Sequence[float], expected: Sequence[float], tol: float) -> None:
    ok = _close(got, expected, tol)
    for x, flag, g, e in zip(xs, ok, got, expected):
        report.record(bool(flag), f"{label} x={x:.6g}", f"{e:.17g}", f"{g:.17g}")


# -- exact suites ---------------------------------------------------------

def suite_gf(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    report = CheckReport('gf')
    max_j = CONFIG['lambda_delta_max_j']
    checks = [lambda: dp.gf_check_pi(n_max), lambda: dp.gf_check_q(n_max),
              lambda: dp.pn_gf_check(n_max)]
    checks += [lambda j=j: dp.gf_check_lambda(n_max, j) for j in range(max_j + 1)]
    checks += [lambda j=j: dp.gf_check_delta(n_max, j) for j in range(max_j + 1)]
    for gf in _map(lambda check: check(), checks, jobs):
        label = gf.family if gf.passed else f"{gf.family} order {gf.first_failure}"
        report.record(gf.passed, label,
                      gf.expected, gf.got, f"n_max={n_max}")

    # Lie flow inside the radius; points outside are reported, not failed
    for f_id in dp.LIE_FUNCTIONS:
        for xi in (-0.5, 0.0, 0.7):
            for t in (0.1, 0.3):
                flow = dp.lie_flow_check(t, xi, f_id, terms=max(n_max, 25), tol=max(tol, 1e-12))
                if not flow.within_radius:
                    logger.info("Lie flow t=%s xi=%s outside radius", t, xi)
                    continue
                report.record(flow.passed, f"lie[{f_id}] t={t} xi={xi}",
                              flow.flow_value, flow.series_value)
    return report


def suite_chebyshev(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    report = CheckReport('chebyshev')
    for n in range(n_max + 1):
        lhs = pn(n, 2 * XI, Fraction(-1)) / math.factorial(n)
        report.record(lhs == chebyshev_u_poly(n), f"P_{n}(2x,-1)/{n}! = U_{n}",
                      chebyshev_u_poly(n), lhs)
        # y = −1 collapses the two-variable family onto P_n(z) at z = 2x
        one_var = pn_one_var_poly(n).compose(2 * XI) / math.factorial(n)
        report.record(one_var == lhs, f"P_{n}(2x,-1) = P_{n}(z=2x)", lhs, one_var)
        report.record(hermite_laplace_coefficients(n) == pn_coefficients(n),
                      f"Laplace transform of H_{n}", pn_coefficients(n),
                      hermite_laplace_coefficients(n))
    # (−y)^{n/2} reduction, float
    for n in range(min(n_max, 20) + 1):
        for x, y in ((0.7, -0.5), (-1.3, -2.0)):
            direct = float(pn(n, x, y))
            reduced = pn_via_one_var(n, x, y)
            report.record(bool(_close(direct, reduced, tol)), f"reduction n={n} x={x} y={y}",
                          f"{direct:.17g}", f"{reduced:.17g}")
    return report


def suite_bell(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    report = CheckReport('bell')
    for n in range(n_max + 1):
        value = touchard(n).evaluate(1)
        report.record(value == bell_number(n), f"T_{n}(1)", bell_number(n), value)
    return report


def suite_stirling(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    report = CheckReport('stirling')
    for n in range(n_max + 1):
        for k in range(n + 1):
            report.record(stirling2(n, k) == stirling2_explicit(n, k), f"S2({n},{k})",
                          stirling2_explicit(n, k), stirling2(n, k))
    xi = Fraction(3, 2)
    for p in range(7):
        for n in range(min(n_max, 15) + 1):
            derivs = [falling_factorial(p, r) * xi ** (p - r) if r <= p else 0
                      for r in range(n + 1)]
            got = xd_expand_apply(n, derivs, xi)
            expected = p ** n * xi ** p
            report.record(got == expected, f"(x d)^{n} x^{p}", expected, got)
    return report


def suite_operator(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    report = CheckReport('operator')
    for n in range(n_max + 1):
        report.record(dp.pi_poly_via_ring(n) == dp.pi_poly(n).p, f"Pi_{n} via ring",
                      dp.pi_poly(n).p, dp.pi_poly_via_ring(n))
        report.record(dp.q_poly_via_ring(n) == dp.q_poly(n).q, f"Q_{n} via ring",
                      dp.q_poly(n).q, dp.q_poly_via_ring(n))
    # ξ∂ on the σ = 1−ξ² ring leaves it: σ does not divide ξ·(−ξ)
    leaving = FirstOrderOperator('ξ∂', ExtElem(XI, ZERO, SIGMA_MINUS), 1)
    try:
        leaving.apply(ExtElem.root(SIGMA_MINUS))
        report.record(False, "non-closing weight rejected", 'ConfigurationError', 'accepted')
    except ConfigurationError:
        report.record(True, "non-closing weight rejected", '', '')
    return report


def suite_euler(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    report = CheckReport('euler')
    for n, expected in enumerate(EULER_NUMBERS):
        got = dp.q_poly(2 * n).q[0]
        report.record(got == expected, f"Q_{2 * n}(0)", expected, got)
    for n in range(n_max + 1):
        p, q = dp.pi_poly(n).p, dp.q_poly(n).q
        report.record(p.degree == n + 1 and p.parity() == (n + 1) % 2,
                      f"Pi_{n} degree/parity", (n + 1, (n + 1) % 2), (p.degree, p.parity()))
        report.record(q.degree == n and q.parity() == n % 2,
                      f"Q_{n} degree/parity", (n, n % 2), (q.degree, q.parity()))
    return report


# -- float suites ---------------------------------------------------------

def _lorentz_quotient_rule(m_max: int) -> List[Poly]:
    """N_m with ∂^m 1/(1+x²) = N_m(x)/(1+x²)^{m+1}"""
    sigma = ONE + XI * XI
    numerators = [ONE]
    for m in range(m_max):
        n_m = numerators[-1]
        numerators.append(n_m.derive() * sigma - XI * n_m * (2 * (m + 1)))
    return numerators


_ORACLE_CASES = (
    # (function id, closed form, first order, nu, radical-free)
    ('arctan', lambda m, x, nu: engine.d_arctan(m, x), 1, None, True),
    ('lorentz', lambda m, x, nu: engine.d_lorentz(m, x), 0, None, True),
    ('lorentz_pow', lambda m, x, nu: engine.d_lorentz_pow(m, nu, x), 0, Fraction(3, 2), False),
    ('arccos', lambda m, x, nu: engine.d_arccos(m, x), 1, None, False),
    ('sech', lambda m, x, nu: engine.d_sech(m, x), 0, None, True),
    ('sech_pow', lambda m, x, nu: engine.d_sech_pow(m, nu, x), 0, Fraction(5, 2), False),
    ('cot', lambda m, x, nu: engine.d_cot(m, x), 0, None, False),
)


def suite_oracle(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    report = CheckReport('oracle')
    for f_id, closed_form, first, nu, radical_free in _ORACLE_CASES:
        xs = grid(f_id)
        case_tol = tol / 10 if radical_free else tol

        def run(m, f_id=f_id, closed_form=closed_form, nu=nu, xs=xs):
            got = [float(closed_form(m, float(x), nu)) for x in xs]
            expected = [nth_derivative(f_id, m, float(x), nu=nu) for x in xs]
            return m, got, expected

        for m, got, expected in _map(run, range(first, n_max + 1), jobs):
            _compare_grid(report, f"{f_id}^({m})", xs, got, expected, case_tol)

    # ∂ⁿ e^{−x²} = H_n(−2x, −1) e^{−x²}
    xs = grid('lorentz')
    for m in range(n_max + 1):
        got = [hermite2(m, -2 * float(x), -1.0) * math.exp(-float(x) ** 2) for x in xs]
        expected = [nth_derivative('gauss', m, float(x)) for x in xs]
        _compare_grid(report, f"gauss^({m})", xs, got, expected, tol)

    # exact quotient-rule oracle for the Lorentzian
    numerators = _lorentz_quotient_rule(min(n_max, 8))
    for m, numerator in enumerate(numerators):
        for x in (Fraction(0), Fraction(1, 3), Fraction(-2), Fraction(7, 5)):
            expected = numerator.evaluate(x) / (1 + x * x) ** (m + 1)
            got = engine.d_lorentz(m, x)
            report.record(got == expected, f"lorentz^({m}) exact x={x}", expected, got)
    return report


def suite_routes(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    report = CheckReport('routes')
    for fn in (FnId.TAN, FnId.SEC):
        xs = grid(fn.value)
        cases = [(m, float(x)) for m in range(n_max + 1) for x in xs]

        def run(case, fn=fn):
            m, x = case
            try:
                return case, evaluate(DerivRequest(fn, m, x)), None
            except DerivPolyError as e:
                return case, None, e

        for (m, x), results, error in _map(run, cases, jobs):
            label = f"{fn.value}^({m}) x={x:.6g}"
            if error is not None:
                report.record(False, label, 'agreement', f"{type(error).__name__}: {error}")
                continue
            deviation = max_relative_deviation(results)
            report.record(deviation <= tol, label, f"deviation <= {tol}", f"{deviation:.3e}",
                          ', '.join(f"{r.method.value}={r.value:.17g}" for r in results))
            for r in results:
                if r.method != Method.CLOSED_FORM:
                    continue
                bound = CONFIG['tol_imag'] * max(abs(r.value), CONFIG['abs_floor'])
                report.record(abs(r.residual_im) <= bound, f"{label} {r.method.value} residual",
                              f"<= {bound:.3e}", f"{r.residual_im:.3e}")
    return report


def suite_conventions(n_max: int, tol: float, jobs: int = 1) -> CheckReport:
    """The chosen Λ/Δ sign conventions agree with the oracle; the rejected ones do not"""
    report = CheckReport('conventions')
    m_max = min(n_max, 8)
    points = (0.4, 2.5)  # cos x > 0 and cos x < 0
    alternatives = {'delta(-1)^m': 0, 'lambda_positive_root': 0, 'lambda(-1)^j': 0}
    for j in range(1, CONFIG['lambda_delta_max_j'] + 1):
        for m in range(m_max + 1):
            for x in points:
                oracle = nth_derivative('cos_pow', m, x, j=j)
                delta = dp.evaluate_delta(m, j, x)
                lam = dp.evaluate_lambda(m, j, x)
                report.record(bool(_close(delta, oracle, tol)), f"Delta_{m},{j} x={x}",
                              f"{oracle:.17g}", f"{delta:.17g}")
                report.record(bool(_close(lam, oracle, tol)), f"Lambda_{m},{j} x={x}",
                              f"{oracle:.17g}", f"{lam:.17g}")
                positive_root = dp.lambda_elem(m, j).evaluate(math.tan(x))
                rejected = {
                    'delta(-1)^m': (-1) ** m * delta,
                    'lambda_positive_root': positive_root,
                    'lambda(-1)^j': (-1) ** j * positive_root,
                }
                for name, value in rejected.items():
                    if not _close(value, oracle, tol):
                        alternatives[name] += 1
    for name, misses in alternatives.items():
        report.record(misses > 0, f"rejected convention {name} disagrees", '> 0 mismatches',
                      misses)
    return report


SUITES: Dict[str, Callable[..., CheckReport]] = {
    'gf': suite_gf,
    'oracle': suite_oracle,
    'chebyshev': suite_chebyshev,
    'bell': suite_bell,
    'stirling': suite_stirling,
    'operator': suite_operator,
    'routes': suite_routes,
    'euler': suite_euler,
    'conventions': suite_conventions,
}

DEFAULT_N_MAX = {
    'gf': CONFIG['gf_order'],
    'oracle': CONFIG['max_order'],
    'chebyshev': 50,
    'bell': 20,
    'stirling': 25,
    'operator': CONFIG['max_order'],
    'routes': CONFIG['max_order'],
    'euler': CONFIG['max_order'],
    'conventions': 8,
}


class SuiteRunner:
    """Runs one or all suites with console banners on stderr"""

    def __init__(self, tol: float, jobs: int = 1, stream=None):
        self.tol = tol
        self.jobs = jobs
        self.stream = stream or sys.stderr

    def _say(self, text: str = '') -> None:
        print(text, file=self.stream)

    def print_banner(self, title: str) -> None:
        self._say("\n" + "=" * 80)
        self._say(f"=== {title} ===")
        self._say("=" * 80)

    def run_suite(self, name: str, n_max: Optional[int] = None) -> CheckReport:
        if name not in SUITES:
            raise KeyError(name)
        n = DEFAULT_N_MAX[name] if n_max is None else n_max
        self._say(f"🚀 Running suite {name} (n_max={n}, tol={self.tol:g})")
        start = time.time()
        report = SUITES[name](n, self.tol, self.jobs)
        report.elapsed = time.time() - start
        if report.passed:
            self._say(f"✅ {name}: {report.cases_run} cases passed in {report.elapsed:.1f}s")
        else:
            self._say(f"❌ {name}: {len(report.failures)}/{report.cases_run} cases failed")
            for failure in report.failures[:20]:
                self._say(f"   - {failure.identifier}: expected {failure.expected}, "
                          f"got {failure.got}")
            if len(report.failures) > 20:
                self._say(f"   ... {len(report.failures) - 20} more")
        return report

    def run(self, name: str, n_max: Optional[int] = None) -> List[CheckReport]:
        names = list(SUITES) if name == 'all' else [name]
        self.print_banner(f"Check suites: {', '.join(names)}")
        reports = [self.run_suite(n, n_max) for n in names]
        failed = sum(1 for r in reports if not r.passed)
        self.print_banner("Summary")
        if failed:
            self._say(f"❌ {failed}/{len(reports)} suites failed")
        else:
            self._say(f"🎉 All {len(reports)} suites passed")
        return reports
