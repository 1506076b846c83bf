#!/usr/bin/env python3
"""
Command-line surface: coefficient tables, multi-route derivatives and
check suites.

Usage:
    python scripts/derivpoly.py table --family pi --n-max 5
    python scripts/derivpoly.py deriv --fn sec --order 6 --at 0.3 --method all
    python scripts/derivpoly.py check --suite gf --n-max 20

stdout carries data only; banners and diagnostics go to stderr.
Exit codes: 0 success, 1 failure (check, singularity, consistency), 2 usage.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from core.algebra.poly import Poly
from core.checks.suites import SUITES, SuiteRunner
from core.combinatorics.stirling import stirling_table, touchard
from core.config import CONFIG, get_tolerance
from core.deriv.derivative_polys import family_members
from core.deriv.engine import DerivResult, Method
from core.deriv.routes import DerivRequest, FnId, evaluate, max_relative_deviation
from core.errors import DerivPolyError, DomainError
from core.special.aux_polys import (
    check_nu, chebyshev_u_poly, hermite_poly, pn_nu_poly, pn_one_var_poly, pn_poly,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

FAMILIES = ('stirling2', 'touchard', 'pnxy', 'pnnu', 'hermite', 'chebyshev', 'pnz',
            'pi', 'q', 'lambda', 'delta')
DERIV_METHODS = [m.value for m in Method] + ['all']


def fmt_float(value: float) -> str:
    return format(value, f".{CONFIG['float_digits']}g")


# -- table ------------------------------------------------------------------

Row = Tuple[int, str, List[Fraction]]


def table_rows(family: str, n_max: int, j: Optional[int] = None,
               nu: Optional[Fraction] = None) -> List[Row]:
    """(n, part, coefficients low-to-high) for every member up to n_max"""
    if family in ('lambda', 'delta'):
        return [(n, part, list(p.coeffs))
                for n, part, p in family_members(family, n_max, j)]
    if family in ('pi', 'q'):
        return [(n, '', list(p.coeffs)) for n, _, p in family_members(family, n_max)]
    if family == 'stirling2':
        table = stirling_table(n_max)
        return [(n, '', [Fraction(c) for c in table.row(n)]) for n in range(n_max + 1)]

    builders = {
        'touchard': lambda n: touchard(n).coeffs,
        'pnxy': pn_poly,
        'pnnu': lambda n: pn_nu_poly(n, nu),
        'hermite': hermite_poly,
        'chebyshev': chebyshev_u_poly,
        'pnz': pn_one_var_poly,
    }
    rows = []
    for n in range(n_max + 1):
        poly: Poly = builders[family](n)
        rows.append((n, '', list(poly.coeffs)))
    return rows


def rows_to_frame(rows: Sequence[Row], with_part: bool) -> pd.DataFrame:
    width = max((len(c) for _, _, c in rows), default=0)
    columns = ['n'] + (['part'] if with_part else []) + [f"c{i}" for i in range(width)]
    records = []
    for n, part, coeffs in rows:
        cells = [str(c) for c in coeffs] + [''] * (width - len(coeffs))
        records.append([n] + ([part] if with_part else []) + cells)
    return pd.DataFrame(records, columns=columns)


def rows_to_json(family: str, rows: Sequence[Row], with_part: bool, **params) -> dict:
    entries = []
    for n, part, coeffs in rows:
        entry = {'n': n}
        if with_part:
            entry['part'] = part
        entry['coefficients'] = [[c.numerator, c.denominator] for c in coeffs]
        entries.append(entry)
    doc = {'family': family}
    doc.update({k: v for k, v in params.items() if v is not None})
    doc['entries'] = entries
    return doc


def cmd_table(args, out) -> int:
    if args.family in ('lambda', 'delta') and args.j is None:
        raise UsageError(f"--j is required for family {args.family}")
    if args.family == 'pnnu' and args.nu is None:
        raise UsageError("--nu is required for family pnnu")
    nu = Fraction(args.nu) if args.nu is not None else None
    if args.family == 'pnnu':
        try:
            check_nu(nu)
        except DomainError as e:
            raise UsageError(str(e))
    rows = table_rows(args.family, args.n_max, args.j, nu)
    with_part = args.family == 'delta'
    if args.format == 'json':
        doc = rows_to_json(args.family, rows, with_part, j=args.j,
                           nu=str(nu) if nu is not None else None)
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        rows_to_frame(rows, with_part).to_csv(out, index=False, lineterminator="\n")
    return EXIT_OK


# -- deriv ------------------------------------------------------------------

def deriv_record(request: DerivRequest, result: DerivResult) -> dict:
    """One {fn, m, x, method, value, residual_im} record"""
    return {'fn': request.fn.value, 'm': request.order, 'x': request.at,
            'method': result.method.value, 'value': result.value,
            'residual_im': result.residual_im}


def cmd_deriv(args, out) -> int:
    method = None if args.method == 'all' else Method(args.method)
    nu = Fraction(args.nu) if args.nu is not None else None
    try:
        request = DerivRequest(FnId(args.fn), args.order, args.at, method, nu, args.j)
    except DomainError as e:
        raise UsageError(str(e))

    results = evaluate(request)
    deviation = max_relative_deviation(results) if len(results) > 1 else None
    if args.format == 'json':
        records = [deriv_record(request, r) for r in results]
        if deviation is not None:
            for record in records:
                record['max_rel_deviation'] = deviation
        doc = records if request.method is None else records[0]
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in results:
            out.write(f"{r.method.value:<12s} {fmt_float(r.value)} "
                      f"residual_im={fmt_float(r.residual_im)}\n")
        if deviation is not None:
            out.write(f"max_rel_deviation {deviation:.3e}\n")
    return EXIT_OK


# -- check ------------------------------------------------------------------

def cmd_check(args, out) -> int:
    tol = args.tol if args.tol is not None else get_tolerance()
    runner = SuiteRunner(tol, jobs=args.jobs)
    reports = runner.run(args.suite, args.n_max)
    if args.format == 'json':
        out.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            status = 'PASS' if r.passed else 'FAIL'
            out.write(f"{r.suite:<12s} {status} cases={r.cases_run} "
                      f"failures={len(r.failures)} elapsed={r.elapsed:.2f}s\n")
            for failure in r.failures:
                out.write(f"  {failure.identifier}\texpected={failure.expected}\t"
                          f"got={failure.got}\t{failure.context}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


# -- parser -----------------------------------------------------------------

class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='derivpoly',
        description='Exact higher-order derivatives of trigonometric and hyperbolic functions',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Coefficients of the tangent derivative polynomials
  python scripts/derivpoly.py table --family pi --n-max 5

  # Lambda carriers for cos^3 x as JSON
  python scripts/derivpoly.py table --family lambda --j 3 --n-max 6 --format json

  # Every route for the 6th derivative of sec at 0.3
  python scripts/derivpoly.py deriv --fn sec --order 6 --at 0.3 --method all

  # Exact generating-function suite
  python scripts/derivpoly.py check --suite gf --n-max 20

Environment:
  DERIVPOLY_TOL  overrides the default relative tolerance (1e-9)
        """
    )
    parser.add_argument('--verbose', action='store_true', help='Enable DEBUG logging on stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    table = sub.add_parser('table', help='Emit a coefficient table')
    table.add_argument('--family', required=True, choices=FAMILIES)
    table.add_argument('--n-max', type=int, required=True)
    table.add_argument('--j', type=int, help='Power of cos for lambda / delta')
    table.add_argument('--nu', help='Exponent for pnnu, as an integer or p/q')
    table.add_argument('--format', choices=['csv', 'json'], default='csv')

    deriv = sub.add_parser('deriv', help='Evaluate a derivative by one or all routes')
    deriv.add_argument('--fn', required=True, choices=[f.value for f in FnId])
    deriv.add_argument('--order', type=int, required=True)
    deriv.add_argument('--at', type=float, required=True)
    deriv.add_argument('--method', choices=DERIV_METHODS, default='closed_form')
    deriv.add_argument('--nu', help='Exponent for sech_pow / lorentz_pow')
    deriv.add_argument('--j', type=int, help='Power for cos_pow')
    deriv.add_argument('--format', choices=['text', 'json'], default='text')

    check = sub.add_parser('check', help='Run an identity / agreement suite')
    check.add_argument('--suite', required=True, choices=list(SUITES) + ['all'])
    check.add_argument('--n-max', type=int, help='Override the suite default order')
    check.add_argument('--tol', type=float, help='Relative tolerance for float suites')
    check.add_argument('--jobs', type=int, default=1, help='Worker threads per suite')
    check.add_argument('--format', choices=['text', 'json'], default='text')
    return parser


COMMANDS = {'table': cmd_table, 'deriv': cmd_deriv, 'check': cmd_check}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Main function with argument parsing"""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')

    try:
        if getattr(args, 'n_max', None) is not None and args.n_max < 0:
            raise UsageError("--n-max must be non-negative")
        nu = getattr(args, 'nu', None)
        if nu is not None:
            try:
                Fraction(nu)
            except ValueError:
                raise UsageError(f"--nu must be an integer, decimal or p/q, got {nu!r}")
        logger.debug("running %s", args.command)
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        print(f"❌ Usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DerivPolyError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except KeyboardInterrupt:
        print("\n\n⚠️  Interrupted by user (Ctrl+C)", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
