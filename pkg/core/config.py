"""
Simple configuration for tolerances, grids and default orders.
"""

import os

# Configuration options
CONFIG = {
    # relative tolerance used by float comparisons (check suites, CLI `all`)
    'tolerance': 1e-9,
    # comparison scale never drops below this, so values under 1 in magnitude
    # are compared absolutely
    'abs_floor': 1.0,
    'tolerance_env': 'DERIVPOLY_TOL',
    # |cos x| or |sin x| below this is treated as a pole
    'tol_singular': 1e-8,
    # imaginary residual allowed on complex-intermediate routes (relative)
    'tol_imag': 1e-9,
    'float_digits': 17,
    'max_order': 12,
    'gf_order': 20,
    'lambda_delta_max_j': 4,
    'grid_points': 20,
    # evaluation grids per function, as (start, stop); poles avoided by >= 0.1
    'grids': {
        'tan': (0.1, 1.4),
        'sec': (0.1, 1.4),
        'cot': (0.2, 2.9),
        'sech': (-1.0, 1.0),
        'sech_pow': (-1.0, 1.0),
        'arctan': (-2.0, 2.0),
        'lorentz': (-2.0, 2.0),
        'lorentz_pow': (-2.0, 2.0),
        'arccos': (-0.85, 0.85),
        'cos_pow': (0.1, 1.4),
    },
}


def get_tolerance() -> float:
    """Default relative tolerance, honouring the DERIVPOLY_TOL override"""
    raw = os.environ.get(CONFIG['tolerance_env'])
    if raw:
        try:
            return float(raw)
        except ValueError:
            pass
    return CONFIG['tolerance']
