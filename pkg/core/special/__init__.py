from core.special.aux_polys import (
    check_nu, rising_factorial, falling_factorial, real_power,
    hermite2, hermite2_recurrence, pn, pn_nu, pn_one_var, pn_via_one_var,
    chebyshev_u, pn_lower_family, hermite_laplace_coefficients, pn_coefficients,
    pn_poly, pn_nu_poly, hermite_poly, pn_one_var_poly, chebyshev_u_poly,
)
