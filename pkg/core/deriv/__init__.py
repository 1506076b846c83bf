from core.deriv.engine import (
    Method, DerivResult, d_lorentz, d_arctan, d_lorentz_pow, d_arccos, d_sech, d_sech_pow,
    d_sec, d_tan_leibniz, d_tan_direct, d_cot,
)
from core.deriv.derivative_polys import (
    PiPoly, QPoly, LambdaElem, DeltaElem, GfReport, LieFlowReport,
    pi_poly, q_poly, pi_poly_via_ring, q_poly_via_ring, lambda_elem, delta_elem,
    gf_check_pi, gf_check_q, gf_check_lambda, gf_check_delta, pn_gf_check,
    lie_flow_check, hoppe_coefficient, hoppe_sec, dp_eval_tan, dp_eval_sec,
    evaluate_lambda, evaluate_delta,
)
from core.deriv.routes import FnId, DerivRequest, available_methods, evaluate
