from core.algebra.poly import (
    Poly, Rational, ComplexF, ZERO, ONE, XI, as_rational,
    poly_add, poly_mul, poly_derive, poly_eval, poly_divmod,
)
from core.algebra.ext_ring import (
    ExtElem, FirstOrderOperator, SIGMA_PLUS, SIGMA_MINUS, TAN_LIFT, COS_LIFT, ext_apply_D,
)
from core.algebra.series import SeriesInT
