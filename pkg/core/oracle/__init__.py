from core.oracle.jet import (
    EXACT, FLOAT, JET_FUNCTIONS, Jet, jet_of, nth_derivative, rational_series,
)
