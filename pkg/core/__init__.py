"""Exact repeated-derivative polynomials for circular and hyperbolic functions."""

__version__ = '1.0.0'
