"""Exact computations around log canonical thresholds at the origin."""

from .algebra import INF, Ideal, ParseError, Polynomial, parse_polynomial
from .estimator import LctBracket, estimate_lct, jet_profile, jet_upper_bound
from .explore import accumulation_scan, enumerate_monomial_ideals, lct_spectrum
from .groebner import Budget, BudgetExceededError, buchberger, dimension
from .jets import fiber_over_origin, jet_ideal
from .limits import (blowup_ladder, cylinder_extend, power_scale, t_power_shift,
                     thom_sebastiani_shift, truncation_bracket)
from .newton import monomial_lct

__all__ = [
    "INF", "Ideal", "ParseError", "Polynomial", "parse_polynomial",
    "LctBracket", "estimate_lct", "jet_profile", "jet_upper_bound",
    "accumulation_scan", "enumerate_monomial_ideals", "lct_spectrum",
    "Budget", "BudgetExceededError", "buchberger", "dimension",
    "fiber_over_origin", "jet_ideal",
    "blowup_ladder", "cylinder_extend", "power_scale", "t_power_shift",
    "thom_sebastiani_shift", "truncation_bracket", "monomial_lct",
]
