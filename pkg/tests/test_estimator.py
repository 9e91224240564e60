from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from lctlab.algebra import INF, Ideal
from lctlab.estimator import (LctBracket, default_weights, degeneration_lower_bound,
                              estimate_lct, initial_ideal, jet_fiber_dimension, jet_profile,
                              jet_upper_bound, stable_candidate)
from lctlab.groebner import Budget
from lctlab.newton import monomial_lct

from strategies import monomial_ideals

CUSP = Ideal.parse("x0^2 + x1^3", 2)


def test_single_variable_profile():
    a = Ideal.parse("x0", 1)
    assert jet_fiber_dimension(a, 0)[0] == 0
    assert [r.bound for r in jet_profile(a, 6, m_min=0).records] == [1] * 7


def test_hyperplane_in_two_variables():
    assert jet_upper_bound(Ideal.parse("x0", 2), 4) == F(6, 5)


def test_cusp_profile():
    assert jet_fiber_dimension(CUSP, 5)[0] == 7
    bounds = [r.bound for r in jet_profile(CUSP, 5).records]
    assert bounds[-1] == F(5, 6)
    assert all(b >= F(5, 6) for b in bounds)


@settings(max_examples=30, deadline=None)
@given(monomial_ideals(n=2, max_degree=3))
def test_jet_bound_never_below_oracle(a):
    c = monomial_lct(a)[0]
    for r in jet_profile(a, 4).records:
        assert r.bound >= c


def test_cusp_estimate():
    b = estimate_lct(CUSP, m_max=5)
    assert b.lower == F(1, 2) and b.upper == F(5, 6)
    assert not b.exact
    assert b.upper_provenance == "jet-order-5"
    assert F(5, 6) in b


def test_weight_degeneration():
    assert initial_ideal(CUSP, (3, 2)).to_string() == "x1^3 + x0^2"
    assert initial_ideal(CUSP, (1, 1)).is_monomial()
    assert degeneration_lower_bound(CUSP) == F(1, 2)
    with pytest.raises(ValueError):
        initial_ideal(CUSP, (0, 0))
    assert (1, 1) in default_weights(2)


def test_conventions():
    assert estimate_lct(Ideal(2, [])).lower == 0
    assert estimate_lct(Ideal.parse("1 + x0", 2)).upper == INF
    assert estimate_lct(Ideal.parse("x0^3, x1^2", 2)).exact


def test_budget_failures_are_recorded():
    prof = jet_profile(CUSP, 6, budget=Budget(max_spairs=2))
    assert any(r.error for r in prof.records)
    best, _ = prof.best()
    assert best <= 2


def test_empty_bracket_rejected():
    with pytest.raises(ValueError):
        LctBracket(F(1), F(1, 2), False, "a", "b")


def test_stable_candidate_is_only_a_guess():
    b = estimate_lct(Ideal.parse("x0^2 + x1^2", 2), m_max=5)
    # the node has lct 1, but no monomial degeneration certifies more than 1/2
    assert b.lower == F(1, 2) and b.upper == 1 and not b.exact
    assert b.candidate == 1
    prof = jet_profile(Ideal.parse("x0^2 + x1^2", 2), 5)
    assert stable_candidate(prof) == 1


def test_single_variable_power_profile():
    bounds = [r.bound for r in jet_profile(Ideal.parse("x0^2", 1), 7).records]
    # ceil((m+1)/2)/(m+1): equal to 1/2 exactly when m+1 is even
    assert bounds == [F(-(-(m + 1) // 2), m + 1) for m in range(1, 8)]
    assert min(bounds) == F(1, 2)
