from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from lctlab.algebra import (INF, DimensionMismatchError, Ideal, ParseError, Polynomial,
                            UnknownVariableError, format_polynomial, monomials_of_degree,
                            order_at_origin, parse_generators, parse_polynomial)

from strategies import polynomials

triples = st.integers(1, 3).flatmap(lambda n: st.tuples(polynomials(n), polynomials(n), polynomials(n)))


@given(triples)
def test_ring_axioms(t):
    f, g, h = t
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial.zero(f.n)
    assert f * Polynomial.constant(f.n, 1) == f


@given(polynomials())
def test_print_parse_round_trip(f):
    assert parse_polynomial(format_polynomial(f), f.n) == f


@given(polynomials(), st.integers(0, 3))
def test_power_matches_repeated_product(f, k):
    p = Polynomial.constant(f.n, 1)
    for _ in range(k):
        p = p * f
    assert f ** k == p


@given(polynomials(n=3), st.permutations([0, 1, 2]))
def test_permutation_is_ring_map(f, perm):
    g = f * f + f
    assert g.permute(perm) == f.permute(perm) * f.permute(perm) + f.permute(perm)


def test_formatting_examples():
    assert format_polynomial(Polynomial(2, {(1, 1): F(3, 2)})) == "3/2*x0*x1"
    assert format_polynomial(Polynomial(2, {(2, 0): -1})) == "-x0^2"
    assert format_polynomial(Polynomial(2, {(2, 0): 1, (0, 1): -1})) == "x0^2 - x1"
    assert format_polynomial(Polynomial.zero(3)) == "0"


def test_parser_grammar():
    assert parse_polynomial("-x0^2 + 3/2*x1", 2) == Polynomial(2, {(2, 0): -1, (0, 1): F(3, 2)})
    assert parse_polynomial("x0*x0*x1", 2) == Polynomial(2, {(2, 1): 1})
    assert parse_polynomial("x1_0 + x0_1", 4, ["x0_0", "x1_0", "x0_1", "x1_1"]) == \
        Polynomial(4, {(0, 1, 0, 0): 1, (0, 0, 1, 0): 1})
    assert len(parse_generators("x0^2, x1^3 ,x0*x1", 2)) == 3


@pytest.mark.parametrize("text", ["x0^^2", "x0 +", "2x0", "x0^-1", "(x0)", "x0/0", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, 2)
    assert info.value.offset >= 0


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse_polynomial("x5", 2)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        Polynomial.variable(2, 0) + Polynomial.variable(3, 0)


def test_order_and_degree():
    f = parse_polynomial("x0^2 + x1^3", 2)
    assert f.order() == 2 and f.degree() == 3
    assert Polynomial.zero(2).order() == INF
    assert order_at_origin(Ideal.parse("x0^3, x0*x1", 2)) == 2
    assert order_at_origin(Ideal.parse("1 + x0", 2)) == 0


def test_monomials_of_degree():
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials_of_degree(3, 3)) == 10


def test_ideal_predicates():
    assert Ideal.parse("x0^2, x1", 2).is_monomial()
    assert not Ideal.parse("x0^2 + x1", 2).is_monomial()
    assert not Ideal.parse("1 + x0", 2).vanishes_at_origin
    assert Ideal(2, []).is_zero()
    assert Ideal.maximal_power(2, 2).exponents() == [(2, 0), (1, 1), (0, 2)]
