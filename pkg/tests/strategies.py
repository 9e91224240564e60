from hypothesis import strategies as st

from lctlab.algebra import Ideal, Polynomial

coeffs = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def exponents(n, max_degree=3):
    return st.tuples(*[st.integers(0, max_degree)] * n).filter(lambda e: sum(e) <= max_degree)


@st.composite
def polynomials(draw, n=None, max_terms=4, max_degree=3):
    if n is None:
        n = draw(st.integers(1, 3))
    terms = draw(st.dictionaries(exponents(n, max_degree), coeffs, max_size=max_terms))
    return Polynomial(n, terms)


@st.composite
def monomial_ideals(draw, n=None, max_degree=3, max_gens=4):
    if n is None:
        n = draw(st.integers(1, 3))
    exps = draw(st.lists(exponents(n, max_degree).filter(any), min_size=1, max_size=max_gens))
    return Ideal.monomial(n, exps)

