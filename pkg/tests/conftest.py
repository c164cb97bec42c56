import itertools
from fractions import Fraction

import hypothesis.strategies as st
import pytest

from hodgecalc.polynomials import Polynomial, VariableSpace

XY = VariableSpace(("x", "y"))
XYZ = VariableSpace(("x", "y", "z"))


def coefficients():
    return st.builds(
        Fraction,
        st.integers(min_value=-4, max_value=4).filter(bool),
        st.integers(min_value=1, max_value=3),
    )


@st.composite
def polys(draw, space=XY, max_degree=3, max_terms=4, nonzero=False):
    n = space.dim
    n_terms = draw(st.integers(min_value=1 if nonzero else 0, max_value=max_terms))
    terms = {}
    for _ in range(n_terms):
        e = tuple(draw(st.integers(min_value=0, max_value=max_degree)) for _ in range(n))
        if sum(e) > max_degree:
            continue
        terms[e] = draw(coefficients())
    poly = Polynomial(space, terms)
    if nonzero and poly.is_zero():
        poly = Polynomial.monomial(space, (1,) + (0,) * (n - 1))
    return poly


@st.composite
def monomial_exponents(draw, dim=2, max_degree=4):
    e = [draw(st.integers(min_value=0, max_value=max_degree)) for _ in range(dim)]
    if sum(e) == 0:
        e[draw(st.integers(min_value=0, max_value=dim - 1))] = 1
    return tuple(e)


@st.composite
def monomial_ideal_exponents(draw, dim=2, max_degree=4, max_gens=3):
    count = draw(st.integers(min_value=1, max_value=max_gens))
    return [draw(monomial_exponents(dim=dim, max_degree=max_degree)) for _ in range(count)]


@pytest.fixture
def xy():
    return XY


@pytest.fixture
def xyz():
    return XYZ
