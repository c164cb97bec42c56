from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from hodgecalc.errors import ComputationRefused, InputError
from hodgecalc.groebner import Ideal, ideal_equal, membership_oracle
from hodgecalc.milnor import (
    MilnorData,
    has_isolated_singularity,
    infer_weights,
    jacobian_ideal,
    milnor_basis,
)
from hodgecalc.polynomials import Polynomial, VariableSpace, WeightVector, poly_parse

from conftest import XY, XYZ


def test_jacobian_examples():
    jac = jacobian_ideal(poly_parse("x^2 + y^3", XY))
    assert ideal_equal(jac, Ideal.from_strings(XY, ["2*x", "3*y^2"]))

    sp = VariableSpace(("x1", "x2", "x3"))
    f = poly_parse("2*x1^3 + 5*x2^3 + 7*x3^3", sp)
    assert ideal_equal(jacobian_ideal(f), Ideal.from_strings(sp, ["x1^2", "x2^2", "x3^2"]))

    sp4 = VariableSpace(("x1", "x2", "y1", "y2"))
    bilinear = poly_parse("x1*y1 + x2*y2", sp4)
    assert ideal_equal(jacobian_ideal(bilinear), Ideal.maximal_at_origin(sp4))

    with pytest.raises(InputError):
        jacobian_ideal(Polynomial.constant(XY, 5))


def test_morse_point():
    data = milnor_basis(poly_parse("3*x^2 + 7*y^2", XY))
    assert data.milnor_number == 1
    assert data.basis.monomials == ((0, 0),)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_diagonal_milnor_number(N):
    f = poly_parse(f"2*x^{N} + 3*y^{N}", XY)
    data = milnor_basis(f)
    assert data.milnor_number == (N - 1) ** 2
    assert all(max(e) <= N - 2 for e in data.basis.monomials)


def test_cusp_weighted_basis_verified_by_membership():
    f = poly_parse("x^2 + y^3", XY)
    data = milnor_basis(f, WeightVector((3, 2)))
    assert data.basis.monomials == ((0, 0), (0, 1))
    assert data.basis.degrees == (0, 2)
    assert data.milnor_number == 2
    # independent verification: basis monomials are exactly the monomials of
    # degree <= 2 outside the Jacobian ideal, decided by the membership oracle
    gens = list(data.jacobian.generators)
    for e in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
        m = Polynomial.monomial(XY, e)
        inside = membership_oracle(m, gens, sum(e) + 2)
        assert inside == (e not in data.basis.monomials)


def test_rescaling_invariance():
    f = poly_parse("x^3 + 2*y^3", XY)
    base = milnor_basis(f)
    for c in (2, Fraction(-5, 3)):
        scaled = milnor_basis(f * c)
        assert scaled.basis.monomials == base.basis.monomials
        assert scaled.milnor_number == base.milnor_number


def test_non_isolated_is_refused():
    # x^2 y^2 is singular along both axes
    with pytest.raises(ComputationRefused):
        milnor_basis(poly_parse("x^2*y^2", XY))
    assert not has_isolated_singularity(poly_parse("x^2*y^2", XY))
    assert has_isolated_singularity(poly_parse("x^2 + y^5", XY))


def test_non_homogeneous_is_refused():
    with pytest.raises(ComputationRefused):
        milnor_basis(poly_parse("x^2 + y^3", XY), WeightVector((1, 1)))


def test_milnor_json_shape():
    data = milnor_basis(poly_parse("x^2 + y^3", XY), WeightVector((3, 2)))
    doc = data.to_json()
    assert doc["milnor_number"] == 2
    assert doc["basis"] == [
        {"monomial": "1", "degree": 0},
        {"monomial": "y", "degree": 2},
    ]


def test_infer_weights():
    assert infer_weights([(3, 0), (0, 3)], 2) == (WeightVector((1, 1)), 3)
    assert infer_weights([(2, 0), (0, 3)], 2) == (WeightVector((3, 2)), 6)
    assert infer_weights([(2, 0), (3, 0)], 2) is None  # x^2, x^3: no common degree
    # unused variable gets weight one
    weights, degree = infer_weights([(2, 0, 0), (0, 3, 0)], 3)
    assert weights == WeightVector((3, 2, 1)) and degree == 6


@given(st.integers(min_value=2, max_value=4), st.integers(min_value=1, max_value=20))
@settings(max_examples=20, deadline=None)
def test_isolatedness_matches_finiteness(N, scale):
    f = poly_parse(f"{scale}*x^{N} + y^{N}", XY)
    data = milnor_basis(f)
    assert data.basis.finite
    assert data.milnor_number == (N - 1) ** 2
