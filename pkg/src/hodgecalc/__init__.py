"""Exact computation of Hodge ideals and threshold invariants of polynomial ideals.

Subpackages by topic: ``polynomials`` (exact sparse arithmetic), ``groebner``
(reduced bases and ideal algebra), ``milnor`` (Jacobian quotients), ``hodge``
(the graded recursion, sampler, closed forms and fixtures), ``thresholds``
(Newton polyhedra, log canonical thresholds, minimal exponents), ``cli``.
"""

from .errors import ComputationRefused, HodgecalcError, InputError, ParseError
from .groebner import (
    Ideal,
    StandardMonomialBasis,
    divisorial_part,
    ideal_combine,
    ideal_contains,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_trivial_at_origin,
    membership_oracle,
    normal_form,
    reduced_groebner,
    standard_monomials,
)
from .hodge import (
    HodgeQuery,
    HodgeResult,
    SamplerConfig,
    closed_form_diagonal,
    closed_form_power_maximal,
    closed_form_smooth_multiple,
    coeff_ideal,
    fixture_oracle,
    hodge_base_I0,
    hodge_divisor,
    hodge_homogeneous_step,
    hodge_ideal_generic,
    restrict_general_hyperplane,
)
from .milnor import MilnorData, jacobian_ideal, milnor_basis
from .orders import GREVLEX, GRLEX, MonomialOrder
from .polynomials import (
    Polynomial,
    VariableSpace,
    WeightVector,
    partial_derivative,
    poly_parse,
    render,
    space,
    substitute,
    weighted_degree_check,
)
from .thresholds import (
    NewtonPolyhedron,
    ThresholdValue,
    generic_min_exp,
    lct_monomial,
    multiplier_ideal_monomial,
    ord_at_origin,
    threshold_function,
)

__version__ = "0.1.0"
