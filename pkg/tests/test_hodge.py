from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from hodgecalc.errors import ComputationRefused, InputError
from hodgecalc.groebner import (
    Ideal,
    ideal_contains,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_trivial_at_origin,
)
from hodgecalc.hodge import (
    ALL_EQUAL,
    UNION_TAKEN,
    HodgeQuery,
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
    power_maximal_degree,
    power_maximal_min_degree_recursive,
    restrict_general_hyperplane,
    smooth_multiple_decomposition,
    specialize_member,
)
from hodgecalc.milnor import milnor_basis
from hodgecalc.polynomials import (
    Polynomial,
    VariableSpace,
    WeightVector,
    poly_parse,
    render,
)

from conftest import XY, XYZ

CFG = SamplerConfig(seed=7)


def canonical(n):
    return VariableSpace(tuple(f"x{i+1}" for i in range(n)))


def maximal_power(space, k):
    return ideal_power(Ideal.maximal_at_origin(space), k)


# -- level zero -------------------------------------------------------------------


def test_base_level_maximal_powers():
    for n in (2, 3):
        space = canonical(n)
        for N in (1, 2, 3, 4, 5):
            got = hodge_base_I0(maximal_power(space, N), 1)
            assert ideal_equal(got, maximal_power(space, max(N - n, 0)))


def test_base_level_order_one_is_trivial():
    got = hodge_base_I0(Ideal.from_strings(XY, ["x"]), 1)
    assert ideal_equal(got, Ideal.unit(XY))


def test_base_level_cusp():
    got = hodge_base_I0(Ideal.from_strings(XY, ["x^2", "y^3"]), 1)
    assert ideal_equal(got, Ideal.from_strings(XY, ["x", "y"]))


def test_base_level_requires_monomial_or_supplied():
    mixed = Ideal.from_strings(XY, ["x^2 + y^3"])
    with pytest.raises(ComputationRefused):
        hodge_base_I0(mixed, 1)
    supplied = Ideal.from_strings(XY, ["x", "y"])
    assert ideal_equal(hodge_base_I0(mixed, 1, supplied=supplied), supplied)


# -- the recursion ----------------------------------------------------------------


def test_step_quadric_unit():
    space = VariableSpace(("x1", "x2", "y1", "y2"))
    f = poly_parse("x1*y1 + x2*y2", space)
    got = hodge_homogeneous_step(f, 1, Ideal.unit(space))
    assert ideal_equal(got, Ideal.unit(space))


def test_step_requires_positive_level():
    with pytest.raises(InputError):
        hodge_homogeneous_step(poly_parse("x^2 + y^2", XY), 0, Ideal.unit(XY))


def test_step_non_isolated_refused():
    with pytest.raises(ComputationRefused):
        hodge_homogeneous_step(poly_parse("x^2*y^2", XY), 1, Ideal.unit(XY))


def test_diagonal_step_matches_closed_form():
    for n, N in ((2, 2), (2, 4), (3, 3)):
        space = canonical(n)
        f = Polynomial.zero(space)
        for k, v in enumerate(space.base):
            f = f + (k + 2) * Polynomial.variable(space, v) ** N
        i0 = maximal_power(space, max(N - n, 0))
        got = hodge_divisor(f, 1, i0)
        assert ideal_equal(got, closed_form_diagonal(n, N, space))


def test_cusp_recursion_reproduces_printed_values():
    weights = WeightVector((3, 2))
    i0 = Ideal.from_strings(XY, ["x", "y"])
    for a, b in ((1, 1), (3, 4)):
        f = Polynomial(XY, {(2, 0): Fraction(a), (0, 3): Fraction(b)})
        level2 = hodge_divisor(f, 2, i0, weights)
        expected = Ideal(
            XY,
            [
                poly_parse("x^3", XY),
                poly_parse("x^2*y^2", XY),
                poly_parse("x*y^3", XY),
                Polynomial(XY, {(2, 1): Fraction(3 * a), (0, 4): Fraction(-b)}),
            ],
        )
        assert ideal_equal(level2, expected)


def test_quadric_triviality_bound_is_sharp():
    for n in (2, 3):
        names = tuple(f"x{i+1}" for i in range(n)) + tuple(f"y{i+1}" for i in range(n))
        space = VariableSpace(names)
        f = Polynomial.zero(space)
        for i in range(n):
            f = f + Polynomial.variable(space, f"x{i+1}") * Polynomial.variable(space, f"y{i+1}")
        for p in range(n):
            assert is_trivial_at_origin(hodge_divisor(f, p, Ideal.unit(space)))
        assert not is_trivial_at_origin(hodge_divisor(f, n, Ideal.unit(space)))


# -- closed forms -----------------------------------------------------------------


def test_power_maximal_examples():
    space = canonical(2)
    assert ideal_equal(closed_form_power_maximal(2, 1, 5, space), Ideal.unit(space))
    assert ideal_equal(
        closed_form_power_maximal(2, 2, 1, space), Ideal.maximal_at_origin(space)
    )
    space4 = canonical(4)
    assert ideal_equal(closed_form_power_maximal(4, 2, 0, space4), Ideal.unit(space4))
    assert power_maximal_degree(2, 1, 2) == 1
    with pytest.raises(InputError):
        closed_form_power_maximal(1, 2, 0)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("N", [2, 3, 4, 5])
@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_power_degree_formula_matches_recursion(n, N, p):
    # the closed generating degree and the one-step recursion agree whenever
    # the ideal is nontrivial
    if (p + 1) * N > n:
        assert power_maximal_degree(N, p, n) == power_maximal_min_degree_recursive(N, p, n)
    else:
        assert power_maximal_min_degree_recursive(N, p, n) == 0


def test_diagonal_examples():
    space = canonical(2)
    got = closed_form_diagonal(2, 3, space)
    # brute expansion: (x^2, y^2) * m + m^4
    powers = Ideal.from_strings(space, ["x1^2", "x2^2"])
    expansion = ideal_sum(
        ideal_product(powers, Ideal.maximal_at_origin(space)),
        maximal_power(space, 4),
    )
    assert ideal_equal(got, expansion)
    assert ideal_equal(got, Ideal.from_strings(space, ["x1^3", "x1^2*x2", "x1*x2^2", "x2^3"]))

    space4 = canonical(4)
    assert ideal_equal(closed_form_diagonal(4, 2, space4), Ideal.unit(space4))


def test_diagonal_boundary_consistency():
    # at N = n the two nontrivial branches agree
    for n in (2, 3, 4):
        space = canonical(n)
        middle = ideal_sum(
            Ideal(space, [Polynomial.variable(space, v) ** (n - 1) for v in space.base]),
            maximal_power(space, n),
        )
        assert ideal_equal(closed_form_diagonal(n, n, space), middle)


def test_smooth_multiple_examples():
    ell = poly_parse("x + 2*y", XY)
    assert ideal_equal(closed_form_smooth_multiple(ell, 1, 1, 3), Ideal.unit(XY))
    got = closed_form_smooth_multiple(ell, 3, 1, 0)
    assert ideal_equal(got, Ideal(XY, [ell ** 2]))
    assert ideal_equal(
        closed_form_smooth_multiple(ell, 3, Fraction(1, 3), 2), Ideal.unit(XY)
    )
    with pytest.raises(InputError):
        closed_form_smooth_multiple(poly_parse("x^2", XY), 2, 1, 0)
    with pytest.raises(InputError):
        closed_form_smooth_multiple(poly_parse("x + 1", XY), 2, 1, 0)


def test_smooth_multiple_decomposition():
    ell = poly_parse("x + 2*y", XY)
    for m, c in ((1, Fraction(5)), (2, Fraction(1)), (4, Fraction(-3, 2))):
        f = c * ell ** m
        got = smooth_multiple_decomposition(f)
        assert got is not None
        got_ell, got_m, got_c = got
        assert got_m == m and got_c == c and got_ell == ell
    assert smooth_multiple_decomposition(poly_parse("x*y", XY)) is None
    assert smooth_multiple_decomposition(poly_parse("x^2 + y^3", XY)) is None
    assert smooth_multiple_decomposition(poly_parse("x^2 + x", XY)) is None


# -- coefficient extraction ---------------------------------------------------------


def test_coeff_examples():
    sp = VariableSpace(("x",), ("y1", "y2"))
    J = Ideal.from_strings(sp, ["x*y1 + x^2*y2"])
    got = coeff_ideal(J)
    assert got.space.params == ()
    assert ideal_equal(got, Ideal.from_strings(got.space, ["x"]))

    free = Ideal.from_strings(sp, ["x^3 - x"])
    got2 = coeff_ideal(free)
    assert ideal_equal(got2, Ideal.from_strings(got2.space, ["x^3 - x"]))

    with pytest.raises(InputError):
        coeff_ideal(Ideal.from_strings(XY, ["x"]))


def test_coeff_generator_independence():
    sp = VariableSpace(("x", "y"), ("t1", "t2"))
    q1 = poly_parse("x*t1 + y^2*t2", sp)
    q2 = poly_parse("y*t1^2 - x^2", sp)
    direct = coeff_ideal(Ideal(sp, [q1, q2]))
    h = poly_parse("1 + x*t2", sp)
    rewritten = coeff_ideal(Ideal(sp, [q1 + h * q2, q2]))
    assert ideal_equal(direct, rewritten)


# -- fixtures -----------------------------------------------------------------------


def test_fixture_two_planes():
    x = poly_parse("x", XYZ)
    combo = poly_parse("3*y + 5*z", XYZ)
    got = fixture_oracle("two-planes", ell1=x, ell2=combo)
    assert ideal_equal(got, Ideal(XYZ, [x, combo]))
    with pytest.raises(ComputationRefused):
        fixture_oracle("two-planes", ell1=x, ell2=poly_parse("2*x", XYZ))
    with pytest.raises(ComputationRefused):
        fixture_oracle("two-planes", ell1=x, ell2=combo, p=2)
    with pytest.raises(ComputationRefused):
        fixture_oracle("two-planes", ell1=poly_parse("x^2", XYZ), ell2=combo)


def test_fixture_ordinary():
    got = fixture_oracle("ordinary", m=4, n=3, lam=Fraction(1, 4), p=1)
    assert ideal_equal(got, maximal_power(got.space, 2))
    boundary = fixture_oracle("ordinary", m=2, n=3, lam=Fraction(1, 2), p=1)
    assert ideal_equal(boundary, Ideal.unit(boundary.space))
    with pytest.raises(ComputationRefused):
        fixture_oracle("ordinary", m=1, n=3, lam=1, p=1)
    with pytest.raises(ComputationRefused):
        fixture_oracle("ordinary", m=4, n=2, lam=Fraction(1, 4), p=1)
    with pytest.raises(ComputationRefused):
        fixture_oracle("ordinary", m=4, n=3, lam=Fraction(1, 2), p=1)


def test_fixture_quadric():
    got = fixture_oracle("quadric", n=3, p=2)
    assert ideal_equal(got, Ideal.unit(got.space))
    with pytest.raises(ComputationRefused):
        fixture_oracle("quadric", n=3, p=3)
    with pytest.raises(InputError):
        fixture_oracle("unknown-family")


# -- the sampler --------------------------------------------------------------------


def test_generic_two_planes_example():
    ideal = Ideal.from_strings(XYZ, ["x*y", "x*z"])
    result = hodge_ideal_generic(ideal, HodgeQuery(1, Fraction(1)), CFG)
    assert ideal_equal(result.ideal, Ideal.from_strings(XYZ, ["x", "y", "z"]))
    assert result.agreement == UNION_TAKEN
    assert result.provenance == "fixture"
    # each individual member value is strictly smaller than the aggregate
    member = fixture_oracle("two-planes", ell1=poly_parse("x", XYZ), ell2=poly_parse("y + 2*z", XYZ))
    assert not ideal_equal(member, result.ideal)
    assert ideal_contains(result.ideal, member)


def test_generic_cusp_example():
    ideal = Ideal.from_strings(XY, ["x^2", "y^3"])
    result = hodge_ideal_generic(ideal, HodgeQuery(2, Fraction(1)), CFG)
    assert ideal_equal(result.ideal, Ideal.from_strings(XY, ["x^3", "x^2*y", "x*y^3", "y^4"]))
    assert result.agreement == UNION_TAKEN


def test_generic_power_maximal_stabilizes():
    space = canonical(2)
    result = hodge_ideal_generic(maximal_power(space, 3), HodgeQuery(1, Fraction(1)), CFG)
    assert result.agreement == ALL_EQUAL
    assert result.samples_used == CFG.stabilization_count
    assert ideal_equal(result.ideal, closed_form_power_maximal(2, 3, 1, space))


def test_generic_trivial_pathways():
    result = hodge_ideal_generic(Ideal.from_strings(XY, ["1 + x"]), HodgeQuery(3, Fraction(1)), CFG)
    assert ideal_equal(result.ideal, Ideal.unit(XY))
    result = hodge_ideal_generic(
        Ideal.from_strings(XY, ["x + x^2", "y^4"]), HodgeQuery(3, Fraction(1)), CFG
    )
    assert ideal_equal(result.ideal, Ideal.unit(XY))
    assert result.provenance == "closed-form"


def test_generic_smooth_multiple_pathway():
    ell = poly_parse("x + 2*y", XY)
    ideal = Ideal(XY, [ell ** 3])
    result = hodge_ideal_generic(ideal, HodgeQuery(2, Fraction(1)), CFG)
    assert ideal_equal(result.ideal, Ideal(XY, [ell ** 2]))
    result_frac = hodge_ideal_generic(ideal, HodgeQuery(2, Fraction(1, 3)), CFG)
    assert ideal_equal(result_frac.ideal, Ideal.unit(XY))


def test_generic_ordinary_pathway():
    space = canonical(3)
    ideal = maximal_power(space, 4)
    result = hodge_ideal_generic(ideal, HodgeQuery(1, Fraction(1, 4)), CFG)
    assert result.provenance == "fixture"
    assert ideal_equal(result.ideal, maximal_power(space, 2))


def test_generic_refusals():
    with pytest.raises(ComputationRefused):
        # fractional exponent, level one, not the ordinary family
        hodge_ideal_generic(
            Ideal.from_strings(XY, ["x^2", "y^3"]), HodgeQuery(1, Fraction(1, 2)), CFG
        )
    with pytest.raises(ComputationRefused):
        # non-monomial without a supplied level-zero ideal
        hodge_ideal_generic(
            Ideal.from_strings(XY, ["x^2 + y^3", "x*y^2"]), HodgeQuery(1, Fraction(1)), CFG
        )
    with pytest.raises(ComputationRefused):
        # members are never isolated: divisorial part has a repeated factor
        hodge_ideal_generic(
            Ideal.from_strings(XYZ, ["x^2*y", "x^2*z"]), HodgeQuery(1, Fraction(1)), CFG
        )
    with pytest.raises(InputError):
        HodgeQuery(-1, Fraction(1))
    with pytest.raises(InputError):
        HodgeQuery(0, Fraction(3, 2))


def test_generic_supplied_level_zero():
    space = VariableSpace(("x1", "x2", "y1", "y2"))
    f = poly_parse("x1*y1 + x2*y2", space)
    result = hodge_ideal_generic(
        Ideal(space, [f]), HodgeQuery(1, Fraction(1)), CFG, i0=Ideal.unit(space)
    )
    assert ideal_equal(result.ideal, Ideal.unit(space))
    assert result.provenance == "recursion"


def test_sampler_determinism():
    ideal = Ideal.from_strings(XY, ["x^2", "y^3"])
    a = hodge_ideal_generic(ideal, HodgeQuery(2, Fraction(1)), SamplerConfig(seed=3))
    b = hodge_ideal_generic(ideal, HodgeQuery(2, Fraction(1)), SamplerConfig(seed=3))
    assert a.to_json() == b.to_json()
    c = hodge_ideal_generic(ideal, HodgeQuery(2, Fraction(1)), SamplerConfig(seed=99))
    assert ideal_equal(a.ideal, c.ideal)  # the value is seed-independent


def test_sampler_draws_are_deterministic_functions():
    cfg = SamplerConfig(seed=5)
    assert cfg.draw(0, 4) == cfg.draw(0, 4)
    assert cfg.draw(0, 4) != cfg.draw(1, 4)


def test_specialize_member():
    ideal = Ideal.from_strings(XY, ["x^2", "y^3"])
    member = specialize_member(ideal, [2, 5])
    assert member == poly_parse("2*x^2 + 5*y^3", XY)
    with pytest.raises(InputError):
        specialize_member(ideal, [1])


# -- restriction ---------------------------------------------------------------------


def test_restrict_maximal_power():
    space = canonical(3)
    restricted = restrict_general_hyperplane(maximal_power(space, 4), seed=1)
    assert restricted.space.n_base == 2
    assert ideal_equal(restricted, maximal_power(restricted.space, 4))


def test_restrict_principal_coordinate():
    space = canonical(3)
    restricted = restrict_general_hyperplane(Ideal.from_strings(space, ["x3"]), seed=2)
    basis = restricted.reduced_basis()
    assert len(basis) == 1 and basis[0].total_degree() == 1


def test_restriction_equality_low_multiplicity():
    for p in (0, 1, 2):
        upper = closed_form_power_maximal(3, 2, p)
        restricted = restrict_general_hyperplane(upper, seed=11)
        assert ideal_equal(restricted, closed_form_power_maximal(2, 2, p, restricted.space))


def test_restriction_inclusion_higher_multiplicity():
    for N in (3, 4):
        upper = closed_form_power_maximal(3, N, 1)
        restricted = restrict_general_hyperplane(upper, seed=11)
        lower = closed_form_power_maximal(2, N, 1, restricted.space)
        assert ideal_contains(restricted, lower)


# -- property spot checks --------------------------------------------------------------


def test_chain_property_cusp():
    ideal = Ideal.from_strings(XY, ["x^2", "y^3"])
    levels = [
        hodge_ideal_generic(ideal, HodgeQuery(p, Fraction(1)), CFG).ideal for p in (0, 1, 2)
    ]
    assert ideal_contains(levels[0], levels[1])
    assert ideal_contains(levels[1], levels[2])


def test_power_times_level_zero():
    space = canonical(2)
    ideal = maximal_power(space, 3)
    i0 = hodge_ideal_generic(ideal, HodgeQuery(0, Fraction(1)), CFG).ideal
    for p in (1, 2):
        level = hodge_ideal_generic(ideal, HodgeQuery(p, Fraction(1)), CFG).ideal
        assert ideal_contains(level, ideal_product(ideal_power(ideal, p), i0))


def test_integral_closure_pathology():
    space = canonical(3)
    for N in (3, 4):
        diag = Ideal(space, [Polynomial.variable(space, v) ** N for v in space.base])
        small = hodge_ideal_generic(diag, HodgeQuery(1, Fraction(1)), CFG).ideal
        big = hodge_ideal_generic(maximal_power(space, N), HodgeQuery(1, Fraction(1)), CFG).ideal
        assert ideal_contains(big, small)
        assert not ideal_contains(small, big)


def test_asymptotic_pathology():
    space = canonical(3)
    coarse = hodge_ideal_generic(maximal_power(space, 3), HodgeQuery(1, Fraction(1, 3)), CFG).ideal
    fine = hodge_ideal_generic(maximal_power(space, 6), HodgeQuery(1, Fraction(1, 6)), CFG).ideal
    assert ideal_contains(coarse, fine)
    assert not ideal_contains(fine, coarse)
