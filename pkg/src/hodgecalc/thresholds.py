"""Newton polyhedra, threshold functions, log canonical thresholds, monomial
multiplier ideals, orders of vanishing, and generic minimal exponents.

The Newton polyhedron of a monomial ideal is the convex hull of its generator
exponents plus the nonnegative orthant.  Every query about it is answered by an
exact rational LP: the threshold function

    t*(u) = max { c : u + 1 in c * P }

is computed as the reciprocal of ``min { s : s*(u+1) in P }``.  The log
canonical threshold of a monomial ideal is ``t*(0)``, and the monomial
multiplier ideal at exponent ``c`` collects the monomials with ``t*(u) > c``
(or ``>= c`` for the left limit, which realizes the ideal at ``c - epsilon``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import ComputationRefused, InputError
from .groebner import Ideal, is_trivial_at_origin
from .lp import OPTIMAL, solve_lp
from .polynomials import Polynomial, VariableSpace, monomial_divides


@dataclass(frozen=True)
class ThresholdValue:
    """An exact rational invariant, possibly infinite, possibly a lower bound."""

    value: Fraction | None
    infinite: bool = False
    lower_bound_only: bool = False
    grid_denominator: int | None = None

    @staticmethod
    def of(value) -> "ThresholdValue":
        return ThresholdValue(Fraction(value))

    @staticmethod
    def infinity() -> "ThresholdValue":
        return ThresholdValue(None, infinite=True)

    def to_json(self):
        if self.infinite:
            return "inf"
        v = self.value
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)

    def __str__(self):
        text = self.to_json()
        if self.lower_bound_only:
            text = f">= {text} (grid denominators up to {self.grid_denominator})"
        return text


class NewtonPolyhedron:
    """Exponent hull of a monomial ideal: conv(generators) + orthant."""

    __slots__ = ("points", "dim")

    def __init__(self, points, dim: int):
        pts = [tuple(Fraction(x) for x in p) for p in points]
        if not pts:
            raise InputError("a Newton polyhedron needs at least one generator point")
        if any(len(p) != dim for p in pts):
            raise InputError("generator points must match the ambient dimension")
        if any(x < 0 for p in pts for x in p):
            raise InputError("generator points must be nonnegative")
        self.points = pts
        self.dim = dim

    @staticmethod
    def of_ideal(ideal: Ideal) -> "NewtonPolyhedron":
        return NewtonPolyhedron(ideal.monomial_exponents(), ideal.space.dim)

    def scaled(self, c) -> "NewtonPolyhedron":
        c = Fraction(c)
        if c <= 0:
            raise InputError("the scale factor must be positive")
        return NewtonPolyhedron([[c * x for x in p] for p in self.points], self.dim)

    def entry_scale(self, point) -> Fraction | None:
        """min { s : s * point in P }, or None when the entry time is zero.

        Formulated as an exact LP over convex multipliers of the generator
        points with one slack per coordinate (the orthant recession cone).
        """
        point = [Fraction(x) for x in point]
        n, m = self.dim, len(self.points)
        # variables: s, lambda_1..lambda_m, slack_1..slack_n
        rows = []
        for i in range(n):
            row = [point[i]] + [-p[i] for p in self.points] + [Fraction(0)] * n
            row[1 + m + i] = Fraction(-1)
            rows.append(row)
        rows.append([Fraction(0)] + [Fraction(1)] * m + [Fraction(0)] * n)
        rhs = [Fraction(0)] * n + [Fraction(1)]
        cost = [Fraction(1)] + [Fraction(0)] * (m + n)
        result = solve_lp(rows, rhs, cost)
        if result.status != OPTIMAL:  # pragma: no cover - cone is always bounded below
            raise ComputationRefused("entry-scale LP did not reach an optimum")
        return result.objective if result.objective > 0 else None


def threshold_function(polyhedron: NewtonPolyhedron, u) -> ThresholdValue:
    """t*(u) = max { c : u + 1 in c * P }, exact; infinite iff 0 in P."""
    if len(u) != polyhedron.dim:
        raise InputError("exponent vector does not match the polyhedron dimension")
    shifted = [Fraction(x) + 1 for x in u]
    s = polyhedron.entry_scale(shifted)
    if s is None:
        return ThresholdValue.infinity()
    return ThresholdValue(1 / s)


def _require_vanishing_monomial(ideal: Ideal) -> NewtonPolyhedron:
    if not ideal.generators:
        raise InputError("the zero ideal has no threshold invariants")
    polyhedron = NewtonPolyhedron.of_ideal(ideal)
    if any(sum(p) == 0 for p in polyhedron.points):
        raise InputError("the ideal does not vanish at the origin")
    return polyhedron


def lct_monomial(ideal: Ideal) -> ThresholdValue:
    """Log canonical threshold of a monomial ideal vanishing at the origin."""
    polyhedron = _require_vanishing_monomial(ideal)
    return threshold_function(polyhedron, (0,) * polyhedron.dim)


def multiplier_ideal_monomial(ideal: Ideal, c, left_limit: bool = False) -> Ideal:
    """Monomial multiplier ideal at exponent ``c``.

    Strict mode collects monomials with ``t*(u) > c``; the left limit uses
    ``t*(u) >= c`` and therefore equals the multiplier ideal at ``c - epsilon``
    for all small positive epsilon (the jumping numbers in range are the
    finitely many threshold values hit by the search box).
    """
    c = Fraction(c)
    if c <= 0:
        raise InputError("the multiplier-ideal exponent must be positive")
    polyhedron = NewtonPolyhedron.of_ideal(ideal)
    space = ideal.space
    n = space.dim
    # Componentwise search box: any minimal monomial of the multiplier ideal
    # satisfies u_i <= floor(c * B_i) with B_i the largest generator exponent
    # in coordinate i (one step of slack is enough beyond that, by threshold
    # monotonicity); the +1 margin is cheap insurance.
    bounds = [
        floor(c * max(p[i] for p in polyhedron.points)) + 1
        for i in range(n)
    ]
    members = []
    for u in itertools.product(*(range(b + 1) for b in bounds)):
        t = threshold_function(polyhedron, u)
        if t.infinite or (t.value >= c if left_limit else t.value > c):
            members.append(u)
    minimal = [
        u for u in members
        if not any(v != u and monomial_divides(v, u) for v in members)
    ]
    minimal.sort()
    return Ideal(space, [Polynomial.monomial(space, u) for u in minimal])


def ord_at_origin(ideal: Ideal) -> int:
    """Largest q with the ideal inside the q-th power of the origin's maximal ideal."""
    if not ideal.generators:
        raise InputError("the zero ideal has no order at the origin")
    return min(g.order_at_origin() for g in ideal.generators)


def generic_min_exp(
    ideal: Ideal,
    mode: str = "monomial",
    search_denominators: int | None = None,
    sampler_config=None,
) -> ThresholdValue:
    """Generic minimal exponent: the minimal exponent of a general member.

    ``monomial`` mode is exact: order-one ideals report infinity, and monomial
    ideals of higher order fall back to the log canonical threshold via the
    Newton polyhedron.  ``search`` mode scans a grid of Hodge-ideal triviality
    queries and reports a certified lower bound at the grid resolution; it is
    only meaningful for ideals that are radical in codimension one, where
    triviality characterizes the invariant.
    """
    if not ideal.generators or is_trivial_at_origin(ideal):
        raise InputError("the generic minimal exponent needs an ideal vanishing at the origin")
    if ord_at_origin(ideal) == 1:
        return ThresholdValue.infinity()
    if mode == "monomial":
        if not ideal.is_monomial():
            raise ComputationRefused(
                "monomial mode needs a monomial ideal; use search mode instead"
            )
        return lct_monomial(ideal)
    if mode == "search":
        return _search_min_exp(ideal, search_denominators or 6, sampler_config)
    raise InputError(f"unknown mode {mode!r}; use monomial or search")


def _search_min_exp(ideal: Ideal, max_denominator: int, sampler_config) -> ThresholdValue:
    from .hodge import HodgeQuery, SamplerConfig, hodge_ideal_generic
    from .groebner import divisorial_part

    if ideal.is_monomial():
        g, _ = divisorial_part(ideal)
        if any(e > 1 for e in next(iter(g.terms))):
            raise ComputationRefused(
                "search mode requires an ideal radical in codimension one; "
                "its divisorial part has a repeated factor, so the triviality "
                "characterization does not apply (the invariant equals the "
                "log canonical threshold instead)"
            )
    cfg = sampler_config or SamplerConfig()
    lambdas = sorted(
        {Fraction(k, d) for d in range(1, max_denominator + 1) for k in range(1, d + 1)}
    )
    best: Fraction | None = None
    applicable = 0
    for p in range(ideal.space.dim + 1):
        for lam in lambdas:
            try:
                result = hodge_ideal_generic(ideal, HodgeQuery(p, lam), cfg)
            except ComputationRefused:
                continue
            applicable += 1
            if is_trivial_at_origin(result.ideal):
                value = p + lam
                if best is None or value > best:
                    best = value
    if applicable == 0:
        raise ComputationRefused(
            "search mode found no applicable Hodge-ideal pathway on the grid"
        )
    if best is None:
        best = Fraction(0)
    return ThresholdValue(best, lower_bound_only=True, grid_denominator=max_denominator)
