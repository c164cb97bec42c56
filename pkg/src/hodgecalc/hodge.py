"""Hodge ideals of rational powers of polynomial ideals on affine space.

The constructive core of the package.  Three cooperating pieces:

* a graded recursion computing the Hodge ideals of the divisor of a
  (weighted-)homogeneous polynomial with an isolated singularity, driven by
  the monomial basis of its Milnor algebra;
* a deterministic sampler that draws general members of an ideal, pushes each
  through the applicable per-divisor pathway, and aggregates: if enough
  consecutive samples agree the common ideal is returned, otherwise the
  generator sum of all samples is returned with a loud ``union-taken`` flag;
* closed forms and fixtures for the families where the answer is known in
  advance (powers of the maximal ideal, diagonal ideals, smooth multiples,
  products of two hyperplanes, ordinary singularities, full-rank quadrics),
  used both as fast pathways and as oracles for the verification suite.

Exponents ``lambda`` are exact rationals in (0, 1].  Fractional exponents are
deliberately supported only where a closed pathway exists (multiplier ideals
at level zero, smooth multiples, the ordinary-singularity fixture); everything
else is refused with the name of the blocking precondition rather than
answered approximately.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ComputationRefused, InputError
from .groebner import (
    Ideal,
    divisorial_part,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_trivial_at_origin,
    reduced_groebner,
)
from .milnor import MilnorData, infer_weights, milnor_basis, project_to_base
from .polynomials import (
    Polynomial,
    VariableSpace,
    WeightVector,
    gradient,
    partial_derivative,
    render,
)
from .thresholds import multiplier_ideal_monomial, ord_at_origin


@dataclass(frozen=True)
class HodgeQuery:
    """The pair (p, lambda): filtration level and exponent."""

    p: int
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.p < 0:
            raise InputError("the filtration level p must be nonnegative")
        if not 0 < self.lam <= 1:
            raise InputError("the exponent lambda must lie in (0, 1]")


@dataclass(frozen=True)
class SamplerConfig:
    """Deterministic sampling policy for general members."""

    seed: int = 0
    coefficient_pool: tuple[int, int] = (1, 10 ** 6)
    stabilization_count: int = 3
    max_samples: int = 12

    def __post_init__(self):
        if self.stabilization_count < 2:
            raise InputError("stabilization needs at least two agreeing samples")
        lo, hi = self.coefficient_pool
        if not (1 <= lo <= hi):
            raise InputError("the coefficient pool must be a positive integer range")

    def draw(self, index: int, count: int) -> list[int]:
        """Coefficients for sample ``index``; a pure function of (seed, index)."""
        rng = random.Random(f"sample:{self.seed}:{index}")
        lo, hi = self.coefficient_pool
        return [rng.randint(lo, hi) for _ in range(count)]


ALL_EQUAL = "all-equal"
UNION_TAKEN = "union-taken"

RECURSION = "recursion"
CLOSED_FORM = "closed-form"
FIXTURE = "fixture"


@dataclass(frozen=True)
class HodgeResult:
    """A computed Hodge ideal plus how it was obtained."""

    ideal: Ideal
    p: int
    lam: Fraction
    provenance: str
    samples_used: int
    agreement: str
    seed: int

    def to_json(self) -> dict:
        lam = self.lam
        return {
            "ideal": self.ideal.to_json(reduced=True),
            "p": self.p,
            "lambda": f"{lam.numerator}/{lam.denominator}" if lam.denominator != 1 else str(lam.numerator),
            "provenance": self.provenance,
            "samples_used": self.samples_used,
            "agreement": self.agreement,
            "seed": self.seed,
        }


def _reduced_ideal(ideal: Ideal) -> Ideal:
    """Re-generate an ideal by its reduced basis (canonical, compact)."""
    return Ideal(ideal.space, ideal.reduced_basis())


def _require_base_only(ideal: Ideal):
    if ideal.space.params:
        raise InputError("Hodge-ideal inputs live in base variables only")


# -- level zero ------------------------------------------------------------------


def hodge_base_I0(ideal: Ideal, lam, supplied: Ideal | None = None) -> Ideal:
    """The level-zero Hodge ideal: the multiplier ideal just below ``lam``.

    Monomial ideals go through the Newton-polyhedron pathway (left limit of the
    threshold function); any other input must come with an explicitly supplied
    level-zero ideal.
    """
    lam = Fraction(lam)
    if not 0 < lam <= 1:
        raise InputError("the exponent lambda must lie in (0, 1]")
    if supplied is not None:
        return _reduced_ideal(supplied)
    if not ideal.is_monomial():
        raise ComputationRefused(
            "level zero needs a monomial ideal (Newton-polyhedron pathway) "
            "or an explicitly supplied ideal"
        )
    return multiplier_ideal_monomial(ideal, lam, left_limit=True)


# -- the graded recursion ----------------------------------------------------------


def hodge_homogeneous_step(
    f: Polynomial,
    p: int,
    prev: Ideal,
    degree: int | None = None,
    w: WeightVector | None = None,
    milnor: MilnorData | None = None,
) -> Ideal:
    """One step of the graded recursion: the level-p ideal from the level-(p-1) one.

    Generators produced: the Milnor-basis monomials of weighted degree at least
    ``(p+1) * degree - sum(weights)``, the combinations
    ``f * d_i(g) - p * g * d_i(f)`` over generators g of the previous level and
    all base directions i, and the products ``f * g`` (which close the
    recursion over the choice of generating set of the previous level).
    """
    if p < 1:
        raise InputError("the recursion starts at level one; use the level-zero pathway")
    f = project_to_base(f)
    if milnor is None:
        milnor = milnor_basis(f, w)
    w = milnor.weights
    degree = milnor.degree if degree is None else degree
    if prev.space != f.space:
        raise InputError("previous-level ideal must live in the polynomial's space")

    space = f.space
    threshold = (p + 1) * degree - w.total
    gens: list[Polynomial] = [
        Polynomial.monomial(space, e)
        for e, d in zip(milnor.basis.monomials, milnor.basis.degrees)
        if d >= threshold
    ]
    grads = gradient(f)
    for g in prev.generators:
        for i in range(space.n_base):
            gens.append(f * partial_derivative(g, i) - p * (g * grads[i]))
        gens.append(f * g)
    return _reduced_ideal(Ideal(space, gens))


def hodge_divisor(
    f: Polynomial,
    p: int,
    i0: Ideal,
    w: WeightVector | None = None,
) -> Ideal:
    """Hodge ideal of the divisor of a (weighted-)homogeneous isolated germ.

    Iterates the graded recursion p times starting from the supplied
    level-zero ideal.
    """
    f = project_to_base(f)
    milnor = milnor_basis(f, w)
    current = _reduced_ideal(i0)
    for level in range(1, p + 1):
        current = hodge_homogeneous_step(f, level, current, milnor=milnor)
    return current


# -- coefficient extraction -----------------------------------------------------------


def coeff_ideal(ideal: Ideal) -> Ideal:
    """Collect the base-variable coefficient polynomials of every generator.

    The input lives in a space with parameter variables; each generator is read
    as a polynomial in the parameters with base-variable coefficients, and the
    output ideal (over the base-only space) is generated by all of those
    coefficients.  Independent of the choice of generators.
    """
    space = ideal.space
    if not space.params:
        raise InputError("coefficient extraction needs a parameter block")
    nb = space.n_base
    target = space.base_only()
    gens: list[Polynomial] = []
    seen = set()
    for g in ideal.generators:
        grouped: dict[tuple, dict] = {}
        for e, c in g.terms.items():
            grouped.setdefault(e[nb:], {})[e[:nb]] = c
        for coeff_terms in grouped.values():
            poly = Polynomial(target, coeff_terms)
            if poly not in seen:
                seen.add(poly)
                gens.append(poly)
    return Ideal(target, gens)


def specialize_member(ideal: Ideal, alpha) -> Polynomial:
    """The member ``sum alpha_i * f_i`` of an ideal, exact coefficients."""
    if len(alpha) != len(ideal.generators):
        raise InputError("one coefficient per generator is required")
    member = Polynomial.zero(ideal.space)
    for a, g in zip(alpha, ideal.generators):
        member = member + g * Fraction(a)
    return member


# -- closed forms -------------------------------------------------------------------


def _canonical_space(n: int) -> VariableSpace:
    return VariableSpace(tuple(f"x{i+1}" for i in range(n)))


def power_maximal_degree(degree: int, p: int, n: int) -> int:
    """Generating degree of the level-p ideal of the N-th power of the origin ideal."""
    return (p + 1) * (degree - 1) - n + -(-n // degree)


def power_maximal_min_degree_recursive(degree: int, p: int, n: int) -> int:
    """The same generating degree, by the one-step minimal-degree recursion."""
    if p == 0:
        return max(degree - n, 0)
    prev = power_maximal_min_degree_recursive(degree, p - 1, n)
    if (p + 1) * degree <= n * (degree - 1):
        return min(prev + degree - 1, (p + 1) * degree - n)
    return prev + degree - 1


def closed_form_power_maximal(
    n: int, degree: int, p: int, space: VariableSpace | None = None
) -> Ideal:
    """Hodge ideal of the N-th power of the maximal ideal of the origin."""
    if n < 2 or degree < 1 or p < 0:
        raise InputError("closed form needs n >= 2, N >= 1, p >= 0")
    space = space or _canonical_space(n)
    if degree == 1 or (p + 1) * degree <= n:
        return Ideal.unit(space)
    exponent = power_maximal_degree(degree, p, n)
    recursive = power_maximal_min_degree_recursive(degree, p, n)
    if exponent != recursive:  # pragma: no cover - proved identity
        raise ComputationRefused(
            f"internal inconsistency: closed form {exponent} != recursion {recursive}"
        )
    return _reduced_ideal(ideal_power(Ideal.maximal_at_origin(space), exponent))


def closed_form_diagonal(n: int, degree: int, space: VariableSpace | None = None) -> Ideal:
    """Level-one Hodge ideal of the ideal of N-th powers of the coordinates."""
    if n < 2 or degree < 2:
        raise InputError("the diagonal closed form needs n, N >= 2")
    space = space or _canonical_space(n)
    if 2 * degree <= n:
        return Ideal.unit(space)
    maximal = Ideal.maximal_at_origin(space)
    powers = Ideal(
        space,
        [Polynomial.variable(space, v) ** (degree - 1) for v in space.base],
    )
    tail = ideal_power(maximal, 2 * degree - n)
    if degree <= n:
        return _reduced_ideal(ideal_sum(powers, tail))
    head = ideal_product(powers, ideal_power(maximal, degree - n))
    return _reduced_ideal(ideal_sum(head, tail))


def smooth_multiple_decomposition(f: Polynomial):
    """Write ``f = c * ell^m`` with ``ell`` a linear form, if possible.

    Returns (ell, m, c) with ``ell`` monic, or None.  Uses the fact that the
    (m-1)-fold derivative of ``c * ell^m`` along any direction that ``ell``
    involves is a nonzero multiple of ``ell``.
    """
    f = project_to_base(f)
    if f.is_zero() or f.is_constant():
        return None
    m = f.total_degree()
    if f.order_at_origin() != m:
        return None  # not homogeneous, cannot be a pure power of a linear form
    if m == 1:
        lc = f.leading()[1]
        return Polynomial(f.space, {e: c / lc for e, c in f.terms.items()}), 1, lc
    for i in range(f.space.n_base):
        candidate = f
        for _ in range(m - 1):
            candidate = partial_derivative(candidate, i)
        if candidate.is_zero():
            continue
        if candidate.total_degree() != 1:
            return None
        lc = candidate.leading()[1]
        ell = Polynomial(f.space, {e: c / lc for e, c in candidate.terms.items()})
        power = ell ** m
        scale = f.leading()[1] / power.leading()[1]
        if f == power * scale:
            return ell, m, scale
        return None
    return None


def closed_form_smooth_multiple(
    linear_form: Polynomial, m: int, lam, p: int
) -> Ideal:
    """Hodge ideal of ``lam * m * Z`` for a smooth hyperplane ``Z``: a pure power.

    Independent of p: the ideal is the (ceil(lam*m) - 1)-th power of the
    defining linear form.
    """
    lam = Fraction(lam)
    if not 0 < lam <= 1:
        raise InputError("the exponent lambda must lie in (0, 1]")
    if m < 1:
        raise InputError("the multiplicity must be a positive integer")
    if p < 0:
        raise InputError("the filtration level must be nonnegative")
    linear_form = project_to_base(linear_form)
    if linear_form.total_degree() != 1 or linear_form.constant_term() != 0:
        raise InputError(
            "the divisor must be a smooth hyperplane through the origin "
            "(a linear form with zero constant term)"
        )
    k = -((-lam * m) // 1) - 1  # ceil(lam * m) - 1
    return Ideal(linear_form.space, [linear_form ** int(k)])


def restrict_general_hyperplane(ideal: Ideal, seed: int = 0) -> Ideal:
    """Substitute the last base variable by a seeded general combination of the others.

    The result lives in the space with one fewer variable.  Coefficients are
    nonzero rationals drawn deterministically from the seed.
    """
    _require_base_only(ideal)
    space = ideal.space
    if space.n_base < 2:
        raise InputError("restriction needs at least two base variables")
    target = VariableSpace(space.base[:-1])
    rng = random.Random(f"hyperplane:{seed}")
    combo = Polynomial.zero(target)
    for name in target.base:
        c = Fraction(rng.randint(1, 499), rng.randint(1, 16))
        combo = combo + c * Polynomial.variable(target, name)
    from .polynomials import substitute

    gens = [substitute(g, {space.base[-1]: combo}, into=target) for g in ideal.generators]
    return Ideal(target, gens)


# -- fixtures ---------------------------------------------------------------------


def _is_linear_form(f: Polynomial) -> bool:
    return (not f.is_zero()) and f.total_degree() == 1 and f.constant_term() == 0


def fixture_oracle(family: str, **params) -> Ideal:
    """Known Hodge-ideal values for families outside the recursion's reach.

    Families: ``two-planes`` (level one of a product of two independent
    hyperplanes), ``ordinary`` (level one at exponent 1/m of the m-th power of
    the maximal ideal, an ordinary m-fold point), ``quadric`` (a full-rank
    quadric cone in 2n variables is trivial through level n-1).  Parameters
    outside the recorded validity range are refused, never extrapolated.
    """
    if family == "two-planes":
        ell1, ell2 = params["ell1"], params["ell2"]
        p = params.get("p", 1)
        lam = Fraction(params.get("lam", 1))
        if p != 1 or lam != 1:
            raise ComputationRefused("the two-planes value is recorded for p = 1, lambda = 1")
        if ell1.space != ell2.space:
            raise InputError("the two linear forms must share a variable space")
        if not (_is_linear_form(ell1) and _is_linear_form(ell2)):
            raise ComputationRefused("two-planes needs two linear forms through the origin")
        e1, c1 = ell1.leading()
        scaled = ell2 * c1 - ell1 * ell2.terms.get(e1, Fraction(0))
        if scaled.is_zero():
            raise ComputationRefused("two-planes needs linearly independent forms")
        return _reduced_ideal(Ideal(ell1.space, [ell1, ell2]))

    if family == "ordinary":
        m, n = params["m"], params["n"]
        p = params.get("p", 1)
        lam = Fraction(params.get("lam", Fraction(1, m)))
        space = params.get("space") or _canonical_space(n)
        if n < 3 or m < n - 1:
            raise ComputationRefused(
                "the ordinary-singularity value is recorded for n >= 3 and m >= n - 1"
            )
        if p != 1 or lam != Fraction(1, m):
            raise ComputationRefused(
                "the ordinary-singularity value is recorded for p = 1, lambda = 1/m"
            )
        if space.n_base != n:
            raise InputError("space dimension must match n")
        return _reduced_ideal(ideal_power(Ideal.maximal_at_origin(space), m + 1 - n))

    if family == "quadric":
        n = params["n"]
        p = params.get("p", 0)
        space = params.get("space")
        if space is None:
            names = tuple(f"x{i+1}" for i in range(n)) + tuple(f"y{i+1}" for i in range(n))
            space = VariableSpace(names)
        if n < 1:
            raise InputError("the quadric family needs n >= 1")
        if p > n - 1:
            raise ComputationRefused(
                "the full-rank quadric value is recorded only through level n - 1"
            )
        return Ideal.unit(space)

    raise InputError(f"unknown fixture family {family!r}")


# -- the sampler ------------------------------------------------------------------


def _run_sampler(space, cfg: SamplerConfig, compute, q: HodgeQuery, provenance: str):
    """Draw members, compute per-sample ideals, and aggregate deterministically."""
    ideals: list[Ideal] = []
    streak = 0
    prev: Ideal | None = None
    refusals: list[str] = []
    for index in range(cfg.max_samples):
        try:
            ideal = compute(index)
        except ComputationRefused as refused:
            refusals.append(str(refused))
            continue
        ideal = _reduced_ideal(ideal)
        if prev is not None and ideal_equal(ideal, prev):
            streak += 1
        else:
            streak = 1
        prev = ideal
        ideals.append(ideal)
        if streak >= cfg.stabilization_count and streak == len(ideals):
            return HodgeResult(ideal, q.p, q.lam, provenance, len(ideals), ALL_EQUAL, cfg.seed)
    if not ideals:
        detail = refusals[0] if refusals else "no sample was computable"
        raise ComputationRefused(detail)
    union = ideals[0]
    for other in ideals[1:]:
        union = ideal_sum(union, other)
    return HodgeResult(
        _reduced_ideal(union), q.p, q.lam, provenance, len(ideals), UNION_TAKEN, cfg.seed
    )


def _deterministic(ideal: Ideal, q: HodgeQuery, provenance: str, seed: int) -> HodgeResult:
    return HodgeResult(_reduced_ideal(ideal), q.p, q.lam, provenance, 0, ALL_EQUAL, seed)


def _two_planes_structure(ideal: Ideal):
    """Detect ``a = (ell) * B`` with ``ell`` a coordinate and ``B`` linear of rank >= 2."""
    if not ideal.is_monomial():
        return None
    g, rest = divisorial_part(ideal)
    if g.total_degree() != 1:
        return None
    gens = rest.generators
    if len(gens) < 2 or any(h.total_degree() != 1 for h in gens):
        return None
    exps = {next(iter(h.terms)) for h in gens}
    if len(exps) < 2:
        return None
    return g, rest


def hodge_ideal_generic(
    ideal: Ideal,
    q: HodgeQuery,
    cfg: SamplerConfig | None = None,
    i0: Ideal | None = None,
    weights: WeightVector | None = None,
) -> HodgeResult:
    """Hodge ideal of a rational power of an ideal, by generic-member sampling.

    Pathway selection, in order: ideals not vanishing (or vanishing to order
    one) at the origin are trivial; principal pure powers of a hyperplane use
    the smooth-multiple closed form; level zero uses the multiplier ideal;
    exponent 1/m on the m-th power of the maximal ideal uses the
    ordinary-singularity fixture; at exponent one, products of a hyperplane
    with a pencil of hyperplanes use the two-planes fixture per sample, and
    everything else runs the graded Milnor recursion per sample (which needs a
    weighted-homogeneous general member with an isolated singularity, plus a
    computable level-zero ideal).  Anything outside these pathways is refused
    with the precondition that failed.
    """
    cfg = cfg or SamplerConfig()
    _require_base_only(ideal)
    if not ideal.generators:
        raise InputError("the zero ideal has no Hodge ideals")
    space = ideal.space

    if is_trivial_at_origin(ideal):
        return _deterministic(Ideal.unit(space), q, CLOSED_FORM, cfg.seed)
    if ord_at_origin(ideal) == 1:
        # The general member defines a smooth hypersurface through the origin.
        return _deterministic(Ideal.unit(space), q, CLOSED_FORM, cfg.seed)

    if len(ideal.generators) == 1:
        decomposition = smooth_multiple_decomposition(ideal.generators[0])
        if decomposition is not None:
            ell, m, _ = decomposition
            return _deterministic(
                closed_form_smooth_multiple(ell, m, q.lam, q.p), q, CLOSED_FORM, cfg.seed
            )

    if q.p == 0:
        if i0 is not None:
            return _deterministic(i0, q, CLOSED_FORM, cfg.seed)
        if ideal.is_monomial():
            return _deterministic(
                multiplier_ideal_monomial(ideal, q.lam, left_limit=True),
                q,
                CLOSED_FORM,
                cfg.seed,
            )
        raise ComputationRefused(
            "level zero of a non-monomial ideal needs an explicitly supplied "
            "multiplier ideal (no Newton-polyhedron pathway applies)"
        )

    if q.lam != 1:
        if q.lam.numerator == 1 and q.p == 1 and ideal.is_monomial():
            m = q.lam.denominator
            n = space.n_base
            if (
                n >= 3
                and m >= n - 1
                and ideal_equal(ideal, ideal_power(Ideal.maximal_at_origin(space), m))
            ):
                return _deterministic(
                    fixture_oracle("ordinary", m=m, n=n, p=q.p, lam=q.lam, space=space),
                    q,
                    FIXTURE,
                    cfg.seed,
                )
        raise ComputationRefused(
            "fractional exponents with p >= 1 are only recorded for the "
            "ordinary-singularity family (the m-th power of the maximal ideal "
            "at exponent 1/m); the graded recursion applies at exponent one only"
        )

    structure = _two_planes_structure(ideal)
    if structure is not None and q.p == 1:
        g, pencil = structure

        def compute_two_planes(index: int) -> Ideal:
            alpha = cfg.draw(index, len(pencil.generators))
            member = specialize_member(pencil, alpha)
            return fixture_oracle("two-planes", ell1=g, ell2=member, p=1, lam=1)

        return _run_sampler(space, cfg, compute_two_planes, q, FIXTURE)

    if i0 is None:
        if not ideal.is_monomial():
            raise ComputationRefused(
                "the recursion pathway needs a level-zero ideal: supply one "
                "explicitly or pass a monomial ideal (Newton-polyhedron pathway)"
            )
        i0 = multiplier_ideal_monomial(ideal, Fraction(1), left_limit=True)

    exponent_rows = sorted({e for g in ideal.generators for e in g.terms})
    inferred = infer_weights(exponent_rows, space.dim)
    if inferred is None:
        raise ComputationRefused(
            "recursion inapplicable: no positive weight vector makes the "
            "general member weighted-homogeneous"
        )
    weights, _ = inferred
    base_level = _reduced_ideal(i0)

    def compute_recursion(index: int) -> Ideal:
        alpha = cfg.draw(index, len(ideal.generators))
        member = specialize_member(ideal, alpha)
        try:
            milnor = milnor_basis(member, weights)
        except ComputationRefused:
            raise ComputationRefused(
                "recursion inapplicable: general member has a non-isolated singularity"
            )
        current = base_level
        for level in range(1, q.p + 1):
            current = hodge_homogeneous_step(member, level, current, milnor=milnor)
        return current

    return _run_sampler(space, cfg, compute_recursion, q, RECURSION)
