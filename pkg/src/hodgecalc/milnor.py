"""Jacobian ideals and graded monomial bases of Milnor algebras.

For a polynomial f with an isolated singularity at the origin, the quotient of
the polynomial ring by the ideal of first partials is finite-dimensional; the
staircase of that ideal gives a monomial basis whose (weighted) degrees drive
the Hodge-ideal recursion.  Isolatedness is detected globally at the origin via
zero-dimensionality of the Jacobian quotient, which for (quasi-)homogeneous f
is the same thing as an isolated singularity at the cone point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ComputationRefused, InputError
from .groebner import Ideal, StandardMonomialBasis, standard_monomials
from .linalg import nullspace
from .polynomials import (
    Polynomial,
    VariableSpace,
    WeightVector,
    gradient,
    render,
    substitute,
    weighted_degree_check,
)


class MilnorData:
    """Jacobian ideal, graded monomial basis, and Milnor number of one germ."""

    __slots__ = ("jacobian", "basis", "milnor_number", "weights", "degree")

    def __init__(self, jacobian: Ideal, basis: StandardMonomialBasis,
                 weights: WeightVector, degree: int):
        self.jacobian = jacobian
        self.basis = basis
        self.milnor_number = len(basis)
        self.weights = weights
        self.degree = degree

    def to_json(self) -> dict:
        space = self.jacobian.space
        return {
            "jacobian": self.jacobian.to_json(reduced=True),
            "basis": [
                {"monomial": render(Polynomial.monomial(space, e)), "degree": d}
                for e, d in zip(self.basis.monomials, self.basis.degrees)
            ],
            "milnor_number": self.milnor_number,
        }


def project_to_base(f: Polynomial) -> Polynomial:
    """Move a parameter-free polynomial into the base-only variable space."""
    if not f.space.params:
        return f
    if f.uses_params():
        raise InputError("polynomial involves parameter variables")
    return substitute(f, {}, into=f.space.base_only())


def jacobian_ideal(f: Polynomial) -> Ideal:
    """The ideal of all first partial derivatives."""
    f = project_to_base(f)
    if f.is_constant():
        raise InputError("the Jacobian ideal of a constant is not defined")
    return Ideal(f.space, gradient(f))


def has_isolated_singularity(f: Polynomial) -> bool:
    """Zero-dimensionality of the Jacobian quotient at the origin."""
    basis = standard_monomials(jacobian_ideal(f), degree_cap=0)
    return basis.finite


def milnor_basis(f: Polynomial, w: WeightVector | None = None) -> MilnorData:
    """Graded monomial basis of the Milnor algebra of a weighted-homogeneous germ.

    Raises when f is not homogeneous for the given weights, or when the
    singularity is not isolated (infinite quotient), in which case the graded
    recursion downstream is inapplicable.
    """
    f = project_to_base(f)
    if w is None:
        w = WeightVector.ones(f.space.n_base)
    is_hom, degree = weighted_degree_check(f, w)
    if not is_hom:
        raise ComputationRefused(
            "polynomial is not homogeneous for the given weights; "
            "the graded Milnor basis is undefined"
        )
    jac = jacobian_ideal(f)
    basis = standard_monomials(jac, weights=w)
    if not basis.finite:
        raise ComputationRefused(
            "recursion inapplicable: the singularity is not isolated "
            "(infinite Milnor algebra)"
        )
    return MilnorData(jac, basis, w, degree)


def infer_weights(exponent_rows, n: int) -> tuple[WeightVector, int] | None:
    """Find positive integer weights making all exponent rows the same degree.

    Tries the unweighted case first; otherwise solves the linear system
    ``<w, row> = N`` exactly and accepts a one-dimensional solution space with
    a positive representative.  Variables absent from every row get weight 1.
    Returns None when no such weight vector is found.
    """
    rows = [tuple(r) for r in exponent_rows]
    if not rows:
        return None
    degrees = {sum(r) for r in rows}
    if len(degrees) == 1:
        return WeightVector.ones(n), degrees.pop()

    used = [i for i in range(n) if any(r[i] for r in rows)]
    system = [[Fraction(r[i]) for i in used] + [Fraction(-1)] for r in rows]
    kernel = nullspace(system)
    if len(kernel) != 1:
        return None
    vec = kernel[0]
    if vec[-1] == 0:
        return None
    vec = [v / vec[-1] for v in vec]  # normalize N = 1, rescale below
    if any(v <= 0 for v in vec):
        return None
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    weights = [1] * n
    for i, wi in zip(used, ints[:-1]):
        weights[i] = wi
    return WeightVector(tuple(weights)), ints[-1]
