"""Reduced Groebner bases, normal forms, ideal algebra, and staircases.

The reduced Groebner basis (monic, auto-reduced, sorted descending by leading
monomial) is the canonical form of an ideal: two ideals are equal exactly when
their reduced bases coincide.  The implementation is plain Buchberger with the
product and chain criteria and a normal (lcm-degree) selection strategy, which
is deterministic and entirely sufficient at desk scale.

Also here: a brute-force membership oracle based on exact linear algebra, kept
deliberately independent of the division/Buchberger pathway so the two can
cross-check each other, and the divisorial/codimension-two factorization of a
monomial ideal.
"""

from __future__ import annotations

import heapq
import itertools
import json
from fractions import Fraction
from math import gcd

from .errors import ComputationRefused, InputError
from .linalg import solve_linear
from .orders import GREVLEX, MonomialOrder, order_by_name
from .polynomials import (
    Polynomial,
    VariableSpace,
    WeightVector,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_weighted_degree,
    poly_parse,
    render,
)

Terms = "dict[tuple[int, ...], Fraction]"


# -- low-level reduction machinery (raw term dicts for speed) -----------------

def _primitive(terms: Terms, order: MonomialOrder) -> Terms:
    """Scale to coprime integer coefficients with positive leading coefficient."""
    if not terms:
        return terms
    den = 1
    for c in terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in terms.values():
        num = gcd(num, abs(c.numerator) * (den // c.denominator))
    scale = Fraction(den, num)
    lead = max(terms, key=order.key)
    if terms[lead] < 0:
        scale = -scale
    return {e: c * scale for e, c in terms.items()}


def _reduce_full(terms: Terms, reducers, order: MonomialOrder) -> Terms:
    """Unique normal form of a term dict modulo a list of (lead, lc, terms)."""
    key = order.key
    work = dict(terms)
    remainder: Terms = {}
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        for lead, lc, gterms in reducers:
            if monomial_divides(lead, e):
                shift = monomial_div(e, lead)
                factor = c / lc
                for ge, gc in gterms.items():
                    if ge == lead:
                        continue
                    te = monomial_mul(ge, shift)
                    cur = work.get(te, _ZERO) - factor * gc
                    if cur:
                        work[te] = cur
                    else:
                        work.pop(te, None)
                break
        else:
            remainder[e] = c
    return remainder


_ZERO = Fraction(0)


def _spoly(fi, fj, order: MonomialOrder) -> Terms:
    (lead_i, lc_i, ti), (lead_j, lc_j, tj) = fi, fj
    lcm = monomial_lcm(lead_i, lead_j)
    si, sj = monomial_div(lcm, lead_i), monomial_div(lcm, lead_j)
    out: Terms = {}
    for e, c in ti.items():
        te = monomial_mul(e, si)
        out[te] = out.get(te, _ZERO) + c / lc_i
    for e, c in tj.items():
        te = monomial_mul(e, sj)
        cur = out.get(te, _ZERO) - c / lc_j
        if cur:
            out[te] = cur
        else:
            out.pop(te, None)
    return {e: c for e, c in out.items() if c}


def _entry(terms: Terms, order: MonomialOrder):
    lead = max(terms, key=order.key)
    return (lead, terms[lead], terms)


def _interreduce(polys: "list[Terms]", order: MonomialOrder) -> "list[Terms]":
    """Reduce every element modulo the others until nothing changes."""
    polys = [_primitive(t, order) for t in polys if t]
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            if polys[i] is None:
                continue
            others = [_entry(t, order) for j, t in enumerate(polys) if j != i and t is not None]
            r = _reduce_full(polys[i], others, order)
            if r != polys[i]:
                polys[i] = _primitive(r, order) if r else None
                changed = True
        polys = [t for t in polys if t is not None]
    return polys


def _buchberger(gens: "list[Terms]", order: MonomialOrder) -> "list[Terms]":
    basis = _interreduce(gens, order)
    if not basis:
        return []
    entries = [_entry(t, order) for t in basis]
    key = order.key

    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push_pairs(j):
        lead_j = entries[j][0]
        for i in range(j):
            lcm = monomial_lcm(entries[i][0], lead_j)
            pending.add((i, j))
            heapq.heappush(heap, (monomial_degree(lcm), key(lcm), i, j))

    for j in range(len(entries)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lead_i, lead_j = entries[i][0], entries[j][0]
        lcm = monomial_lcm(lead_i, lead_j)
        if lcm == monomial_mul(lead_i, lead_j):
            continue  # coprime leading terms
        skip = False
        for k in range(len(entries)):
            if k in (i, j) or not monomial_divides(entries[k][0], lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        r = _reduce_full(_spoly(entries[i], entries[j], order), entries, order)
        if r:
            entries.append(_entry(_primitive(r, order), order))
            push_pairs(len(entries) - 1)
    return [t for _, _, t in entries]


def _reduced_from_groebner(basis: "list[Terms]", order: MonomialOrder) -> "list[Terms]":
    if not basis:
        return []
    key = order.key
    indexed = sorted(range(len(basis)), key=lambda i: key(max(basis[i], key=key)))
    kept: list[Terms] = []
    kept_leads: list = []
    for i in indexed:
        lead = max(basis[i], key=key)
        if any(monomial_divides(kl, lead) for kl in kept_leads):
            continue
        kept.append(basis[i])
        kept_leads.append(lead)
    reduced = []
    for i, t in enumerate(kept):
        others = [_entry(u, order) for j, u in enumerate(kept) if j != i]
        r = _reduce_full(t, others, order)
        lc = r[max(r, key=key)]
        reduced.append({e: c / lc for e, c in r.items()})
    reduced.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return reduced


# -- the Ideal type ------------------------------------------------------------

class Ideal:
    """A finitely generated ideal with a cached reduced Groebner basis.

    The generator list is fixed at construction (zero generators are dropped);
    the reduced basis per monomial order is computed lazily and memoized, after
    which the object is effectively immutable.
    """

    __slots__ = ("space", "generators", "_reduced")

    def __init__(self, space: VariableSpace, generators):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.space != space:
                raise InputError("all generators must live in the ideal's variable space")
        self.space = space
        self.generators = gens
        self._reduced: dict[str, tuple[Polynomial, ...]] = {}

    @staticmethod
    def from_strings(space: VariableSpace, texts) -> "Ideal":
        return Ideal(space, [poly_parse(t, space) for t in texts])

    @staticmethod
    def unit(space: VariableSpace) -> "Ideal":
        return Ideal(space, [Polynomial.constant(space, 1)])

    @staticmethod
    def maximal_at_origin(space: VariableSpace) -> "Ideal":
        return Ideal(space, [Polynomial.variable(space, v) for v in space.names])

    def reduced_basis(self, order: MonomialOrder = GREVLEX) -> tuple[Polynomial, ...]:
        cached = self._reduced.get(order.name)
        if cached is None:
            raw = _buchberger([dict(g.terms) for g in self.generators], order)
            reduced = _reduced_from_groebner(raw, order)
            cached = tuple(Polynomial(self.space, t) for t in reduced)
            self._reduced[order.name] = cached
        return cached

    def leading_exponents(self, order: MonomialOrder = GREVLEX):
        return [g.leading(order)[0] for g in self.reduced_basis(order)]

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def monomial_exponents(self):
        if not self.is_monomial():
            raise ComputationRefused("operation requires a monomial ideal")
        return [next(iter(g.terms)) for g in self.generators]

    def __repr__(self):
        inside = ", ".join(render(g) for g in self.generators) or "0"
        return f"Ideal({inside})"

    def to_json(self, order: MonomialOrder = GREVLEX, reduced: bool = False) -> dict:
        gens = self.reduced_basis(order) if reduced else self.generators
        doc = {
            "vars": list(self.space.base),
            "order": order.name,
            "generators": [render(g, order) for g in gens],
        }
        if self.space.params:
            doc["params"] = list(self.space.params)
        if reduced:
            doc["reduced"] = True
        return doc

    @staticmethod
    def from_json(doc: dict) -> "Ideal":
        space = VariableSpace(tuple(doc["vars"]), tuple(doc.get("params", ())))
        return Ideal.from_strings(space, doc["generators"])


def reduced_groebner(ideal: Ideal, order: MonomialOrder = GREVLEX) -> Ideal:
    """Fill the reduced-basis cache and return the ideal."""
    ideal.reduced_basis(order)
    return ideal


def normal_form(f: Polynomial, ideal: Ideal, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Unique remainder of ``f`` modulo the reduced basis; zero iff ``f`` is a member."""
    if f.space != ideal.space:
        raise InputError("polynomial and ideal live in different variable spaces")
    reducers = [
        (g.leading(order)[0], g.leading(order)[1], g.terms)
        for g in ideal.reduced_basis(order)
    ]
    return Polynomial(f.space, _reduce_full(dict(f.terms), reducers, order))


def ideal_contains(outer: Ideal, inner: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    """True when every generator of ``inner`` lies in ``outer``."""
    if outer.space != inner.space:
        raise InputError("ideal containment requires a common variable space")
    return all(normal_form(g, outer, order).is_zero() for g in inner.generators)


def ideal_equal(a: Ideal, b: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    """Canonical equality: identical reduced Groebner bases."""
    if a.space != b.space:
        raise InputError("ideal equality requires a common variable space")
    return list(a.reduced_basis(order)) == list(b.reduced_basis(order))


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.space != b.space:
        raise InputError("ideal sum requires a common variable space")
    return Ideal(a.space, a.generators + b.generators)


def _poly_sort_key(p: Polynomial):
    return [(GREVLEX.key(e), c) for e, c in p.sorted_terms(GREVLEX)]


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.space != b.space:
        raise InputError("ideal product requires a common variable space")
    gens = {f * g for f in a.generators for g in b.generators}
    return Ideal(a.space, sorted(gens, key=_poly_sort_key))

def ideal_power(a: Ideal, k: int) -> Ideal:
    if k < 0:
        raise InputError("ideal powers need a nonnegative exponent")
    if k == 0:
        return Ideal.unit(a.space)
    result = a
    for _ in range(k - 1):
        result = ideal_product(result, a)
    return result


def ideal_combine(op: str, a: Ideal, other) -> Ideal:
    """Dispatcher for generator-level ideal algebra: sum, product, power."""
    if op == "sum":
        return ideal_sum(a, other)
    if op == "product":
        return ideal_product(a, other)
    if op == "power":
        return ideal_power(a, other)
    raise InputError(f"unknown ideal operation {op!r}")


def is_trivial_at_origin(ideal: Ideal) -> bool:
    """True iff the ideal is not contained in the maximal ideal of the origin.

    Sound and complete without any basis computation: the generators generate,
    and the maximal ideal at the origin is exactly the polynomials with zero
    constant term.
    """
    return any(g.constant_term() != 0 for g in ideal.generators)


# -- staircases ------------------------------------------------------------------

class StandardMonomialBasis:
    """Monomials outside the leading-term ideal, with their degrees."""

    __slots__ = ("monomials", "degrees", "finite")

    def __init__(self, monomials, degrees, finite: bool):
        self.monomials = tuple(monomials)
        self.degrees = tuple(degrees)
        self.finite = finite

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)


def standard_monomials(
    ideal: Ideal,
    degree_cap: int | None = None,
    weights: WeightVector | None = None,
    order: MonomialOrder = GREVLEX,
) -> StandardMonomialBasis:
    """Enumerate the staircase of an ideal.

    The quotient is finite-dimensional exactly when every variable has a pure
    power among the leading terms; in that case the complete basis is returned.
    Otherwise enumeration stops at ``degree_cap`` (an error if none is given)
    and the basis is flagged infinite.
    """
    leads = ideal.leading_exponents(order)
    dim = ideal.space.dim
    if any(sum(e) == 0 for e in leads):  # unit ideal: zero quotient
        return StandardMonomialBasis((), (), True)

    bounds = [None] * dim
    for e in leads:
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    finite = all(b is not None for b in bounds)

    if finite:
        ranges = [range(b) for b in bounds]
    else:
        if degree_cap is None:
            raise ComputationRefused(
                "the quotient is infinite-dimensional; supply a degree cap to enumerate"
            )
        ranges = [range(degree_cap + 1)] * dim

    found = []
    for e in itertools.product(*ranges):
        if not finite and sum(e) > degree_cap:
            continue
        if not any(monomial_divides(lead, e) for lead in leads):
            found.append(e)
    found.sort(key=order.key)
    if weights is None:
        degrees = [monomial_degree(e) for e in found]
    else:
        degrees = [monomial_weighted_degree(e, weights) for e in found]
    return StandardMonomialBasis(found, degrees, finite)


# -- independent membership oracle -------------------------------------------------

def _monomials_up_to(dim: int, max_degree: int):
    for e in itertools.product(range(max_degree + 1), repeat=dim):
        if sum(e) <= max_degree:
            yield e


def membership_oracle(
    f: Polynomial, gens, degree_bound: int
) -> bool:
    """Decide membership by exact linear algebra over monomial multiples.

    Tests whether ``f`` lies in the span of ``{m*g : deg(m*g) <= degree_bound}``.
    Sound for positive answers always; complete for homogeneous data once the
    bound reaches ``deg(f)``.  Independent of the division algorithm on purpose.
    """
    gens = [g for g in gens if not g.is_zero()]
    if f.is_zero():
        return True
    d = f.total_degree()
    if d > degree_bound:
        raise InputError(
            f"degree bound {degree_bound} is below deg(f) = {d}; raise the bound"
        )
    homogeneous = (
        len({sum(e) for e in f.terms}) == 1
        and all(len({sum(e) for e in g.terms}) == 1 for g in gens)
    )
    products: list[Polynomial] = []
    for g in gens:
        dg = g.total_degree()
        if dg > degree_bound:
            continue
        for m in _monomials_up_to(f.space.dim, degree_bound - dg):
            if homogeneous and sum(m) + dg != d:
                continue
            products.append(g * Polynomial.monomial(f.space, m))
    support = sorted({e for p in products for e in p.terms} | set(f.terms))
    index = {e: i for i, e in enumerate(support)}
    columns = []
    for p in products:
        col = [Fraction(0)] * len(support)
        for e, c in p.terms.items():
            col[index[e]] = c
        columns.append(col)
    target = [Fraction(0)] * len(support)
    for e, c in f.terms.items():
        target[index[e]] = c
    return solve_linear(columns, target) is not None


# -- divisorial / codimension-two factorization ------------------------------------

def divisorial_part(ideal: Ideal, assert_codim2: bool = False):
    """Split ``I = (g) * B`` with ``g`` the common monomial factor.

    For monomial ideals ``g`` is the componentwise minimum of the generator
    exponents and ``B`` the quotient, an exact identity.  For anything else the
    caller must assert that the ideal already defines a codimension >= 2
    subscheme, in which case ``g = 1``; general multivariate gcd extraction is
    deliberately out of scope.
    """
    if assert_codim2 or not ideal.generators:
        return Polynomial.constant(ideal.space, 1), ideal
    if not ideal.is_monomial():
        raise ComputationRefused(
            "divisorial factorization is only computed for monomial ideals; "
            "pass an explicit codimension-two assertion for other inputs"
        )
    exps = ideal.monomial_exponents()
    g_exp = tuple(min(e[i] for e in exps) for i in range(ideal.space.dim))
    g = Polynomial.monomial(ideal.space, g_exp)
    rest = Ideal(
        ideal.space,
        [Polynomial.monomial(ideal.space, monomial_div(e, g_exp)) for e in exps],
    )
    return g, rest


def ideal_to_json_string(ideal: Ideal, order: MonomialOrder = GREVLEX, reduced=False) -> str:
    return json.dumps(ideal.to_json(order, reduced=reduced), sort_keys=True)
