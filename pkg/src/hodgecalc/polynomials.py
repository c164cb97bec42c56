"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients, tied to a :class:`VariableSpace` that names the variables.  The
space is split into *base* variables (the coordinates of affine space) and
optional *parameter* variables (auxiliary coordinates used for coefficient
extraction and specialization).  All arithmetic is exact; no floats appear
anywhere.

  x1^2 + 3/2*x2   →   {(2, 0): Fraction(1), (0, 1): Fraction(3, 2)}

The zero polynomial has an empty term map.  Canonical form (no zero
coefficients, one entry per monomial) is maintained by every constructor and
operation, so ``==`` on polynomials is reliable identity of mathematical
objects.  Values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DegreeCapExceeded, InputError, ParseError
from .orders import GREVLEX, MonomialOrder

# Hard ceiling on total degree; exceeding it raises instead of silently
# producing huge objects.
DEGREE_CAP = 1 << 20

Exponents = "tuple[int, ...]"
Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class VariableSpace:
    """An ordered list of base variables plus optional parameter variables."""

    base: tuple[str, ...]
    params: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.base) < 1:
            raise InputError("a variable space needs at least one base variable")
        names = self.base + self.params
        if len(set(names)) != len(names):
            raise InputError(f"duplicate variable names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise InputError(f"invalid variable name {name!r}")

    @property
    def names(self) -> tuple[str, ...]:
        return self.base + self.params

    @property
    def dim(self) -> int:
        return len(self.base) + len(self.params)

    @property
    def n_base(self) -> int:
        return len(self.base)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r} in space {self.names}") from None

    def base_only(self) -> "VariableSpace":
        return VariableSpace(self.base) if self.params else self


def space(*base: str, params: Iterable[str] = ()) -> VariableSpace:
    """Convenience constructor: ``space("x", "y", params=["t"])``."""
    return VariableSpace(tuple(base), tuple(params))


@dataclass(frozen=True)
class WeightVector:
    """Positive integer weights on the base variables; all-ones is unweighted."""

    weights: tuple[int, ...]

    def __post_init__(self):
        if not self.weights or any(w < 1 or w != int(w) for w in self.weights):
            raise InputError(f"weights must be positive integers, got {self.weights}")

    @property
    def total(self) -> int:
        return sum(self.weights)

    @staticmethod
    def ones(n: int) -> "WeightVector":
        return WeightVector((1,) * n)


# -- monomial helpers (exponent tuples) --------------------------------------

def monomial_degree(e: Exponents) -> int:
    return sum(e)


def monomial_weighted_degree(e: Exponents, w: WeightVector) -> int:
    # Parameter exponents (beyond the weighted base block) count with weight 1.
    wt = w.weights
    return sum(wi * ei for wi, ei in zip(wt, e)) + sum(e[len(wt):])


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    e = tuple(x + y for x, y in zip(a, b))
    if sum(e) > DEGREE_CAP:
        raise DegreeCapExceeded(f"monomial degree {sum(e)} exceeds cap {DEGREE_CAP}")
    return e


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    """Exponent tuple of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("space", "terms", "_hash")

    def __init__(self, space: VariableSpace, terms: Mapping[Exponents, Coefficient]):
        clean: dict[Exponents, Fraction] = {}
        dim = space.dim
        for e, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(e) != dim:
                raise InputError(f"exponent tuple {e} does not match space dimension {dim}")
            if any(x < 0 for x in e):
                raise InputError(f"negative exponent in {e}")
            if sum(e) > DEGREE_CAP:
                raise DegreeCapExceeded(f"degree {sum(e)} exceeds cap {DEGREE_CAP}")
            clean[e] = clean.get(e, Fraction(0)) + c
        clean = {e: c for e, c in clean.items() if c != 0}
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Polynomial is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(space: VariableSpace) -> "Polynomial":
        return Polynomial(space, {})

    @staticmethod
    def constant(space: VariableSpace, c: Coefficient) -> "Polynomial":
        return Polynomial(space, {(0,) * space.dim: Fraction(c)})

    @staticmethod
    def variable(space: VariableSpace, name: str) -> "Polynomial":
        e = [0] * space.dim
        e[space.index(name)] = 1
        return Polynomial(space, {tuple(e): Fraction(1)})

    @staticmethod
    def monomial(space: VariableSpace, e: Exponents, c: Coefficient = 1) -> "Polynomial":
        return Polynomial(space, {tuple(e): Fraction(c)})

    # -- basic queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def is_monomial(self) -> bool:
        """A single term (any nonzero coefficient)."""
        return len(self.terms) == 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.space.dim, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order_at_origin(self) -> int:
        """Minimal total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def uses_params(self) -> bool:
        nb = self.space.n_base
        return any(any(e[nb:]) for e in self.terms)

    def leading(self, order: MonomialOrder = GREVLEX) -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise InputError("the zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def sorted_terms(self, order: MonomialOrder = GREVLEX, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    # -- arithmetic -------------------------------------------------------------

    def _check_space(self, other: "Polynomial"):
        if self.space != other.space:
            raise InputError(
                f"variable-space mismatch: {self.space.names} vs {other.space.names}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.space, other)
        self._check_space(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.space, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.space, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return Polynomial.zero(self.space)
            return Polynomial(self.space, {e: co * c for e, co in self.terms.items()})
        self._check_space(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial(self.space, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative polynomial powers are not defined")
        result = Polynomial.constant(self.space, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            k >>= 1
            if base_needed and k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.space, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Polynomial({render(self)!r})"

    def __str__(self):
        return render(self)


def partial_derivative(f: Polynomial, var_index: int) -> Polynomial:
    """Formal partial derivative with respect to a base variable."""
    if not 0 <= var_index < f.space.n_base:
        raise InputError(
            f"derivative index {var_index} outside the base block of size {f.space.n_base}"
        )
    out: dict[tuple, Fraction] = {}
    for e, c in f.terms.items():
        k = e[var_index]
        if k == 0:
            continue
        e2 = e[:var_index] + (k - 1,) + e[var_index + 1:]
        out[e2] = out.get(e2, Fraction(0)) + c * k
    return Polynomial(f.space, out)


def gradient(f: Polynomial) -> list[Polynomial]:
    return [partial_derivative(f, i) for i in range(f.space.n_base)]


def substitute(
    f: Polynomial,
    assignments: Mapping[str, Union[Polynomial, int, Fraction]],
    into: VariableSpace | None = None,
) -> Polynomial:
    """Evaluate/compose by substituting polynomials or rationals for variables.

    Unassigned variables must exist (by name) in the target space ``into``
    (default: the space of ``f``).  Substituting rationals for every parameter
    variable with ``into=f.space.base_only()`` specializes a parametric family.
    """
    target = into if into is not None else f.space
    values: list[Polynomial] = []
    for name in f.space.names:
        if name in assignments:
            v = assignments[name]
            if isinstance(v, (int, Fraction)):
                v = Polynomial.constant(target, v)
            elif v.space != target:
                raise InputError(
                    f"substitution value for {name!r} lives in {v.space.names}, "
                    f"expected {target.names}"
                )
            values.append(v)
        else:
            if name not in target.names:
                raise InputError(
                    f"variable {name!r} is unassigned and absent from the target space"
                )
            values.append(Polynomial.variable(target, name))
    result = Polynomial.zero(target)
    for e, c in f.terms.items():
        term = Polynomial.constant(target, c)
        for v, k in zip(values, e):
            if k:
                term = term * (v ** k)
        result = result + term
    return result


def weighted_degree_check(
    f: Polynomial, w: WeightVector | None = None
) -> tuple[bool, int | None]:
    """Decide weighted homogeneity; returns (True, common degree) or (False, None)."""
    if f.is_zero():
        raise InputError("homogeneity of the zero polynomial is undefined")
    if f.uses_params():
        raise InputError("homogeneity check expects a polynomial in base variables only")
    if w is None:
        w = WeightVector.ones(f.space.n_base)
    if len(w.weights) != f.space.n_base:
        raise InputError("weight vector length must match the number of base variables")
    degrees = {monomial_weighted_degree(e, w) for e in f.terms}
    if len(degrees) == 1:
        return True, degrees.pop()
    return False, None


# -- parsing and rendering ------------------------------------------------------
#
# Grammar (whitespace-insensitive):
#   expr    := term (('+'|'-') term)*
#   term    := factor ('*' factor)*
#   factor  := atom ('^' nat)?
#   atom    := rational | variable | '(' expr ')' | '-' factor
#   rational:= nat ('/' nat)?

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), m.start()))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start()))
        else:
            tokens.append(("op", m.group("op"), m.start()))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, space: VariableSpace):
        self.tokens = tokens
        self.space = space
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse_expr(self) -> Polynomial:
        result = self.parse_term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.parse_term()
                result = result + rhs if val == "+" else result - rhs
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, k, pos = self.next()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            return base ** k
        return base

    def parse_atom(self) -> Polynomial:
        kind, val, pos = self.next()
        if kind == "num":
            value = Fraction(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, v3, pos3 = self.next()
                if k3 != "num" or v3 == 0:
                    raise ParseError("denominator must be a positive integer", pos3)
                value = Fraction(val, v3)
            return Polynomial.constant(self.space, value)
        if kind == "name":
            if val not in self.space.names:
                raise ParseError(f"unknown variable {val!r}", pos)
            return Polynomial.variable(self.space, val)
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "op" and val == "-":
            return -self.parse_factor()
        if kind == "op" and val == "+":
            return self.parse_factor()
        raise ParseError("expected a number, variable or parenthesized expression", pos)


def poly_parse(text: str, space: VariableSpace) -> Polynomial:
    """Parse a polynomial in the input grammar; round-trips with :func:`render`."""
    parser = _Parser(_tokenize(text), space)
    result = parser.parse_expr()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise ParseError("trailing input", pos)
    return result


def _render_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical rendering: terms sorted descending in the active order."""
    if f.is_zero():
        return "0"
    names = f.space.names
    parts = []
    for e, c in f.sorted_terms(order):
        factors = [
            name if k == 1 else f"{name}^{k}"
            for name, k in zip(names, e)
            if k
        ]
        mag = abs(c)
        if not factors:
            body = _render_coefficient(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_render_coefficient(mag)] + factors)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    text = body if sign == "+" else f"-{body}"
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def parse_generators(text: str, space: VariableSpace) -> list[Polynomial]:
    """Parse a comma-separated generator list."""
    gens = []
    for chunk in _split_top_level(text):
        if chunk.strip():
            gens.append(poly_parse(chunk, space))
    return gens


def _split_top_level(text: str):
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[start:i]
            start = i + 1
    yield text[start:]


def infer_space(text: str) -> VariableSpace:
    """Build a base-only space from the variables in order of first appearance."""
    seen: list[str] = []
    for m in re.finditer(r"[A-Za-z_][A-Za-z_0-9]*", text):
        if m.group(0) not in seen:
            seen.append(m.group(0))
    if not seen:
        raise InputError("no variables found; pass the variable list explicitly")
    return VariableSpace(tuple(seen))
