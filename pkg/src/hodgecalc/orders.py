"""Monomial orders on exponent tuples.

A monomial is represented throughout the package as a tuple of nonnegative
integer exponents, one entry per variable of the ambient variable space
(base variables first, then parameter variables).  Both supported orders are
degree-compatible total orders refining divisibility, with variable priority
following the variable-space order:

* graded reverse lexicographic (default): compare total degree, then the
  *last* nonzero entry of the difference decides, reversed sign;
* graded lexicographic: compare total degree, then exponents left to right.

``key(e)`` returns a tuple that sorts ascending in the order, so the leading
monomial of a set is ``max(exponents, key=order.key)``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MonomialOrder:
    """A named degree-compatible monomial order."""

    name: str

    def key(self, exponents: tuple[int, ...]):
        if self.name == "grevlex":
            return (sum(exponents), tuple(-e for e in reversed(exponents)))
        if self.name == "grlex":
            return (sum(exponents), exponents)
        raise ValueError(f"unknown monomial order {self.name!r}")


GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")

_BY_NAME = {"grevlex": GREVLEX, "grlex": GRLEX}


def order_by_name(name: str) -> MonomialOrder:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}; use grevlex or grlex") from None
