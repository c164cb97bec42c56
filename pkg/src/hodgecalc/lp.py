"""Exact rational linear programming by two-phase primal simplex.

Solves ``min c.x  subject to  A x = b, x >= 0`` entirely over ``Fraction``;
there is no floating point anywhere, so optima are exact rationals.  Bland's
rule guarantees termination.  Problem sizes here are tiny (a handful of rows
from Newton-polyhedron membership queries), so the dense tableau is fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LPInfeasible

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    objective: Fraction | None
    solution: "list[Fraction] | None"


def _pivot(tableau, basis, row, col):
    inv = 1 / tableau[row][col]
    tableau[row] = [v * inv for v in tableau[row]]
    for i, r in enumerate(tableau):
        if i != row and r[col] != 0:
            factor = r[col]
            tableau[i] = [a - factor * b for a, b in zip(r, tableau[row])]
    basis[row] = col


def _simplex(tableau, basis, ncols):
    """Run Bland-rule simplex on a tableau whose last row is the objective."""
    while True:
        obj = tableau[-1]
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return OPTIMAL
        best = None
        for i in range(len(tableau) - 1):
            a = tableau[i][col]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(tableau, basis, best[1], col)


def solve_lp(A, b, c) -> LPResult:
    """Minimize ``c.x`` over ``A x = b, x >= 0``; raises on infeasibility."""
    m = len(A)
    n = len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]

    # Phase 1: minimize the sum of artificial variables.
    width = n + m + 1
    tableau = []
    for i in range(m):
        row = A[i] + [Fraction(0)] * m + [b[i]]
        row[n + i] = Fraction(1)
        tableau.append(row)
    # Reduced costs of the phase-1 objective (sum of artificials), priced out
    # over the all-artificial starting basis.
    obj = [Fraction(0)] * width
    for j in range(n):
        obj[j] = -sum(A[i][j] for i in range(m))
    obj[-1] = -sum(b)
    tableau.append(obj)
    basis = [n + i for i in range(m)]
    _simplex(tableau, basis, n + m)
    if -tableau[-1][-1] != 0:
        raise LPInfeasible("linear program has no feasible point")

    # Drive any artificial variables out of the basis, then drop their columns.
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is not None:
                _pivot(tableau, basis, i, col)
    keep_rows = [i for i in range(m) if basis[i] < n]
    tableau = [[tableau[i][j] for j in range(n)] + [tableau[i][-1]] for i in keep_rows]
    basis = [basis[i] for i in keep_rows]

    # Phase 2: original objective, priced out over the current basis.
    obj = list(c) + [Fraction(0)]
    for i, bi in enumerate(basis):
        if obj[bi] != 0:
            factor = obj[bi]
            obj = [a - factor * bv for a, bv in zip(obj, tableau[i])]
    tableau.append(obj)
    status = _simplex(tableau, basis, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = tableau[i][-1]
    objective = sum(ci * xi for ci, xi in zip(c, x))
    return LPResult(OPTIMAL, objective, x)
