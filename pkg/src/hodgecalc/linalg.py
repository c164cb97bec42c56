"""Small exact linear-algebra helpers over the rationals.

Dense Gaussian elimination on lists of ``Fraction`` rows.  Everything here is
desk scale (tens of rows); clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = "list[list[Fraction]]"


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column indices)."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_linear(columns: Matrix, target: "list[Fraction]") -> "list[Fraction] | None":
    """Solve ``sum_j x_j * columns[j] == target`` exactly; None if inconsistent."""
    if not columns:
        return [] if all(v == 0 for v in target) else None
    nrows = len(columns[0])
    aug = [[columns[j][i] for j in range(len(columns))] + [Fraction(target[i])]
           for i in range(nrows)]
    reduced, pivots = rref(aug)
    ncols = len(columns)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(reduced, pivots):
        x[c] = row[-1]
    return x


def nullspace(rows: Matrix) -> Matrix:
    """A basis of the right kernel of the matrix, as a list of vectors."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(reduced, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis
