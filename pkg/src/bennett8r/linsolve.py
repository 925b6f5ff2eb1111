"""Small dense exact linear algebra over Fractions.

Plain Gaussian elimination with full pivoting; all entries are promoted to
``Fraction`` so the elimination is exact.  Sized for the 40x16 systems of the
dualization step and the 4x4 systems of the quaternionic linear solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Inconsistent


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass
class LinearSolution:
    """Solution of A x = b: particular solution, nullspace basis, rank."""

    particular: list
    nullspace: list = field(default_factory=list)
    rank: int = 0

    @property
    def unique(self) -> bool:
        return not self.nullspace


def solve_exact(matrix, rhs) -> LinearSolution:
    """Solve A x = b exactly; raises Inconsistent if no solution exists."""
    m = [[_frac(x) for x in row] for row in matrix]
    b = [_frac(x) for x in rhs]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    if any(len(row) != n_cols for row in m) or len(b) != n_rows:
        raise ValueError("ragged system")

    col_perm = list(range(n_cols))
    piv = 0
    for _ in range(min(n_rows, n_cols)):
        # Full pivoting: largest entry in the remaining block.
        best = None
        for r in range(piv, n_rows):
            for c in range(piv, n_cols):
                if m[r][c] != 0 and (best is None or abs(m[r][c]) > abs(m[best[0]][best[1]])):
                    best = (r, c)
        if best is None:
            break
        br, bc = best
        if br != piv:
            m[piv], m[br] = m[br], m[piv]
            b[piv], b[br] = b[br], b[piv]
        if bc != piv:
            for row in m:
                row[piv], row[bc] = row[bc], row[piv]
            col_perm[piv], col_perm[bc] = col_perm[bc], col_perm[piv]
        pivot = m[piv][piv]
        for r in range(piv + 1, n_rows):
            if m[r][piv] == 0:
                continue
            f = m[r][piv] / pivot
            for c in range(piv, n_cols):
                m[r][c] -= f * m[piv][c]
            b[r] -= f * b[piv]
        piv += 1
    rank = piv

    for r in range(rank, n_rows):
        if b[r] != 0:
            raise Inconsistent(f"row {r} has nonzero residual {b[r]}")

    # Back substitution on the pivoted columns; free columns parametrize the
    # nullspace.
    def back_substitute(rhs_vec, free_assign):
        x = [Fraction(0)] * n_cols
        for c in range(rank, n_cols):
            x[c] = free_assign[c - rank]
        for r in range(rank - 1, -1, -1):
            acc = rhs_vec[r]
            for c in range(r + 1, n_cols):
                acc -= m[r][c] * x[c]
            x[r] = acc / m[r][r]
        out = [Fraction(0)] * n_cols
        for pos, orig in enumerate(col_perm):
            out[orig] = x[pos]
        return out

    n_free = n_cols - rank
    particular = back_substitute(b, [Fraction(0)] * n_free)
    nullspace = []
    zero_rhs = [Fraction(0)] * n_rows
    for k in range(n_free):
        assign = [Fraction(0)] * n_free
        assign[k] = Fraction(1)
        nullspace.append(back_substitute(zero_rhs, assign))
    return LinearSolution(particular=particular, nullspace=nullspace, rank=rank)


def residual(matrix, rhs, x):
    """b - A x, exact."""
    out = []
    for row, bi in zip(matrix, rhs):
        acc = _frac(bi)
        for a, xi in zip(row, x):
            acc -= _frac(a) * _frac(xi)
        out.append(acc)
    return out
