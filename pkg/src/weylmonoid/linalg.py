"""Exact rational linear algebra on small dense matrices.

Matrices are sequences of rows; entries may be ``int`` or ``Fraction``.
Everything here is exact, nothing ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence]


def identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> tuple[tuple, ...]:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> tuple[tuple, ...]:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _frac_rows(m: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    rows = _frac_rows(m)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """Basis of {x : m x = 0}, one vector per free column."""
    if not m:
        return []
    ncols = len(m[0])
    rows, pivots = rref(m)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(v)
    return basis


def inverse(m: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [list(row) + list(e) for row, e in zip(_frac_rows(m), identity(n))]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def solve(a: Matrix, b: Sequence) -> list[Fraction] | None:
    """The unique solution of ``a x = b`` if it exists, else ``None``.

    ``a`` must have independent columns; an inconsistent system returns None.
    """
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    if pivots != list(range(ncols)):
        raise ValueError("columns are not independent")
    return [rows[i][ncols] for i in range(ncols)]


def symmetric_inertia(m: Matrix) -> tuple[list[Fraction], int, bool]:
    """Exact LDL^T with symmetric (diagonal) pivoting.

    Returns ``(pivots, zero_block, indefinite)``: the nonzero pivots in the
    order used, the size of the trailing all-zero block (the kernel dimension
    when no negative pivot occurs), and whether a negative direction was found.
    Elimination stops at the first negative pivot.
    """
    work = _frac_rows(m)
    active = list(range(len(work)))
    pivots: list[Fraction] = []
    while active:
        k = next((i for i in active if work[i][i] != 0), None)
        if k is None:
            if any(work[i][j] != 0 for i in active for j in active):
                # zero diagonal with a nonzero off-diagonal: [[0,b],[b,0]] block
                return pivots, 0, True
            return pivots, len(active), False
        d = work[k][k]
        if d < 0:
            pivots.append(d)
            return pivots, 0, True
        pivots.append(d)
        active.remove(k)
        for i in active:
            f = work[i][k] / d
            if f:
                for j in active:
                    work[i][j] -= f * work[k][j]
    return pivots, 0, False
