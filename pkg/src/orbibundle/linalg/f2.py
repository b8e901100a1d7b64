"""Linear algebra over the two-element field.

Vectors are lists of 0/1; matrices are lists of rows.
"""
from __future__ import annotations


def rref(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[x & 1 for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                m[i] = [a ^ b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list[int]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column, in column order."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = 1
        basis.append(v)
    return basis


def solve(rows: list[list[int]], rhs: list[int], ncols: int) -> list[int] | None:
    """One solution of ``rows @ x = rhs`` or ``None``."""
    aug = [list(r) + [b & 1] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(b[0]) if b else 0
    return [[sum(a_i[k] & b[k][j] for k in range(len(b))) & 1 for j in range(n)] for a_i in a]


def matvec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(x & y for x, y in zip(row, v)) & 1 for row in a]


def coordinates(basis: list[list[int]], v: list[int]) -> list[int] | None:
    """Coordinates of ``v`` in the span of ``basis`` (vectors), or ``None``."""
    if not basis:
        return [] if not any(v) else None
    n = len(v)
    cols = [[b[i] for b in basis] for i in range(n)]
    return solve(cols, v, len(basis))
