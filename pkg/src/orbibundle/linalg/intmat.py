"""Small helpers for integer matrices stored as lists of rows."""
from __future__ import annotations

Matrix = list[list[int]]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if not a:
        return []
    k = len(b) if inner is None else inner
    n = len(b[0]) if b else 0
    out = zeros(len(a), n)
    for i, row in enumerate(a):
        orow = out[i]
        for t in range(k):
            x = row[t]
            if x:
                brow = b[t]
                for j in range(n):
                    if brow[j]:
                        orow[j] += x * brow[j]
    return out


def matvec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Matrix, cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def hstack(blocks: list[Matrix], rows: int) -> Matrix:
    out = [[] for _ in range(rows)]
    for blk in blocks:
        if not blk:
            continue
        for i in range(rows):
            out[i].extend(blk[i])
    return out


def from_columns(cols: list[list[int]], rows: int) -> Matrix:
    if not cols:
        return [[] for _ in range(rows)]
    return [[c[i] for c in cols] for i in range(rows)]


def columns(a: Matrix) -> list[list[int]]:
    return [list(c) for c in zip(*a)] if a and a[0] else []


def block(blocks: list[list[Matrix]], row_sizes: list[int], col_sizes: list[int]) -> Matrix:
    """Assemble a block matrix; ``None`` blocks are zero."""
    out = zeros(sum(row_sizes), sum(col_sizes))
    r0 = 0
    for bi, rs in enumerate(row_sizes):
        c0 = 0
        for bj, cs in enumerate(col_sizes):
            blk = blocks[bi][bj]
            if blk is not None:
                for i in range(rs):
                    row = blk[i]
                    orow = out[r0 + i]
                    for j in range(cs):
                        orow[c0 + j] = row[j]
            c0 += cs
        r0 += rs
    return out


def det(a: Matrix) -> int:
    """Exact determinant by fraction-free elimination (Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
