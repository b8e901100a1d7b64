"""Pure-Python Smith normal form kernel.

Operates in place on Python integers (arbitrary precision).  The compiled
kernel in ``_smith_core`` mirrors this routine step for step.
"""


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith(a, m, n):
    """Reduce the ``m x n`` integer matrix ``a`` to Smith form.

    Returns ``(S, U, Uinv, V)`` with ``U @ a @ V == S``, ``U @ Uinv == I``.
    ``a`` is not modified.
    """
    A = [list(row) for row in a]
    U = _identity(m)
    Uinv = _identity(m)
    V = _identity(n)

    def row_add(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        Ad, As = A[dst], A[src]
        for j in range(n):
            Ad[j] += q * As[j]
        Ud, Us = U[dst], U[src]
        for j in range(m):
            Ud[j] += q * Us[j]
        for row in Uinv:
            row[src] -= q * row[dst]

    def row_swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def row_neg(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    def col_add(dst, src, q):
        if q == 0:
            return
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def col_swap(i, j):
        if i == j:
            return
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                x = Ai[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        row_swap(t, pi)
        col_swap(t, pj)

        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    row_add(i, t, -q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    col_add(j, t, -q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                # a remainder is smaller than the pivot; move it into place
                best = None
                for i in range(t, m):
                    x = A[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, n):
                    x = A[t][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), t, j)
                _, bi, bj = best
                row_swap(t, bi)
                col_swap(t, bj)
                continue
            # divisibility: pivot must divide the whole trailing block
            bad = None
            for i in range(t + 1, m):
                Ai = A[i]
                for j in range(t + 1, n):
                    if Ai[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if A[t][t] < 0:
            row_neg(t)
        t += 1
    return A, U, Uinv, V
