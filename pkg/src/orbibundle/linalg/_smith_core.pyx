# cython: language_level=3, cdivision=True
"""Compiled Smith normal form kernel on 64-bit integers.

Same pivoting sequence as ``_smith_py.smith``.  Entries are bounded by
``LIMIT`` so every product fits in a signed 64-bit word; if any entry
escapes the bound an ``OverflowError`` is raised and the caller falls back
to the arbitrary-precision kernel.
"""
from libc.stdlib cimport malloc, free

ctypedef long long i64

cdef i64 LIMIT = 1LL << 30


cdef inline i64 iabs(i64 x) nogil:
    return -x if x < 0 else x


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    cdef i64 q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline i64 floormod(i64 a, i64 b) nogil:
    return a - floordiv(a, b) * b


cdef class _Work:
    cdef i64 *A
    cdef i64 *U
    cdef i64 *Ui
    cdef i64 *V
    cdef Py_ssize_t m, n
    cdef bint overflow

    def __cinit__(self, Py_ssize_t m, Py_ssize_t n):
        self.m = m
        self.n = n
        self.overflow = False
        self.A = <i64 *> malloc(max(m * n, 1) * sizeof(i64))
        self.U = <i64 *> malloc(max(m * m, 1) * sizeof(i64))
        self.Ui = <i64 *> malloc(max(m * m, 1) * sizeof(i64))
        self.V = <i64 *> malloc(max(n * n, 1) * sizeof(i64))
        if not self.A or not self.U or not self.Ui or not self.V:
            raise MemoryError()

    def __dealloc__(self):
        free(self.A)
        free(self.U)
        free(self.Ui)
        free(self.V)

    cdef inline i64 chk(self, i64 x) nogil:
        if iabs(x) > LIMIT:
            self.overflow = True
        return x

    cdef void row_add(self, Py_ssize_t dst, Py_ssize_t src, i64 q) nogil:
        cdef Py_ssize_t j
        cdef Py_ssize_t m = self.m, n = self.n
        if q == 0:
            return
        if iabs(q) > LIMIT:
            self.overflow = True
            return
        for j in range(n):
            self.A[dst * n + j] = self.chk(self.A[dst * n + j] + q * self.A[src * n + j])
        for j in range(m):
            self.U[dst * m + j] = self.chk(self.U[dst * m + j] + q * self.U[src * m + j])
        for j in range(m):
            self.Ui[j * m + src] = self.chk(self.Ui[j * m + src] - q * self.Ui[j * m + dst])

    cdef void row_swap(self, Py_ssize_t a, Py_ssize_t b) nogil:
        cdef Py_ssize_t j
        cdef i64 tmp
        cdef Py_ssize_t m = self.m, n = self.n
        if a == b:
            return
        for j in range(n):
            tmp = self.A[a * n + j]
            self.A[a * n + j] = self.A[b * n + j]
            self.A[b * n + j] = tmp
        for j in range(m):
            tmp = self.U[a * m + j]
            self.U[a * m + j] = self.U[b * m + j]
            self.U[b * m + j] = tmp
        for j in range(m):
            tmp = self.Ui[j * m + a]
            self.Ui[j * m + a] = self.Ui[j * m + b]
            self.Ui[j * m + b] = tmp

    cdef void row_neg(self, Py_ssize_t a) nogil:
        cdef Py_ssize_t j
        cdef Py_ssize_t m = self.m, n = self.n
        for j in range(n):
            self.A[a * n + j] = -self.A[a * n + j]
        for j in range(m):
            self.U[a * m + j] = -self.U[a * m + j]
        for j in range(m):
            self.Ui[j * m + a] = -self.Ui[j * m + a]

    cdef void col_add(self, Py_ssize_t dst, Py_ssize_t src, i64 q) nogil:
        cdef Py_ssize_t i
        cdef Py_ssize_t m = self.m, n = self.n
        if q == 0:
            return
        if iabs(q) > LIMIT:
            self.overflow = True
            return
        for i in range(m):
            self.A[i * n + dst] = self.chk(self.A[i * n + dst] + q * self.A[i * n + src])
        for i in range(n):
            self.V[i * n + dst] = self.chk(self.V[i * n + dst] + q * self.V[i * n + src])

    cdef void col_swap(self, Py_ssize_t a, Py_ssize_t b) nogil:
        cdef Py_ssize_t i
        cdef i64 tmp
        cdef Py_ssize_t m = self.m, n = self.n
        if a == b:
            return
        for i in range(m):
            tmp = self.A[i * n + a]
            self.A[i * n + a] = self.A[i * n + b]
            self.A[i * n + b] = tmp
        for i in range(n):
            tmp = self.V[i * n + a]
            self.V[i * n + a] = self.V[i * n + b]
            self.V[i * n + b] = tmp

    cdef bint run(self) nogil:
        cdef Py_ssize_t m = self.m, n = self.n
        cdef Py_ssize_t t = 0, i, j, pi, pj, bad
        cdef i64 x, p, q, bestv
        cdef bint dirty, found
        while t < m and t < n:
            found = False
            bestv = 0
            pi = 0
            pj = 0
            for i in range(t, m):
                for j in range(t, n):
                    x = self.A[i * n + j]
                    if x != 0 and (not found or iabs(x) < bestv):
                        found = True
                        bestv = iabs(x)
                        pi = i
                        pj = j
                        if bestv == 1:
                            break
                if found and bestv == 1:
                    break
            if not found:
                break
            self.row_swap(t, pi)
            self.col_swap(t, pj)
            while True:
                if self.overflow:
                    return False
                p = self.A[t * n + t]
                dirty = False
                for i in range(t + 1, m):
                    if self.A[i * n + t] != 0:
                        q = floordiv(self.A[i * n + t], p)
                        self.row_add(i, t, -q)
                        if self.A[i * n + t] != 0:
                            dirty = True
                for j in range(t + 1, n):
                    if self.A[t * n + j] != 0:
                        q = floordiv(self.A[t * n + j], p)
                        self.col_add(j, t, -q)
                        if self.A[t * n + j] != 0:
                            dirty = True
                if self.overflow:
                    return False
                if dirty:
                    found = False
                    for i in range(t, m):
                        x = self.A[i * n + t]
                        if x != 0 and (not found or iabs(x) < bestv):
                            found = True
                            bestv = iabs(x)
                            pi = i
                            pj = t
                    for j in range(t, n):
                        x = self.A[t * n + j]
                        if x != 0 and (not found or iabs(x) < bestv):
                            found = True
                            bestv = iabs(x)
                            pi = t
                            pj = j
                    self.row_swap(t, pi)
                    self.col_swap(t, pj)
                    continue
                bad = -1
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if floormod(self.A[i * n + j], p) != 0:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad < 0:
                    break
                self.row_add(t, bad, 1)
            if self.A[t * n + t] < 0:
                self.row_neg(t)
            t += 1
        return not self.overflow


def smith(a, Py_ssize_t m, Py_ssize_t n):
    """Compiled counterpart of ``_smith_py.smith``; raises OverflowError."""
    cdef _Work w = _Work(m, n)
    cdef Py_ssize_t i, j
    cdef i64 x
    cdef bint ok
    for i in range(m):
        row = a[i]
        for j in range(n):
            x = row[j]
            if iabs(x) > LIMIT:
                raise OverflowError("entry exceeds 64-bit kernel bound")
            w.A[i * n + j] = x
    for i in range(m):
        for j in range(m):
            w.U[i * m + j] = 1 if i == j else 0
            w.Ui[i * m + j] = 1 if i == j else 0
    for i in range(n):
        for j in range(n):
            w.V[i * n + j] = 1 if i == j else 0
    with nogil:
        ok = w.run()
    if not ok:
        raise OverflowError("intermediate entry exceeds 64-bit kernel bound")
    S = [[w.A[i * n + j] for j in range(n)] for i in range(m)]
    U = [[w.U[i * m + j] for j in range(m)] for i in range(m)]
    Ui = [[w.Ui[i * m + j] for j in range(m)] for i in range(m)]
    V = [[w.V[i * n + j] for j in range(n)] for i in range(n)]
    return S, U, Ui, V
