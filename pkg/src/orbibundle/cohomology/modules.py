"""Coefficient modules: ``Z^rank + Z/t_1 + ...`` with generators acting by integer matrices."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..linalg.intmat import identity, matmul

Matrix = list[list[int]]


def _inverse(m: Matrix) -> Matrix:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            raise ValueError("action matrix is singular")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    inv = [[a[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("action matrix is not invertible over Z")
    return [[int(x) for x in row] for row in inv]


@dataclass(frozen=True)
class CoefficientModule:
    """A finitely generated ``Z[G]``-module for a group given by generator labels.

    Elements are integer vectors of length ``rank + len(torsion)``; the last
    ``len(torsion)`` coordinates are read modulo the torsion orders.
    """

    rank: int
    torsion: tuple[int, ...]
    action: tuple[tuple[str, tuple[tuple[int, ...], ...]], ...]
    name: str = ""

    @property
    def dim(self) -> int:
        return self.rank + len(self.torsion)

    def matrix(self, label: str) -> Matrix:
        for l, m in self.action:
            if l == label:
                return [list(r) for r in m]
        raise KeyError(f"module has no action for generator {label!r}")

    def relation_vectors(self) -> list[list[int]]:
        d = self.dim
        out = []
        for i, t in enumerate(self.torsion):
            v = [0] * d
            v[self.rank + i] = t
            out.append(v)
        return out

    def rho(self, word, labels) -> Matrix:
        """Matrix of a word (in the integer-letter convention) over ``labels``."""
        m = identity(self.dim)
        cache: dict[int, Matrix] = {}
        for x in word:
            if x not in cache:
                base = self.matrix(labels[abs(x) - 1])
                cache[x] = base if x > 0 else _inverse(base)
            m = matmul(m, cache[x])
        return m

    def restrict(self, labels) -> "CoefficientModule":
        keep = set(labels)
        return CoefficientModule(self.rank, self.torsion, tuple((l, m) for l, m in self.action if l in keep), self.name)

    @property
    def signs(self) -> dict[str, int]:
        """Scalar action on a rank-one or order-two module."""
        if self.dim != 1:
            raise ValueError("signs only defined for one-dimensional modules")
        return {l: m[0][0] for l, m in self.action}


def integral(signs: dict[str, int], name: str | None = None) -> CoefficientModule:
    """``Z`` with each generator acting by ``+1`` or ``-1``."""
    if name is None:
        name = "Z" if all(s == 1 for s in signs.values()) else "Zu"
    return CoefficientModule(1, (), tuple((l, ((s,),)) for l, s in signs.items()), name)


def trivial_z(labels) -> CoefficientModule:
    return integral({l: 1 for l in labels}, "Z")


def twisted_z(action) -> CoefficientModule:
    """``Z^u`` for an :class:`~orbibundle.actions.Action`."""
    return integral(action.as_dict(), "Zu")


def f2(labels) -> CoefficientModule:
    return CoefficientModule(0, (2,), tuple((l, ((1,),)) for l in labels), "F2")


def cyclic(order: int, signs: dict[str, int], name: str = "") -> CoefficientModule:
    return CoefficientModule(0, (order,), tuple((l, ((s,),)) for l, s in signs.items()), name or f"Z/{order}")
