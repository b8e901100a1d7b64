"""Smith normal form over the integers with unimodular transforms.

The compiled kernel is used when it was built and the input fits its 64-bit
bound; otherwise the pure-Python kernel runs.  Set ``ORBIBUNDLE_PURE=1`` to
force the Python kernel.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from . import _smith_py

try:
    if os.environ.get("ORBIBUNDLE_PURE") == "1":
        raise ImportError("pure kernel requested")
    from . import _smith_core
except ImportError:
    _smith_core = None

BACKEND = "compiled" if _smith_core is not None else "python"

Matrix = list[list[int]]


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == S`` with ``S`` diagonal and ``d_1 | d_2 | ...``.

    ``Uinv`` is the inverse of ``U``; all three transforms are unimodular.
    """

    S: Matrix
    U: Matrix
    Uinv: Matrix
    V: Matrix
    rows: int
    cols: int

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(self.rows, self.cols)) if self.S[i][i]]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def invariant_factors(self) -> list[int]:
        """Nonzero diagonal entries, units included."""
        return self.diagonal

    def kernel_basis(self) -> list[list[int]]:
        """Basis of the integer kernel ``{x : A x = 0}`` as column vectors."""
        r = self.rank
        return [[self.V[i][j] for i in range(self.cols)] for j in range(r, self.cols)]


def _run(a: Matrix, m: int, n: int, backend: str | None):
    if backend is None:
        backend = BACKEND
    if backend == "compiled":
        if _smith_core is None:
            raise RuntimeError("compiled kernel not available")
        try:
            return _smith_core.smith(a, m, n)
        except OverflowError:
            pass
    return _smith_py.smith(a, m, n)


def smith_normal_form(a: Matrix, cols: int | None = None, backend: str | None = None) -> SmithForm:
    """Smith normal form of an integer matrix given as a list of rows.

    ``cols`` is needed only when ``a`` has no rows.
    """
    m = len(a)
    n = len(a[0]) if m else (cols or 0)
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    S, U, Uinv, V = _run(a, m, n, backend)
    return SmithForm(S, U, Uinv, V, m, n)
