"""Mod-2 first cohomology, restriction to the kernel, and cup squares on surfaces."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..actions import Action, kernel_subgroup
from ..linalg import f2
from ..presentation import Presentation
from ..rewriting import is_surface_relator, tietze_reduce


def f2_h1_basis(pres: Presentation) -> list[list[int]]:
    """Echelon basis of ``Hom(pi, F_2)`` as generator-value vectors."""
    rows = [[x % 2 for x in row] for row in pres.relator_matrix()]
    return f2.nullspace(rows, pres.ngens)


def word_value(values, w) -> int:
    """Value of a mod-2 class on a word."""
    return sum(values[abs(x) - 1] for x in w) % 2


@dataclass(frozen=True)
class RestrictionData:
    """Restriction ``H^1(pi;F_2) -> H^1(kappa;F_2)`` plus the conjugation data.

    ``matrix`` has one column per basis class of ``pi`` holding its
    coordinates in ``kappa_basis``.  ``theta`` is conjugation by the
    transversal element on ``H^1(kappa;F_2)``; ``r`` and ``s`` are the
    dimensions of the kernel and image of ``theta + 1``.
    """

    pi_basis: list = field(repr=False)
    kappa_basis: list = field(repr=False)
    matrix: list
    theta: list
    r: int
    s: int

    @property
    def rank(self) -> int:
        cols = len(self.pi_basis)
        return f2.rank([[self.matrix[i][j] for i in range(len(self.matrix))] for j in range(cols)], len(self.kappa_basis))

    def to_dict(self) -> dict:
        return {"matrix": self.matrix, "theta": self.theta, "r": self.r, "s": self.s, "rank": self.rank}


def _columns_to_matrix(cols: list[list[int]], rows: int) -> list[list[int]]:
    return [[c[i] for c in cols] for i in range(rows)]


def restriction_h1(pres: Presentation, action: Action) -> RestrictionData:
    sub = kernel_subgroup(pres, action)
    kp = sub.presentation
    pi_basis = f2_h1_basis(pres)
    k_basis = f2_h1_basis(kp)
    cols = []
    for a in pi_basis:
        res = [word_value(a, w) for w in sub.schreier_words]
        c = f2.coordinates(k_basis, res)
        if c is None:
            raise RuntimeError("restricted class is not a cocycle on the kernel")
        cols.append(c)
    n = len(k_basis)
    theta_cols = []
    conj = [sub.conjugation_by_t((i + 1,)) for i in range(kp.ngens)]
    for b in k_basis:
        img = [word_value(b, w) for w in conj]
        c = f2.coordinates(k_basis, img)
        if c is None:
            raise RuntimeError("conjugate class is not a cocycle on the kernel")
        theta_cols.append(c)
    theta = _columns_to_matrix(theta_cols, n)
    plus = [[(theta[i][j] + (i == j)) % 2 for j in range(n)] for i in range(n)]
    s = f2.rank(plus, n)
    return RestrictionData(pi_basis, k_basis, _columns_to_matrix(cols, n), theta, n - s, s)


def _check_surface(pres: Presentation) -> None:
    if not is_surface_relator(pres):
        raise ValueError("expected a one-relator closed-surface presentation")


def cup_product_surface(pres: Presentation, a, b) -> int:
    """``(a cup b)`` evaluated on the relator 2-cell, over ``F_2``.

    Staircase formula: a positive letter ``g`` at position ``i`` contributes
    ``a(prefix before i) b(g)``; an inverse letter contributes
    ``a(prefix through i) b(g)``.
    """
    _check_surface(pres)
    total = 0
    prefix = 0
    for x in pres.relators[0]:
        g = abs(x) - 1
        if x > 0:
            total += prefix * b[g]
            prefix = (prefix + a[g]) % 2
        else:
            prefix = (prefix + a[g]) % 2
            total += prefix * b[g]
    return total % 2


def cup_square_surface(pres: Presentation, a) -> int:
    return cup_product_surface(pres, a, a)


def orientation_character(pres: Presentation) -> list[int]:
    """``w_1`` of a one-relator surface as generator values over ``F_2``.

    ``w_1`` is the sign character making the relator cell a twisted cycle,
    i.e. every Fox derivative of the relator vanishes in ``Z^w``.  Each
    generator occurs twice, with signs ``e1, e2`` after prefixes ``p1, p2``
    (inclusive for inverse letters), so the condition is the linear equation
    ``w(p1) + w(p2) = [e1 == e2]``.
    """
    _check_surface(pres)
    rel = pres.relators[0]
    n = pres.ngens
    prefixes: dict[int, list[tuple[int, list[int]]]] = {g: [] for g in range(n)}
    acc = [0] * n
    for x in rel:
        g = abs(x) - 1
        if x > 0:
            prefixes[g].append((1, list(acc)))
            acc[g] ^= 1
        else:
            acc[g] ^= 1
            prefixes[g].append((-1, list(acc)))
    rows, rhs = [], []
    for g in range(n):
        (e1, p1), (e2, p2) = prefixes[g]
        rows.append([a ^ b for a, b in zip(p1, p2)])
        rhs.append(int(e1 == e2))
    w = f2.solve(rows, rhs, n)
    if w is None:
        raise ValueError("relator admits no orientation character")
    return w


@dataclass(frozen=True)
class RestrictedSquares:
    """Cup squares of ``Res(A)`` on the reduced kernel surface, one per basis class ``A``."""

    surface: Presentation
    squares: tuple[int, ...]
    witness: tuple[int, ...] | None

    @property
    def any_nonzero(self) -> bool:
        return any(self.squares)


def restricted_squares(pres: Presentation, action: Action) -> RestrictedSquares:
    """``Res(A)^2`` for each basis class; squaring is linear on a surface, so a basis suffices."""
    sub = kernel_subgroup(pres, action)
    red = tietze_reduce(sub.presentation)
    surf = red.presentation
    _check_surface(surf)
    squares = []
    witness = None
    for a in f2_h1_basis(pres):
        res = [word_value(a, w) for w in sub.schreier_words]
        kept = [res[i] for i in red.kept]
        sq = cup_square_surface(surf, kept)
        squares.append(sq)
        if sq and witness is None:
            witness = tuple(a)
    return RestrictedSquares(surf, tuple(squares), witness)
