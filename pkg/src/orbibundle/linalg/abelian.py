"""Finitely generated abelian groups and exact subquotient computations."""
from __future__ import annotations

from dataclasses import dataclass, field

from .intmat import Matrix, from_columns, hstack, identity, matvec
from .smith import smith_normal_form


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z^free_rank + Z/d_1 + ... + Z/d_m`` with ``d_i | d_{i+1}``, ``d_i >= 2``."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative rank")
        inv = tuple(self.invariant_factors)
        if any(d < 2 for d in inv):
            raise ValueError(f"invariant factors must be >= 2: {inv}")
        if any(inv[i + 1] % inv[i] for i in range(len(inv) - 1)):
            raise ValueError(f"invariant factors must form a divisibility chain: {inv}")
        object.__setattr__(self, "invariant_factors", inv)

    @classmethod
    def from_orders(cls, free_rank: int, orders) -> "AbelianGroup":
        """Canonical form of ``Z^free_rank + sum Z/n`` for arbitrary orders ``n``."""
        orders = [abs(n) for n in orders if abs(n) != 1]
        free_rank += sum(1 for n in orders if n == 0)
        orders = [n for n in orders if n]
        if not orders:
            return cls(free_rank, ())
        diag = [[n if i == j else 0 for j in range(len(orders))] for i, n in enumerate(orders)]
        return cls(free_rank, tuple(d for d in smith_normal_form(diag).diagonal if d > 1))

    @classmethod
    def elementary(cls, p: int, count: int) -> "AbelianGroup":
        return cls(0, (p,) * count)

    @classmethod
    def cokernel(cls, relations: Matrix, gens: int) -> "AbelianGroup":
        """``Z^gens`` modulo the row span of ``relations`` (rows are relators)."""
        if not relations:
            return cls(gens, ())
        cols = [list(r) for r in relations]
        snf = smith_normal_form(from_columns(cols, gens), cols=len(cols))
        diag = snf.diagonal
        return cls(gens - len(diag), tuple(d for d in diag if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.invariant_factors

    def rank_mod(self, p: int) -> int:
        """Dimension of ``G / pG`` over the prime field ``F_p``."""
        return self.free_rank + sum(1 for d in self.invariant_factors if d % p == 0)

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_orders(
            self.free_rank + other.free_rank,
            list(self.invariant_factors) + list(other.invariant_factors),
        )

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        i = 0
        inv = self.invariant_factors
        while i < len(inv):
            j = i
            while j < len(inv) and inv[j] == inv[i]:
                j += 1
            n = j - i
            parts.append(f"(Z/{inv[i]})^{n}" if n > 1 else f"Z/{inv[i]}")
            i = j
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.invariant_factors)}


def direct_sum(groups) -> AbelianGroup:
    out = AbelianGroup()
    for g in groups:
        out = out + g
    return out


@dataclass
class Subquotient:
    """``L / N`` where ``L`` is a lattice in ``Z^ambient`` and ``N`` a sublattice.

    ``basis`` lists the chosen basis of ``L``; ``coords`` expresses vectors of
    ``L`` in that basis.
    """

    ambient: int
    group: AbelianGroup
    basis: list[list[int]] = field(repr=False)
    _U: Matrix = field(repr=False)
    _scale: list[int] = field(repr=False)

    def coords(self, v: list[int]) -> list[int]:
        if not self._U:
            if any(v):
                raise ArithmeticError("vector not in lattice")
            return []
        w = matvec(self._U, v)
        r = len(self._scale)
        out = []
        for i, s in enumerate(self._scale):
            if w[i] % s:
                raise ArithmeticError("vector not in lattice")
            out.append(w[i] // s)
        if any(w[r:]):
            raise ArithmeticError("vector not in lattice")
        return out


def _lattice(gens: list[list[int]], ambient: int):
    """Basis data for the lattice spanned by ``gens`` in ``Z^ambient``."""
    if not gens:
        return [], [], []
    snf = smith_normal_form(from_columns(gens, ambient), cols=len(gens))
    diag = snf.diagonal
    basis = [[snf.Uinv[i][j] * d for i in range(ambient)] for j, d in enumerate(diag)]
    return basis, snf.U, diag


def subquotient(
    ambient: int,
    *,
    constraint: Matrix | None = None,
    constraint_relations: list[list[int]] | None = None,
    image: list[list[int]] | None = None,
    relations: list[list[int]] | None = None,
) -> Subquotient:
    """Compute ``{x : C x in span(R')} / (span(image) + span(R))``.

    ``constraint`` is a ``k x ambient`` matrix ``C``; ``constraint_relations``
    are vectors of length ``k`` spanning ``R'``; ``image`` and ``relations``
    are vectors of length ``ambient``.  Everything is exact over ``Z``.
    """
    image = list(image or [])
    relations = list(relations or [])
    if constraint:
        k = len(constraint)
        crel = list(constraint_relations or [])
        big = hstack([constraint, from_columns(crel, k)], k)
        snf = smith_normal_form(big)
        gens = [v[:ambient] for v in snf.kernel_basis()]
    else:
        gens = [row for row in identity(ambient)]
    if ambient == 0:
        return Subquotient(0, AbelianGroup(), [], [], [])
    basis, U, scale = _lattice(gens, ambient)
    rho = len(scale)
    sq = Subquotient(ambient, AbelianGroup(), basis, U, scale)
    rel_coords = [sq.coords(v) for v in image + relations]
    rel_coords = [c for c in rel_coords if any(c)]
    if rho == 0:
        return sq
    if rel_coords:
        rsnf = smith_normal_form(from_columns(rel_coords, rho), cols=len(rel_coords))
        diag = rsnf.diagonal
    else:
        diag = []
    sq.group = AbelianGroup(rho - len(diag), tuple(d for d in diag if d > 1))
    return sq
