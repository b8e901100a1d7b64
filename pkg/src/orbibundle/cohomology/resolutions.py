"""Explicit free resolutions of the building-block groups and their cochain complexes.

Group-ring entries are written as ``(coefficient, word)`` lists with words in
the generators of an ambient presentation, so the same resolution serves a
block both as an abstract group and as a vertex group of a decomposition.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..linalg import AbelianGroup, subquotient
from ..linalg.intmat import zeros
from .fox import evaluate
from .modules import CoefficientModule

TOP_DEGREE = 4


@dataclass(frozen=True)
class BlockTag:
    """Isomorphism type of a building block.

    ``FreeProductOfZ2`` with ``involutions=k, free_rank=0``; ``Free`` with
    ``free_rank=n``; ``SurfaceWithBoundary`` for a mixed free product of
    ``k`` copies of ``Z/2`` and a free group; ``ZxZ2`` and ``Z`` carry no
    parameters.
    """

    kind: str
    involutions: int = 0
    free_rank: int = 0

    def __str__(self) -> str:
        if self.kind == "FreeProductOfZ2":
            return f"FreeProductOfZ2({self.involutions})"
        if self.kind == "Free":
            return f"Free({self.free_rank})"
        if self.kind == "SurfaceWithBoundary":
            return f"SurfaceWithBoundary({self.involutions},{self.free_rank})"
        return self.kind


def free_product_tag(involutions: int, free_rank: int) -> BlockTag:
    if free_rank == 0:
        return BlockTag("FreeProductOfZ2", involutions, 0)
    if involutions == 0:
        return BlockTag("Free", 0, free_rank)
    return BlockTag("SurfaceWithBoundary", involutions, free_rank)


@dataclass
class Resolution:
    """A free resolution truncated at ``TOP_DEGREE``.

    ``ranks[n]`` is the rank of ``P_n``; ``diff[n]`` (``n >= 1``) maps basis
    index ``i`` of ``P_n`` to ``{j: group-ring element}`` meaning
    ``d e_i = sum_j lambda_ij e_j``.  ``degree_one[g]`` is the basis index in
    ``P_1`` with ``d e = g - 1``.
    """

    tag: BlockTag
    generators: tuple[int, ...]
    ranks: list[int]
    diff: dict = field(default_factory=dict)
    degree_one: dict = field(default_factory=dict)


def _g(i: int, sign: int = 1):
    return ((sign, (i + 1,)),)


def _minus_one(g: int):
    return [(1, (g + 1,)), (-1, ())]


def _plus_one(g: int):
    return [(1, (g + 1,)), (1, ())]


def free_product_resolution(involutions, free, top: int = TOP_DEGREE) -> Resolution:
    """Resolution of ``(*Z/2) * F`` glued from periodic resolutions at ``P_0``."""
    involutions, free = tuple(involutions), tuple(free)
    gens = involutions + free
    res = Resolution(free_product_tag(len(involutions), len(free)), gens, [1, len(gens)])
    res.diff[1] = {i: {0: _minus_one(g)} for i, g in enumerate(gens)}
    res.degree_one = {g: i for i, g in enumerate(gens)}
    for n in range(2, top + 1):
        res.ranks.append(len(involutions))
        step = _plus_one if n % 2 == 0 else _minus_one
        res.diff[n] = {i: {i: step(x)} for i, x in enumerate(involutions)}
    return res


def z_times_z2_resolution(z: int, c: int, top: int = TOP_DEGREE) -> Resolution:
    """Tensor product of the resolutions of ``<z> = Z`` and ``<c> = Z/2``.

    Basis of ``P_n``: ``A_n = 1 x e_n`` (index 0) and ``B_n = e_z x e_{n-1}``
    (index 1, ``n >= 1``).
    """
    res = Resolution(BlockTag("ZxZ2"), (z, c), [1])

    def lam(n):
        return _minus_one(c) if n % 2 == 1 else _plus_one(c)

    for n in range(1, top + 1):
        res.ranks.append(2)
        d = {0: {0: lam(n)}}
        if n == 1:
            d[1] = {0: _minus_one(z)}
        else:
            d[1] = {0: _minus_one(z), 1: [(-a, w) for a, w in lam(n - 1)]}
        res.diff[n] = d
    res.degree_one = {c: 0, z: 1}
    return res


def cochain_differential(res: Resolution, n: int, module: CoefficientModule, labels) -> list[list[int]]:
    """Matrix of ``delta: C^n -> C^{n+1}`` with ``C^n = Hom(P_n, A) = A^{rank P_n}``."""
    d = module.dim
    rows_n1 = res.ranks[n + 1] if n + 1 < len(res.ranks) else 0
    m = zeros(rows_n1 * d, res.ranks[n] * d)
    for i, row in res.diff.get(n + 1, {}).items():
        for j, elem in row.items():
            block = evaluate(elem, module, labels)
            for a in range(d):
                for b in range(d):
                    m[i * d + a][j * d + b] += block[a][b]
    return m


def torsion_relations(module: CoefficientModule, copies: int) -> list[list[int]]:
    d = module.dim
    out = []
    for c in range(copies):
        for v in module.relation_vectors():
            w = [0] * (copies * d)
            w[c * d : (c + 1) * d] = v
            out.append(w)
    return out


def complex_cohomology(ranks, diffs, module: CoefficientModule, n: int) -> AbelianGroup:
    """``H^n`` of a cochain complex of free ``A``-blocks.

    ``ranks[n]`` counts ``A``-blocks in degree ``n``; ``diffs[n]`` is the
    integer matrix of ``C^n -> C^{n+1}``.
    """
    d = module.dim
    amb = ranks[n] * d
    if amb == 0:
        return AbelianGroup()
    nxt = ranks[n + 1] if n + 1 < len(ranks) else 0
    image = []
    if n > 0:
        prev = diffs[n - 1]
        image = [[prev[i][j] for i in range(amb)] for j in range(ranks[n - 1] * d)]
    return subquotient(
        amb,
        constraint=diffs[n] if nxt else None,
        constraint_relations=torsion_relations(module, nxt),
        image=image,
        relations=torsion_relations(module, ranks[n]),
    ).group


def block_cohomology(res: Resolution, module: CoefficientModule, labels, degree: int) -> AbelianGroup:
    """Cohomology of a block group computed from its resolution."""
    if degree >= len(res.ranks) - 1:
        raise ValueError(f"resolution only supports degrees below {len(res.ranks) - 1}")
    diffs = [cochain_differential(res, n, module, labels) for n in range(len(res.ranks))]
    return complex_cohomology(res.ranks, diffs, module, degree)
