"""Mayer-Vietoris assembly over tree-shaped graphs of groups.

The cohomology of ``pi = pi_1(G)`` is computed from the mapping cone of the
cochain-level restriction ``(+)_v C(G_v) -> (+)_e C(G_e)``.  The cone has
``D^n = (+)_v C^n(G_v) (+) (+)_e C^{n-1}(G_e)`` and differential
``(x, y) -> (dx, res_s x_s - res_t x_t - dy)``; its cohomology is exactly
``H^n(pi)`` and its long exact sequence is the Mayer-Vietoris sequence.
"""
from __future__ import annotations

from dataclasses import dataclass

from .. import words as W
from ..errors import OutOfScopeError
from ..linalg import AbelianGroup
from ..linalg.intmat import zeros
from ..presentation import Presentation, Role, presentation
from ..signature import OrbifoldSignature
from .fox import evaluate, fox_derivative
from .modules import CoefficientModule
from .resolutions import (
    Resolution,
    block_cohomology,
    cochain_differential,
    complex_cohomology,
    free_product_resolution,
    z_times_z2_resolution,
)


@dataclass
class Vertex:
    name: str
    resolution: Resolution

    @property
    def tag(self):
        return self.resolution.tag

    @property
    def generators(self) -> tuple[int, ...]:
        return self.resolution.generators


@dataclass(frozen=True)
class Edge:
    """Infinite cyclic edge group; ``words[0]``/``words[1]`` give its generator in each endpoint."""

    source: int
    target: int
    words: tuple[W.Word, W.Word]


@dataclass
class GraphOfGroups:
    presentation: Presentation
    vertices: list[Vertex]
    edges: list[Edge]

    def check(self) -> None:
        n = len(self.vertices)
        if len(self.edges) != n - 1:
            raise ValueError("graph of groups must be a tree")
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for e in self.edges:
            a, b = find(e.source), find(e.target)
            if a == b:
                raise ValueError("graph of groups must be a tree")
            parent[a] = b
            for w, v in zip(e.words, (e.source, e.target)):
                if not w:
                    raise ValueError("edge words must be nontrivial")
                allowed = set(self.vertices[v].generators)
                if any(abs(x) - 1 not in allowed for x in w):
                    raise ValueError(f"edge word not in vertex {self.vertices[v].name}")

    def describe(self) -> dict:
        labels = self.presentation.labels
        return {
            "vertices": [{"name": v.name, "tag": str(v.tag), "generators": [labels[g] for g in v.generators]} for v in self.vertices],
            "edges": [
                {
                    "between": [self.vertices[e.source].name, self.vertices[e.target].name],
                    "words": [W.to_str(w, labels) for w in e.words],
                }
                for e in self.edges
            ],
        }


def decompose(sig: OrbifoldSignature, pres: Presentation | None = None) -> GraphOfGroups:
    """Tree decomposition of ``pi^orb(sig)`` into building blocks.

    Without reflectors on ``S^2`` the group splits as ``mu *_Z nu`` with the
    last two cones in ``nu``; without reflectors otherwise ``mu`` holds the
    cones and ``nu`` is free on the surface generators.  With reflectors the
    centre carries cones, surface generators and all but the last boundary
    loop, and each circle contributes a leaf ``<z_j, c_j> = Z x Z/2``.
    """
    pres = pres or presentation(sig)
    if not sig.has_singular_locus:
        raise OutOfScopeError("decomposition needs a nonempty singular locus")
    gens = pres.generators
    surface = [i for i, g in enumerate(gens) if g.role in (Role.HANDLE_A, Role.HANDLE_B, Role.CROSSCAP)]
    cones = [i for i, g in enumerate(gens) if g.role == Role.CONE]
    loops = [i for i, g in enumerate(gens) if g.role == Role.BOUNDARY_LOOP]
    refl = [i for i, g in enumerate(gens) if g.role == Role.REFLECTION]
    glob = pres.relators[-1]
    handle_word = glob[len(cones) + len(loops) :]

    if sig.r == 0:
        if not surface:
            if sig.k < 3:
                raise OutOfScopeError("too few cone points to split")
            mu_c, nu_c = cones[:-2], cones[-2:]
            mu = Vertex("mu", free_product_resolution(mu_c, ()))
            nu = Vertex("nu", free_product_resolution(nu_c, ()))
            edge = Edge(0, 1, (tuple(x + 1 for x in mu_c), W.inverse(tuple(x + 1 for x in nu_c))))
        else:
            mu = Vertex("mu", free_product_resolution(cones, ()))
            nu = Vertex("nu", free_product_resolution((), surface))
            edge = Edge(0, 1, (tuple(x + 1 for x in cones), W.inverse(handle_word)))
        gog = GraphOfGroups(pres, [mu, nu], [edge])
    else:
        centre = Vertex("nu", free_product_resolution(cones, tuple(surface) + tuple(loops[:-1])))
        verts = [centre]
        edges = []
        head = tuple(x + 1 for x in cones) + tuple(z + 1 for z in loops[:-1])
        last = W.free_reduce(W.inverse(head) + W.inverse(handle_word))
        for j, (z, c) in enumerate(zip(loops, refl)):
            verts.append(Vertex(f"gamma{j + 1}", z_times_z2_resolution(z, c)))
            centre_word = (z + 1,) if j < len(loops) - 1 else last
            edges.append(Edge(0, j + 1, (centre_word, (z + 1,))))
        gog = GraphOfGroups(pres, verts, edges)
    gog.check()
    return gog


def _restriction_block(vertex: Vertex, word, module: CoefficientModule, labels, degree: int):
    """Matrix of ``C^degree(G_v) -> C^degree(Z)`` for the edge generator ``word``."""
    d = module.dim
    res = vertex.resolution
    m = zeros(d, res.ranks[degree] * d)
    if degree == 0:
        for a in range(d):
            m[a][a] = 1
        return m
    for g, idx in res.degree_one.items():
        block = evaluate(fox_derivative(word, g), module, labels)
        for a in range(d):
            for b in range(d):
                m[a][idx * d + b] += block[a][b]
    return m


def cone_complex(gog: GraphOfGroups, module: CoefficientModule):
    """Ranks (in ``A``-blocks) and differentials of the mapping cone."""
    labels = gog.presentation.labels
    d = module.dim
    verts, edges = gog.vertices, gog.edges
    top = min(len(v.resolution.ranks) for v in verts) - 1
    vranks = [[v.resolution.ranks[n] for v in verts] for n in range(top + 1)]
    eranks = [1, 1]

    def erank(n):
        return len(edges) * eranks[n] if 0 <= n < 2 else 0

    ranks = [sum(vranks[n]) + erank(n - 1) for n in range(top + 1)]
    diffs = []
    for n in range(top):
        rows, cols = ranks[n + 1] * d, ranks[n] * d
        m = zeros(rows, cols)
        # vertex part: block diagonal delta_V
        r0 = c0 = 0
        voff = []
        for vi, v in enumerate(verts):
            blk = cochain_differential(v.resolution, n, module, labels)
            voff.append(c0)
            for i, row in enumerate(blk):
                for j, x in enumerate(row):
                    m[r0 + i][c0 + j] = x
            r0 += vranks[n + 1][vi] * d
            c0 += vranks[n][vi] * d
        # edge part of the target: res_s x_s - res_t x_t - delta_E y
        if n < 2:
            for ei, e in enumerate(edges):
                row_off = sum(vranks[n + 1]) * d + ei * d
                for sign, vi, w in ((1, e.source, e.words[0]), (-1, e.target, e.words[1])):
                    blk = _restriction_block(verts[vi], w, module, labels, n)
                    for a in range(d):
                        for b, x in enumerate(blk[a]):
                            m[row_off + a][voff[vi] + b] += sign * x
                if n == 1:
                    rho = module.rho(e.words[0], labels)
                    col_off = sum(vranks[n]) * d + ei * d
                    for a in range(d):
                        for b in range(d):
                            m[row_off + a][col_off + b] -= rho[a][b] - int(a == b)
        diffs.append(m)
    diffs.append([])
    return ranks, diffs


def mv_cohomology(gog: GraphOfGroups, module: CoefficientModule, degree: int) -> AbelianGroup:
    """``H^degree(pi_1(G); A)`` from the mapping cone."""
    ranks, diffs = cone_complex(gog, module)
    if degree >= len(ranks) - 1:
        raise ValueError("degree exceeds the truncation of the resolutions")
    return complex_cohomology(ranks, diffs, module, degree)


def mv_terms(gog: GraphOfGroups, module: CoefficientModule, degree: int) -> dict:
    """Vertex and edge terms of the Mayer-Vietoris sequence in one degree."""
    labels = gog.presentation.labels
    vs = [block_cohomology(v.resolution, module.restrict(labels), labels, degree) for v in gog.vertices]
    es = []
    for e in gog.edges:
        rho = module.rho(e.words[0], labels)
        es.append(_edge_cohomology(rho, module, degree))
    return {"vertices": vs, "edges": es}


def _edge_cohomology(rho, module: CoefficientModule, degree: int) -> AbelianGroup:
    d = module.dim
    delta = [[rho[a][b] - int(a == b) for b in range(d)] for a in range(d)]
    return complex_cohomology([1, 1], [delta, []], module, degree) if degree < 2 else AbelianGroup()
