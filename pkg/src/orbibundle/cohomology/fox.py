"""Fox calculus and low-degree cohomology of finitely presented groups."""
from __future__ import annotations

from ..linalg import AbelianGroup, subquotient
from ..linalg.intmat import identity, zeros
from ..presentation import Presentation
from .modules import CoefficientModule

# A group-ring element is a list of (coefficient, word) pairs.
GroupRingElement = list


def fox_derivative(w, g: int) -> GroupRingElement:
    """Left Fox derivative of ``w`` with respect to generator index ``g``.

    Uses ``d(uv) = du + u dv``, so ``d(g^-1) = -g^-1``.
    """
    out = []
    for i, x in enumerate(w):
        if x == g + 1:
            out.append((1, tuple(w[:i])))
        elif x == -(g + 1):
            out.append((-1, tuple(w[: i + 1])))
    return out


def evaluate(elem: GroupRingElement, module: CoefficientModule, labels) -> list[list[int]]:
    """Image of a group-ring element as an integer matrix on the module."""
    d = module.dim
    m = zeros(d, d)
    for c, w in elem:
        r = module.rho(w, labels)
        for i in range(d):
            for j in range(d):
                m[i][j] += c * r[i][j]
    return m


def fox_matrix(pres: Presentation, module: CoefficientModule) -> list[list[int]]:
    """Block matrix ``(rho(dR_i/dg_j))``, rows indexed by relators then module coordinates."""
    d = module.dim
    n = pres.ngens
    out = []
    for rel in pres.relators:
        blocks = [evaluate(fox_derivative(rel, g), module, pres.labels) for g in range(n)]
        for i in range(d):
            out.append([blocks[g][i][j] for g in range(n) for j in range(d)])
    return out


def _repeat(vectors: list[list[int]], copies: int, d: int) -> list[list[int]]:
    out = []
    for c in range(copies):
        for v in vectors:
            w = [0] * (copies * d)
            w[c * d : (c + 1) * d] = v
            out.append(w)
    return out


def coboundary_generators(pres: Presentation, module: CoefficientModule) -> list[list[int]]:
    """Principal crossed homomorphisms ``g -> g.a - a`` for a basis of ``a``."""
    d = module.dim
    mats = [module.matrix(l) for l in pres.labels]
    out = []
    for j in range(d):
        v = []
        for m in mats:
            v.extend(m[i][j] - int(i == j) for i in range(d))
        out.append(v)
    return out


def h0(pres: Presentation, module: CoefficientModule) -> AbelianGroup:
    """Fixed points of the module."""
    d = module.dim
    rows = []
    for l in pres.labels:
        m = module.matrix(l)
        rows.extend([m[i][j] - int(i == j) for j in range(d)] for i in range(d))
    rel = module.relation_vectors()
    return subquotient(
        d,
        constraint=rows,
        constraint_relations=_repeat(rel, pres.ngens, d),
        relations=rel,
    ).group


def h1(pres: Presentation, module: CoefficientModule) -> AbelianGroup:
    """Crossed homomorphisms modulo principal ones."""
    return h1_subquotient(pres, module).group


def h1_subquotient(pres: Presentation, module: CoefficientModule):
    """``Z^1/B^1`` with coordinates; cochains are generator-value tuples."""
    d = module.dim
    n = pres.ngens
    rel = module.relation_vectors()
    return subquotient(
        n * d,
        constraint=fox_matrix(pres, module),
        constraint_relations=_repeat(rel, len(pres.relators), d),
        image=coboundary_generators(pres, module),
        relations=_repeat(rel, n, d),
    )


def is_module_for(pres: Presentation, module: CoefficientModule) -> bool:
    """Check that every relator acts trivially."""
    ident = identity(module.dim)
    return all(module.rho(r, pres.labels) == ident for r in pres.relators)
