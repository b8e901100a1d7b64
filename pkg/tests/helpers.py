"""Shared corpora and independent oracles for the test suite."""
from __future__ import annotations

import itertools
import json
from functools import lru_cache
from pathlib import Path

from orbibundle.actions import enumerate_actions
from orbibundle.presentation import Generator, Presentation, Role
from orbibundle.signature import OrbifoldSignature, euler_characteristic

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str):
    return json.loads((FIXTURES / name).read_text())


def make_presentation(labels, relators) -> Presentation:
    """Presentation from generator labels and space-separated relator strings."""
    gens = tuple(Generator(l, Role.HANDLE_A, i + 1) for i, l in enumerate(labels))
    p = Presentation(gens, ())
    return Presentation(gens, tuple(p.word(r) for r in relators))


def signatures(max_genus=2, max_r=3, max_k=6):
    """All in-scope signatures in the given box, both orientabilities."""
    for orientable in (True, False):
        for g in range(0 if orientable else 1, max_genus + 1):
            for r in range(max_r + 1):
                for k in range(max_k + 1):
                    yield OrbifoldSignature(orientable, g, (2,) * k, ((),) * r)


@lru_cache(maxsize=None)
def aspherical_corpus(max_genus=2, max_r=3, max_k=6, singular_only=True):
    """``(sig, action)`` pairs with ``chi <= 0`` in the box."""
    from orbibundle.presentation import presentation

    out = []
    for sig in signatures(max_genus, max_r, max_k):
        if euler_characteristic(sig) > 0:
            continue
        if singular_only and not sig.has_singular_locus:
            continue
        pres = presentation(sig)
        for a in enumerate_actions(pres):
            out.append((sig, a))
    return tuple(out)


# ---------------------------------------------------------------------------
# Z/4-lift oracle for the mod-2 Bockstein


def lifts_to_z4(pres: Presentation, values) -> bool:
    """Whether a homomorphism to Z/2 lifts to Z/4, by brute force over lifts.

    For a class ``a`` in H^1(G;F_2) the Bockstein of ``0 -> Z/2 -> Z/4 -> Z/2 -> 0``
    vanishes iff ``a`` lifts; on a surface this Bockstein is ``a^2``.
    """
    base = [v % 2 for v in values]
    n = len(base)
    sums = [[0] * n for _ in pres.relators]
    for i, r in enumerate(pres.relators):
        for x in r:
            sums[i][abs(x) - 1] += 1 if x > 0 else -1
    for bump in itertools.product((0, 2), repeat=n):
        lift = [b + e for b, e in zip(base, bump)]
        if all(sum(c * l for c, l in zip(row, lift)) % 4 == 0 for row in sums):
            return True
    return False


def cocycle_basis_f2(pres: Presentation):
    """All homomorphisms to F_2 by brute force, independent of the library solver."""
    n = pres.ngens
    out = []
    for v in itertools.product((0, 1), repeat=n):
        if all(sum(v[abs(x) - 1] for x in r) % 2 == 0 for r in pres.relators):
            out.append(list(v))
    return out
