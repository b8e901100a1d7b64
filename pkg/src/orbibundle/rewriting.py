"""Reidemeister-Schreier rewriting for index-2 subgroups and Tietze reduction."""
from __future__ import annotations

from dataclasses import dataclass

from . import words as W
from .presentation import Generator, Presentation, Role


@dataclass(frozen=True)
class IndexTwoSubgroup:
    """Kernel of a map ``G -> Z/2`` given by a 0/1 value per generator.

    The Schreier transversal is ``{1, t}`` with ``t`` the first generator of
    value 1.  ``schreier_words[i]`` is the ``i``-th subgroup generator written
    in the parent generators; ``schreier_index[(coset, g)]`` maps a parent
    generator leaving coset ``coset`` to its subgroup generator (``None`` when
    freely trivial).
    """

    parent: Presentation
    parity: tuple[int, ...]
    t: int
    schreier_words: tuple[W.Word, ...]
    schreier_index: dict
    presentation: Presentation

    def _next(self, coset: int, g: int) -> int:
        return coset ^ self.parity[g]

    def rewrite(self, w, coset: int = 0) -> W.Word:
        """Rewrite a parent word read from ``coset``; must end in coset 0 if started there."""
        out: list[int] = []
        c = coset
        for x in w:
            g = abs(x) - 1
            if x > 0:
                s = self.schreier_index[(c, g)]
                if s is not None:
                    out.append(s + 1)
                c = self._next(c, g)
            else:
                c = self._next(c, g)
                s = self.schreier_index[(c, g)]
                if s is not None:
                    out.append(-(s + 1))
        return W.free_reduce(out)

    def coset_of(self, w) -> int:
        c = 0
        for x in w:
            c ^= self.parity[abs(x) - 1]
        return c

    def conjugation_by_t(self, w) -> W.Word:
        """Subgroup word for ``t w t^-1`` where ``w`` is a subgroup word."""
        parent_word = W.substitute_many(w, self.schreier_words)
        t = self.t + 1
        return self.rewrite((t,) + parent_word + (-t,))


def index_two_subgroup(pres: Presentation, parity) -> IndexTwoSubgroup:
    parity = tuple(int(p) & 1 for p in parity)
    if not any(parity):
        raise ValueError("the map to Z/2 must be onto")
    t = parity.index(1)
    reps = {0: (), 1: (t + 1,)}
    words: list[W.Word] = []
    index: dict = {}
    gens: list[Generator] = []
    for g, gen in enumerate(pres.generators):
        for coset in (0, 1):
            target = coset ^ parity[g]
            w = W.free_reduce(reps[coset] + (g + 1,) + W.inverse(reps[target]))
            if not w:
                index[(coset, g)] = None
                continue
            index[(coset, g)] = len(words)
            words.append(w)
            gens.append(Generator(f"{gen.label}{'' if coset == 0 else '~'}", gen.role, gen.index))
    sub = IndexTwoSubgroup(pres, parity, t, tuple(words), index, Presentation((), ()))
    rels = []
    for r in pres.relators:
        for coset in (0, 1):
            rels.append(sub.rewrite(r, coset))
    rels = [r for r in rels if r]
    object.__setattr__(sub, "presentation", Presentation(tuple(gens), tuple(rels)))
    return sub


@dataclass(frozen=True)
class Simplified:
    """Result of Tietze reduction.

    ``kept[i]`` is the index in the original presentation of the ``i``-th
    generator of ``presentation``; ``eliminated`` maps removed generator
    indices to words in the original generators.
    """

    presentation: Presentation
    kept: tuple[int, ...]
    eliminated: dict


def tietze_reduce(pres: Presentation) -> Simplified:
    """Eliminate generators occurring exactly once in some relator; drop duplicate relators."""
    n = pres.ngens
    alive = set(range(n))
    rels = [W.cyclic_reduce(r) for r in pres.relators]
    eliminated: dict[int, W.Word] = {}
    while True:
        seen = set()
        uniq = []
        for r in rels:
            r = W.cyclic_reduce(r)
            if not r:
                continue
            key = W.cyclic_canonical(r)
            if key in seen:
                continue
            seen.add(key)
            uniq.append(r)
        rels = uniq
        choice = None
        for ri in sorted(range(len(rels)), key=lambda i: (len(rels[i]), i)):
            r = rels[ri]
            for g in sorted({abs(x) - 1 for x in r}):
                if W.occurrences(r, g) == 1:
                    choice = (ri, g)
                    break
            if choice:
                break
        if choice is None:
            break
        ri, g = choice
        r = rels.pop(ri)
        pos = next(i for i, x in enumerate(r) if abs(x) == g + 1)
        rot = r[pos:] + r[:pos]
        rest = rot[1:]
        image = W.inverse(rest) if rot[0] > 0 else tuple(rest)
        image = W.free_reduce(image)
        for h, w in list(eliminated.items()):
            eliminated[h] = W.substitute(w, {g: image})
        eliminated[g] = image
        alive.discard(g)
        rels = [W.substitute(x, {g: image}) for x in rels]
    kept = tuple(sorted(alive))
    remap = {old: new for new, old in enumerate(kept)}

    def reindex(w):
        return tuple((remap[abs(x) - 1] + 1) * (1 if x > 0 else -1) for x in w)

    gens = tuple(pres.generators[i] for i in kept)
    new = Presentation(gens, tuple(reindex(r) for r in rels))
    return Simplified(new, kept, eliminated)


def is_surface_relator(pres: Presentation) -> bool:
    """One relator in which every generator occurs exactly twice."""
    if len(pres.relators) != 1:
        return False
    r = pres.relators[0]
    return all(W.occurrences(r, g) == 2 for g in range(pres.ngens))


__all__ = ["IndexTwoSubgroup", "Simplified", "index_two_subgroup", "is_surface_relator", "tietze_reduce", "Role"]
