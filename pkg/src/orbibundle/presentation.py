"""Orbifold fundamental group presentations."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import words as W
from .errors import OutOfScopeError
from .linalg import AbelianGroup
from .signature import OrbifoldSignature


class Role(str, Enum):
    HANDLE_A = "handle_a"
    HANDLE_B = "handle_b"
    CROSSCAP = "crosscap"
    CONE = "cone"
    BOUNDARY_LOOP = "boundary_loop"
    REFLECTION = "reflection"


TORSION_ROLES = frozenset({Role.CONE, Role.REFLECTION})


@dataclass(frozen=True)
class Generator:
    label: str
    role: Role
    index: int = 0
    """1-based index within its role family (cone number, circle number, ...)."""


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Generator, ...]
    relators: tuple[W.Word, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(g.label for g in self.generators)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, label: str) -> int:
        for i, g in enumerate(self.generators):
            if g.label == label:
                return i
        raise KeyError(label)

    def torsion_generators(self) -> list[int]:
        return [i for i, g in enumerate(self.generators) if g.role in TORSION_ROLES]

    def relator_matrix(self) -> list[list[int]]:
        """Exponent-sum matrix, one row per relator."""
        return [W.exponent_sums(r, self.ngens) for r in self.relators]

    def abelianization(self) -> AbelianGroup:
        return AbelianGroup.cokernel(self.relator_matrix(), self.ngens)

    def word(self, text: str) -> W.Word:
        """Parse a space-separated word such as ``"x1 z1^-1"``."""
        out = []
        for tok in text.split():
            inv = tok.endswith("^-1")
            i = self.index(tok[:-3] if inv else tok)
            out.append(-(i + 1) if inv else i + 1)
        return tuple(out)

    def format_word(self, w) -> str:
        return W.to_str(w, self.labels)

    def __str__(self) -> str:
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"< {', '.join(self.labels)} | {rels} >"


def presentation(sig: OrbifoldSignature) -> Presentation:
    """Standard presentation of the orbifold fundamental group.

    Generators in order: handles ``a_i, b_i`` (or crosscaps ``v_i``), cones
    ``x_i``, then for each reflector circle its boundary loop ``z_j`` followed
    by its reflection ``c_j``.  Relators: ``x_i^2``; ``c_j^2`` and
    ``c_j z_j c_j^-1 z_j^-1`` per circle; and the single global relator
    ``x_1..x_k z_1..z_r`` times the handle or crosscap product.
    """
    if any(n != 2 for n in sig.cone_orders):
        raise OutOfScopeError(f"{sig}: cone points of order other than 2")
    if any(c for c in sig.reflector_circles):
        raise OutOfScopeError(f"{sig}: reflector circles with corner points")

    gens: list[Generator] = []
    if sig.orientable:
        for i in range(1, sig.genus + 1):
            gens.append(Generator(f"a{i}", Role.HANDLE_A, i))
            gens.append(Generator(f"b{i}", Role.HANDLE_B, i))
    else:
        for i in range(1, sig.genus + 1):
            gens.append(Generator(f"v{i}", Role.CROSSCAP, i))
    surface_gens = list(range(len(gens)))
    cones = []
    for i in range(1, sig.k + 1):
        cones.append(len(gens))
        gens.append(Generator(f"x{i}", Role.CONE, i))
    loops, refl = [], []
    for j in range(1, sig.r + 1):
        loops.append(len(gens))
        gens.append(Generator(f"z{j}", Role.BOUNDARY_LOOP, j))
        refl.append(len(gens))
        gens.append(Generator(f"c{j}", Role.REFLECTION, j))

    rels: list[W.Word] = []
    for x in cones:
        rels.append((x + 1, x + 1))
    for z, c in zip(loops, refl):
        rels.append((c + 1, c + 1))
        rels.append((c + 1, z + 1, -(c + 1), -(z + 1)))
    glob: list[int] = [x + 1 for x in cones] + [z + 1 for z in loops]
    if sig.orientable:
        for i in range(sig.genus):
            a, b = surface_gens[2 * i] + 1, surface_gens[2 * i + 1] + 1
            glob += [a, b, -a, -b]
    else:
        for v in surface_gens:
            glob += [v + 1, v + 1]
    rels.append(tuple(glob))
    return Presentation(tuple(gens), tuple(rels))
