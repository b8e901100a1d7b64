"""Actions of orbifold groups on Z with torsion-free kernel.

An action is an epimorphism ``u: pi -> {+1, -1}`` sending every cone and
reflection generator to ``-1``; its kernel is the fundamental group of the
nonsingular double cover.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ActionSyntaxError, InconsistencyError, InvalidActionError
from .linalg import AbelianGroup, f2
from .presentation import Presentation, Role, presentation
from .rewriting import IndexTwoSubgroup, index_two_subgroup
from .signature import OrbifoldSignature, euler_characteristic, format_signature


@dataclass(frozen=True, order=True)
class Action:
    labels: tuple[str, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.values) or any(v not in (1, -1) for v in self.values):
            raise InvalidActionError("action values must be +1 or -1, one per generator")

    @classmethod
    def from_parity(cls, pres: Presentation, parity) -> "Action":
        return cls(pres.labels, tuple(-1 if p else 1 for p in parity))

    @property
    def parity(self) -> tuple[int, ...]:
        """0/1 vector: 1 where the value is -1."""
        return tuple(1 if v == -1 else 0 for v in self.values)

    def value(self, label: str) -> int:
        return self.values[self.labels.index(label)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.labels, self.values))

    def literal(self) -> str:
        return ",".join(f"{l}={'+1' if v == 1 else '-1'}" for l, v in zip(self.labels, self.values))

    def __str__(self) -> str:
        return self.literal()


def is_valid_action(pres: Presentation, action: Action) -> bool:
    if action.labels != pres.labels:
        return False
    p = action.parity
    if not any(p):
        return False
    if any(p[i] == 0 for i in pres.torsion_generators()):
        return False
    return all(sum(a & b for a, b in zip(row, p)) % 2 == 0 for row in _mod2_rows(pres))


def _mod2_rows(pres: Presentation) -> list[list[int]]:
    return [[x & 1 for x in row] for row in pres.relator_matrix()]


def _affine_solutions(pres: Presentation) -> list[tuple[int, ...]]:
    """All 0/1 assignments killing every relator mod 2 with value 1 on torsion generators."""
    n = pres.ngens
    rows = _mod2_rows(pres)
    rhs = [0] * len(rows)
    for i in pres.torsion_generators():
        e = [0] * n
        e[i] = 1
        rows.append(e)
        rhs.append(1)
    part = f2.solve(rows, rhs, n)
    if part is None:
        return []
    null = f2.nullspace(rows, n)
    sols = set()
    for coeffs in itertools.product((0, 1), repeat=len(null)):
        v = list(part)
        for c, b in zip(coeffs, null):
            if c:
                v = [x ^ y for x, y in zip(v, b)]
        sols.add(tuple(v))
    return sorted(sols)


def torsion_compatible_maps(pres: Presentation) -> list[Action | None]:
    """Homomorphisms to ``{+1,-1}`` that are ``-1`` on torsion generators, onto or not.

    The trivial map is reported as ``None`` (it is not an ``Action``).
    """
    out: list[Action | None] = []
    for v in _affine_solutions(pres):
        out.append(Action.from_parity(pres, v) if any(v) else None)
    return out


def enumerate_actions(pres: Presentation) -> list[Action]:
    """All epimorphisms onto ``{+1,-1}`` with ``-1`` on every cone and reflection.

    Found by solving the relator constraints over F_2 and listing the affine
    solution space.  Deterministic (sorted) order.
    """
    return [Action.from_parity(pres, v) for v in _affine_solutions(pres) if any(v)]


class CurveTag(str, enum.Enum):
    TWISTED = "twisted"
    UNTWISTED = "untwisted"


def classify_reflector_curves(sig: OrbifoldSignature, action: Action) -> tuple[CurveTag, ...]:
    """A reflector circle is twisted exactly when its boundary loop acts by -1."""
    return tuple(
        CurveTag.TWISTED if action.value(f"z{j}") == -1 else CurveTag.UNTWISTED for j in range(1, sig.r + 1)
    )


def parity_check(sig: OrbifoldSignature, action: Action) -> bool:
    twisted = sum(1 for t in classify_reflector_curves(sig, action) if t is CurveTag.TWISTED)
    return (sig.k + twisted) % 2 == 0


@dataclass(frozen=True, order=True)
class SurfaceDescriptor:
    orientable: bool
    genus: int
    euler_characteristic: int

    def __post_init__(self):
        expected = 2 - 2 * self.genus if self.orientable else 2 - self.genus
        if expected != self.euler_characteristic:
            raise ValueError(f"inconsistent surface data {self}")
        if not self.orientable and self.genus < 1:
            raise ValueError("non-orientable surface needs a crosscap")

    @classmethod
    def from_euler(cls, orientable: bool, chi: int) -> "SurfaceDescriptor":
        genus = (2 - chi) // 2 if orientable else 2 - chi
        return cls(orientable, genus, chi)

    @property
    def name(self) -> str:
        if self.orientable:
            return {0: "S2", 1: "T"}.get(self.genus, f"O{self.genus}")
        return {1: "RP2", 2: "Kb"}.get(self.genus, f"N{self.genus}")

    def homology(self) -> AbelianGroup:
        if self.orientable:
            return AbelianGroup(2 * self.genus)
        return AbelianGroup(self.genus - 1, (2,))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "orientable": self.orientable,
            "genus": self.genus,
            "euler_characteristic": self.euler_characteristic,
        }

    def __str__(self) -> str:
        return self.name


def kernel_subgroup(pres: Presentation, action: Action) -> IndexTwoSubgroup:
    if not is_valid_action(pres, action):
        raise InvalidActionError(f"{action} is not an action with torsion-free kernel on {pres}")
    return index_two_subgroup(pres, action.parity)


def kernel_double_cover(pres: Presentation, action: Action, chi_orb: Fraction | None = None) -> SurfaceDescriptor:
    """Surface whose fundamental group is the kernel of ``action``.

    The kernel presentation comes from Reidemeister-Schreier rewriting; the
    surface is read off from ``chi = 2 * chi_orb`` and the abelianization.
    ``chi_orb`` defaults to the value recovered from the generator roles.
    """
    sub = kernel_subgroup(pres, action)
    if chi_orb is None:
        chi_orb = euler_characteristic(signature_of(pres))
    chi2 = 2 * chi_orb
    if chi2.denominator != 1:
        raise InconsistencyError(f"double cover Euler characteristic {chi2} is not an integer")
    chi = int(chi2)
    h1 = sub.presentation.abelianization()
    if h1.invariant_factors == () and h1.free_rank == 2 - chi:
        return SurfaceDescriptor.from_euler(True, chi)
    if h1.invariant_factors == (2,) and h1.free_rank == 1 - chi and chi <= 1:
        return SurfaceDescriptor.from_euler(False, chi)
    raise InconsistencyError(f"kernel abelianization {h1} does not match a closed surface of Euler characteristic {chi}")


def signature_of(pres: Presentation) -> OrbifoldSignature:
    """Recover the signature from the roles of a standard presentation."""
    roles = [g.role for g in pres.generators]
    handles = roles.count(Role.HANDLE_A)
    crosscaps = roles.count(Role.CROSSCAP)
    k = roles.count(Role.CONE)
    r = roles.count(Role.REFLECTION)
    if crosscaps:
        return OrbifoldSignature(False, crosscaps, (2,) * k, ((),) * r)
    return OrbifoldSignature(True, handles, (2,) * k, ((),) * r)


# ---------------------------------------------------------------------------
# equivalence classes

@dataclass(frozen=True, order=True)
class Fingerprint:
    kernel: SurfaceDescriptor
    curve_tags: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"kernel": self.kernel.to_dict(), "curve_tags": list(self.curve_tags)}


@dataclass
class ActionClass:
    representative: Action
    members: list[Action]
    fingerprint: Fingerprint
    identified_by: str = "symmetries"
    """``symmetries`` or ``table`` (classes merged by the published identification table)."""
    note: str = "distinct up to implemented symmetries"

    def to_dict(self) -> dict:
        return {
            "representative": self.representative.literal(),
            "members": [a.literal() for a in self.members],
            "fingerprint": self.fingerprint.to_dict(),
            "identified_by": self.identified_by,
            "note": self.note,
        }


# Flat groups with finite abelianization: the action is unique up to automorphism.
IDENTIFICATION_TABLE = frozenset({"S2(2,2,2,2)[]", "RP2(2,2)[]", "S2(2,2)[*]"})


def fingerprint(sig: OrbifoldSignature, pres: Presentation, action: Action) -> Fingerprint:
    tags = tuple(sorted(t.value for t in classify_reflector_curves(sig, action)))
    return Fingerprint(kernel_double_cover(pres, action, euler_characteristic(sig)), tags)


def _symmetry_moves(sig: OrbifoldSignature, pres: Presentation):
    """Maps on value dictionaries induced by homeomorphisms of the orbifold."""
    moves = []
    for j in range(1, sig.r):
        a, b = f"z{j}", f"z{j + 1}"

        def swap(d, a=a, b=b):
            d = dict(d)
            d[a], d[b] = d[b], d[a]
            return d

        moves.append(swap)
    if sig.orientable and sig.genus:
        basis = [f"a{i}" for i in range(1, sig.genus + 1)] + [f"b{i}" for i in range(1, sig.genus + 1)]
        g = sig.genus

        def omega(x, y):
            s = 0
            for i in range(g):
                s += x[i] * y[g + i] + x[g + i] * y[i]
            return s % 2

        units = [[1 if t == i else 0 for t in range(2 * g)] for i in range(2 * g)]
        vecs = list(units)
        for i in range(2 * g):
            for j in range(i + 1, 2 * g):
                vecs.append([1 if t in (i, j) else 0 for t in range(2 * g)])
        for v in vecs:

            def tv(d, v=v):
                vals = [1 if d[l] == -1 else 0 for l in basis]
                av = sum(x * y for x, y in zip(vals, v)) % 2
                out = dict(d)
                for idx, l in enumerate(basis):
                    new = (vals[idx] + omega(units[idx], v) * av) % 2
                    out[l] = -1 if new else 1
                return out

            moves.append(tv)
    if not sig.orientable:
        g = sig.genus
        labels = [f"v{i}" for i in range(1, g + 1)]
        for i in range(g - 1):

            def sw(d, a=labels[i], b=labels[i + 1]):
                d = dict(d)
                d[a], d[b] = d[b], d[a]
                return d

            moves.append(sw)
        if g >= 4:
            v = [1, 1, 1, 1] + [0] * (g - 4)

            def tw(d, v=v):
                vals = [1 if d[l] == -1 else 0 for l in labels]
                av = sum(x * y for x, y in zip(vals, v)) % 2
                out = dict(d)
                for idx, l in enumerate(labels):
                    new = (vals[idx] + v[idx] * av) % 2
                    out[l] = -1 if new else 1
                return out

            moves.append(tw)
    return moves


def dedup_actions(sig: OrbifoldSignature, actions: list[Action], pres: Presentation | None = None) -> list[ActionClass]:
    """Group actions into classes under the implemented orbifold symmetries.

    Classes are additionally merged for the bases listed in
    ``IDENTIFICATION_TABLE``.  Members of a class always share a fingerprint.
    """
    pres = pres or presentation(sig)
    moves = _symmetry_moves(sig, pres)
    remaining = {a.values: a for a in actions}
    classes: list[ActionClass] = []
    for a in sorted(actions):
        if a.values not in remaining:
            continue
        orbit = {a.values}
        frontier = [a.as_dict()]
        while frontier:
            d = frontier.pop()
            for mv in moves:
                e = mv(d)
                key = tuple(e[l] for l in pres.labels)
                if key not in orbit:
                    orbit.add(key)
                    frontier.append(e)
        members = [remaining.pop(v) for v in sorted(orbit) if v in remaining]
        classes.append(ActionClass(members[0], members, fingerprint(sig, pres, members[0])))
    if format_signature(sig) in IDENTIFICATION_TABLE and len(classes) > 1:
        fps = {c.fingerprint for c in classes}
        if len(fps) != 1:
            raise InconsistencyError(f"identification table merges different fingerprints for {sig}")
        members = sorted(m for c in classes for m in c.members)
        classes = [
            ActionClass(members[0], members, classes[0].fingerprint, "table", "unique up to automorphism of the group")
        ]
    elif format_signature(sig) in IDENTIFICATION_TABLE:
        for c in classes:
            c.note = "unique up to automorphism of the group"
    for c in classes:
        for m in c.members[1:]:
            if fingerprint(sig, pres, m) != c.fingerprint:
                raise InconsistencyError(f"symmetry merged actions with different fingerprints on {sig}")
    return classes


def parse_action_literal(text: str, pres: Presentation) -> Action:
    """Parse ``label=+1|-1`` pairs; torsion generators default to ``-1``.

    ``z=...`` sets every boundary loop at once when no generator is named ``z``.

    Other omitted generators are filled in when the relators force their
    value; otherwise the literal is rejected as ambiguous.
    """
    given: dict[str, int] = {}
    text = text.strip()
    if text:
        for part in text.split(","):
            if "=" not in part:
                raise ActionSyntaxError(f"expected label=+1 or label=-1, got {part!r}")
            label, val = (s.strip() for s in part.split("=", 1))
            loops = [g.label for g in pres.generators if g.role is Role.BOUNDARY_LOOP]
            if label == "z" and "z" not in pres.labels and loops:
                # shorthand: one value for every boundary loop
                if val not in ("+1", "-1", "1"):
                    raise ActionSyntaxError(f"value for z must be +1 or -1, got {val!r}")
                for l in loops:
                    given[l] = -1 if val == "-1" else 1
                continue
            if label not in pres.labels:
                raise ActionSyntaxError(f"unknown generator {label!r}; generators are {', '.join(pres.labels)}")
            if val not in ("+1", "-1", "1"):
                raise ActionSyntaxError(f"value for {label} must be +1 or -1, got {val!r}")
            given[label] = -1 if val == "-1" else 1
    for i in pres.torsion_generators():
        given.setdefault(pres.labels[i], -1)
    candidates = [
        a for a in enumerate_actions(pres) if all(a.value(l) == v for l, v in given.items())
    ]
    if not candidates:
        raise InvalidActionError(f"no action with torsion-free kernel matches {text!r}")
    if len(candidates) > 1:
        free = sorted({l for a in candidates for l in pres.labels if a.value(l) != candidates[0].value(l)})
        raise ActionSyntaxError(f"action literal {text!r} leaves {', '.join(free)} undetermined")
    return candidates[0]
