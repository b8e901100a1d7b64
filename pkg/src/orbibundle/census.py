"""Enumeration of bases and homotopy-type censuses."""
from __future__ import annotations

from dataclasses import dataclass, field

from .actions import dedup_actions, enumerate_actions, parity_check
from .classification import classify, gluck_twist_geometric, homotopy_type_count
from .errors import InconsistencyError
from .presentation import presentation
from .signature import GeometryClass, OrbifoldSignature, format_signature, geometry_class, parse_signature
from .validation import validate_bundle_base

FLAT_TABLE_ROWS = (
    ("S2-bundles over T or Kb", "s2_bundles", 10),
    ("RP2-bundles", "rp2_bundles", 4),
)
FLAT_SINGULAR_BASES = {
    "S2()[*,*]": "reflector_bases",
    "RP2()[*]": "reflector_bases",
    "S2(2,2,2,2)[]": "finite_abelianization",
    "RP2(2,2)[]": "finite_abelianization",
    "S2(2,2)[*]": "finite_abelianization",
}
EXPECTED_FLAT_TOTALS = {"s2_bundles": 10, "rp2_bundles": 4, "reflector_bases": 4, "finite_abelianization": 5}
FLAGGED_BASES = {"T(2,2)[]", "Kb(2,2)[]"}


@dataclass
class CensusEntry:
    base: str
    action_class: str | None
    homotopy_type_count: int
    geometric_count: int
    category: str
    parity: bool | None = None
    members: int = 1
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "action_class": self.action_class,
            "homotopy_type_count": self.homotopy_type_count,
            "geometric_count": self.geometric_count,
            "category": self.category,
            "parity": self.parity,
            "members": self.members,
            "notes": list(self.notes),
        }


@dataclass
class CensusReport:
    entries: list[CensusEntry]
    totals: dict[str, int]
    grand_total: int
    citations: list[str] = field(default_factory=list)

    @property
    def geometric_totals(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for e in self.entries:
            out[e.category] = out.get(e.category, 0) + e.geometric_count
        return out

    def to_dict(self) -> dict:
        return {
            "entries": [e.to_dict() for e in self.entries],
            "totals": dict(self.totals),
            "geometric_totals": self.geometric_totals,
            "grand_total": self.grand_total,
            "citations": list(self.citations),
        }


def _entries_for_base(sig: OrbifoldSignature, category: str) -> list[CensusEntry]:
    pres = presentation(sig)
    out = []
    for cls in dedup_actions(sig, enumerate_actions(pres), pres):
        rep = classify(sig, cls.representative, pres)
        count = rep.homotopy_type_count
        geometric = 1 + (1 if count == 2 and gluck_twist_geometric(sig) else 0)
        e = CensusEntry(
            format_signature(sig),
            cls.representative.literal(),
            count,
            geometric,
            category,
            all(parity_check(sig, m) for m in cls.members),
            len(cls.members),
        )
        if cls.identified_by == "table":
            e.notes.append("actions identified up to automorphism of the group")
        out.append(e)
    return out


def flat_census() -> CensusReport:
    """The 23 homotopy types over flat bases."""
    entries = [CensusEntry(tag, None, n, n, key) for tag, key, n in FLAT_TABLE_ROWS]
    for text, category in FLAT_SINGULAR_BASES.items():
        entries.extend(_entries_for_base(parse_signature(text), category))
    totals = {k: 0 for k in EXPECTED_FLAT_TOTALS}
    for e in entries:
        totals[e.category] += e.homotopy_type_count
    grand = sum(totals.values())
    if totals != EXPECTED_FLAT_TOTALS:
        raise InconsistencyError(f"flat census totals {totals} differ from {EXPECTED_FLAT_TOTALS}")
    return CensusReport(entries, totals, grand, ["Section 9", "Theorem 12(3)", "Theorem 13"])


def _surfaces(max_complexity: int):
    for g in range(0, max_complexity + 1):
        yield True, g
    for g in range(1, max_complexity + 1):
        yield False, g


def enumerate_bases(geometry: GeometryClass, max_complexity: int) -> list[OrbifoldSignature]:
    """In-scope signatures of one geometry with complexity ``k + r + genus (+1 if non-orientable)`` bounded.

    Each returned base passes ``validate_bundle_base``.  Sorted by
    complexity, then canonical text.
    """
    out = []
    for orientable, g in _surfaces(max_complexity):
        base = g + (0 if orientable else 1)
        if base > max_complexity:
            continue
        for r in range(0, max_complexity - base + 1):
            for k in range(0, max_complexity - base - r + 1):
                sig = OrbifoldSignature(orientable, g, (2,) * k, ((),) * r)
                if geometry_class(sig) is not geometry:
                    continue
                if not validate_bundle_base(sig).accepted:
                    continue
                out.append(sig)
    out.sort(key=lambda s: (s.complexity, format_signature(s)))
    return out


def hyperbolic_census(max_complexity: int) -> CensusReport:
    """Per-class counts over hyperbolic bases with a singular locus; no published totals exist."""
    if max_complexity < 1:
        raise ValueError("bound must be at least 1")
    entries = []
    for sig in enumerate_bases(GeometryClass.HYPERBOLIC, max_complexity):
        if not sig.has_singular_locus:
            continue
        batch = _entries_for_base(sig, "r>0" if sig.r else "r=0")
        if format_signature(sig) in FLAGGED_BASES:
            for e in batch:
                e.notes.append("base listed as an exception in the discussion of geometric decompositions")
        entries.extend(batch)
    totals: dict[str, int] = {}
    for e in entries:
        totals[e.category] = totals.get(e.category, 0) + e.homotopy_type_count
        if e.homotopy_type_count != homotopy_type_count(parse_signature(e.base)):
            raise InconsistencyError(f"count mismatch for {e.base}")
    return CensusReport(entries, totals, sum(totals.values()), ["Theorem 12(3)", "Theorem 13"])

