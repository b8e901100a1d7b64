"""Admissibility of a 2-orbifold as the base of an S^2-orbifold bundle."""
from __future__ import annotations

from dataclasses import dataclass, field

from .actions import enumerate_actions, torsion_compatible_maps
from .presentation import presentation
from .signature import S2_ONE_CONE, OrbifoldSignature, euler_characteristic


@dataclass(frozen=True)
class Violation:
    clause: str
    message: str
    citation: str

    def to_dict(self) -> dict:
        return {"clause": self.clause, "message": self.message, "citation": self.citation}


@dataclass
class ValidationResult:
    signature: OrbifoldSignature
    violations: list[Violation] = field(default_factory=list)
    action_count: int = 0
    relaxed: bool = False
    """True for spherical bases, where any torsion-compatible homomorphism is accepted."""

    @property
    def accepted(self) -> bool:
        return not self.violations

    @property
    def clauses(self) -> list[str]:
        return [v.clause for v in self.violations]

    def to_dict(self) -> dict:
        return {
            "signature": str(self.signature),
            "accepted": self.accepted,
            "violations": [v.to_dict() for v in self.violations],
            "action_count": self.action_count,
            "relaxed": self.relaxed,
        }


def validate_bundle_base(sig: OrbifoldSignature) -> ValidationResult:
    """Check every admissibility clause and report each failure separately."""
    res = ValidationResult(sig)
    bad_orders = sorted({n for n in sig.cone_orders if n != 2})
    if bad_orders:
        res.violations.append(
            Violation(
                "cone_order",
                f"cone points must have order 2 (found order {', '.join(map(str, bad_orders))})",
                "Lemma 2",
            )
        )
    if any(sig.reflector_circles):
        res.violations.append(
            Violation("corner_points", "reflector circles must have no corner points", "Lemma 2")
        )
    if sig == S2_ONE_CONE:
        res.violations.append(Violation("bad_orbifold", "the base must be a good orbifold; S(2) is bad", "Lemma 2"))
    if res.violations:
        return res
    pres = presentation(sig)
    if euler_characteristic(sig) > 0:
        res.relaxed = True
        res.action_count = len(torsion_compatible_maps(pres))
    else:
        res.action_count = len(enumerate_actions(pres))
    if res.action_count == 0:
        res.violations.append(
            Violation(
                "no_action",
                "no epimorphism to Z/2 is -1 on every cone and reflection generator; "
                "the number of cone points plus twisted reflector curves must be even",
                "Lemma 2",
            )
        )
    return res
