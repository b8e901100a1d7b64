"""Decision procedures for S^2-orbifold bundles over closed 2-orbifolds.

Homotopy-type counts, geometricity of the Gluck twist, second Wu classes,
the spherical catalog and the RP^2 fibration predicates.  Every report
carries the anchors of the results it relies on in ``citations``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .actions import (
    Action,
    CurveTag,
    SurfaceDescriptor,
    classify_reflector_curves,
    dedup_actions,
    enumerate_actions,
    fingerprint,
    kernel_double_cover,
    parity_check,
)
from .cohomology import decompose, mv_cohomology, restricted_squares, theorem10_closed_form, twisted_z
from .errors import OutOfScopeError
from .linalg import AbelianGroup
from .presentation import Presentation, presentation
from .signature import GeometryClass, OrbifoldSignature, euler_characteristic, format_signature, geometry_class

ERRATUM_SIGNATURE = "S2(2,2)[*]"
OPEN_RP2_FIBRATION_SIGNATURE = "RP2(2,2)[]"


class WuClass(str, enum.Enum):
    ZERO = "Zero"
    USQUARED = "Usquared"
    UW = "UW"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class WuResult:
    """Wu class labels; two labels with ``ambiguous`` set when both rules apply."""

    labels: tuple[WuClass, ...]
    ambiguous: bool = False
    witness: tuple[int, ...] | None = None

    @property
    def symbol(self) -> str:
        return "|".join(l.value for l in self.labels)

    def to_dict(self) -> dict:
        return {
            "symbol": self.symbol,
            "labels": [l.value for l in self.labels],
            "ambiguous": self.ambiguous,
            "witness": list(self.witness) if self.witness else None,
        }


def _require_aspherical(sig: OrbifoldSignature) -> None:
    g = geometry_class(sig)
    if g in (GeometryClass.SPHERICAL, GeometryClass.BAD):
        raise OutOfScopeError(f"{sig}: {g.value.lower()} base; see the spherical catalog")


def homotopy_type_count(sig: OrbifoldSignature, action: Action | None = None) -> int:
    """One homotopy type when the base has a reflector curve, otherwise two."""
    _require_aspherical(sig)
    if not sig.has_singular_locus:
        raise OutOfScopeError(f"{sig}: torsion-free group; bundle spaces are tabulated separately")
    return 1 if sig.r > 0 else 2


def generated_by_involutions(sig: OrbifoldSignature) -> bool:
    """Orbifold group generated by cone involutions: underlying sphere, cones only."""
    return sig.orientable and sig.genus == 0 and sig.r == 0 and sig.k > 0


def gluck_twist_geometric(sig: OrbifoldSignature, action: Action | None = None) -> bool:
    return sig.r > 0 or not generated_by_involutions(sig)


def wu_class(sig: OrbifoldSignature, action: Action, pres: Presentation | None = None) -> WuResult:
    """Second Wu class from the cup squares of restricted mod-2 classes."""
    if not sig.has_singular_locus:
        return WuResult((WuClass.NOT_APPLICABLE,))
    pres = pres or presentation(sig)
    sq = restricted_squares(pres, action)
    if sq.any_nonzero:
        return WuResult((WuClass.UW,), witness=sq.witness)
    if sig.r > 0 and sig.k > 0:
        return WuResult((WuClass.ZERO, WuClass.USQUARED), ambiguous=True)
    if sig.r > 0:
        return WuResult((WuClass.ZERO,))
    return WuResult((WuClass.USQUARED,))


# ---------------------------------------------------------------------------
# spherical bases


@dataclass(frozen=True)
class CatalogEntry:
    base: str
    signature: str
    bundle_count: int
    description: str
    wu_class: str | None
    curve: str | None
    citations: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "signature": self.signature,
            "bundle_count": self.bundle_count,
            "description": self.description,
            "wu_class": self.wu_class,
            "reflector_curve": self.curve,
            "citations": list(self.citations),
        }


_CATALOG = (
    CatalogEntry("S2", "S2()[]", 2, "S^2-bundle spaces over S^2", None, None, ("Section 4",)),
    CatalogEntry(
        "RP2",
        "RP2()[]",
        4,
        "quotients of S^2 x S^2 by involutions (A,-I) with A diagonal",
        None,
        None,
        ("Section 4",),
    ),
    CatalogEntry(
        "S(2,2)",
        "S2(2,2)[]",
        2,
        "geometric bundle E(2,2) u S^2 x D^2, and RP^4 #_{S^1} RP^4; distinguished by the q-invariant of KKR",
        None,
        None,
        ("Section 4",),
    ),
    CatalogEntry(
        "D",
        "S2()[*]",
        1,
        "unique bundle; total space orientable",
        WuClass.ZERO.value,
        CurveTag.UNTWISTED.value,
        ("Section 4", "Theorem 7 Corollary B"),
    ),
    CatalogEntry(
        "D(2)",
        "S2(2)[*]",
        1,
        "unique bundle; also the nontrivial RP^2-bundle over RP^2",
        None,
        CurveTag.TWISTED.value,
        ("Section 4", "Theorem 7 Corollary B"),
    ),
)


def spherical_catalog() -> tuple[CatalogEntry, ...]:
    return _CATALOG


def catalog_entry(sig: OrbifoldSignature) -> CatalogEntry | None:
    text = format_signature(sig)
    return next((e for e in _CATALOG if e.signature == text), None)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class TwistRecord:
    geometric: bool
    wu_class: WuResult
    k_invariant: str

    def to_dict(self) -> dict:
        return {"geometric": self.geometric, "wu_class": self.wu_class.to_dict(), "k_invariant": self.k_invariant}


@dataclass
class ClassificationReport:
    signature: OrbifoldSignature
    action: Action | None
    geometry: str
    geometry_class: GeometryClass
    euler_characteristic: Fraction
    homotopy_type_count: int | None
    twists: dict[str, TwistRecord] = field(default_factory=dict)
    kernel: SurfaceDescriptor | None = None
    curve_tags: tuple[str, ...] = ()
    parity: bool | None = None
    h2_zu: AbelianGroup | None = None
    h3_zu: AbelianGroup | None = None
    h2_zu_stated: AbelianGroup | None = None
    fingerprint: dict | None = None
    catalog: CatalogEntry | None = None
    notes: list[str] = field(default_factory=list)
    citations: list[str] = field(default_factory=list)

    def cite(self, *anchors: str) -> None:
        for a in anchors:
            if a not in self.citations:
                self.citations.append(a)

    def to_dict(self) -> dict:
        def group(g):
            return g.to_dict() if g is not None else None

        return {
            "signature": format_signature(self.signature),
            "action": self.action.literal() if self.action else None,
            "geometry": self.geometry,
            "geometry_class": self.geometry_class.value,
            "euler_characteristic": str(self.euler_characteristic),
            "homotopy_type_count": self.homotopy_type_count,
            "twists": {k: v.to_dict() for k, v in self.twists.items()},
            "kernel": self.kernel.to_dict() if self.kernel else None,
            "curve_tags": list(self.curve_tags),
            "parity": self.parity,
            "h2_zu": group(self.h2_zu),
            "h3_zu": group(self.h3_zu),
            "h2_zu_stated": group(self.h2_zu_stated),
            "fingerprint": self.fingerprint,
            "catalog": self.catalog.to_dict() if self.catalog else None,
            "notes": list(self.notes),
            "citations": list(self.citations),
        }


def _geometry_tag(chi: Fraction) -> str:
    if chi == 0:
        return "S2xE2"
    if chi < 0:
        return "S2xH2"
    return "spherical"


def classify(sig: OrbifoldSignature, action: Action | None = None, pres: Presentation | None = None) -> ClassificationReport:
    """Full report for a validated base and action.

    Spherical bases are answered from the catalog; torsion-free groups are
    routed to the bundle case.
    """
    gc = geometry_class(sig)
    chi = euler_characteristic(sig)
    if gc is GeometryClass.BAD:
        raise OutOfScopeError(f"{sig}: bad orbifold")
    rep = ClassificationReport(sig, action, _geometry_tag(chi), gc, chi, None)
    rep.cite("Section 1")
    if gc is GeometryClass.SPHERICAL:
        rep.catalog = catalog_entry(sig)
        rep.homotopy_type_count = rep.catalog.bundle_count if rep.catalog else None
        rep.geometry = f"spherical catalog: {rep.catalog.base}" if rep.catalog else "spherical"
        rep.notes.append("spherical base: counts are catalog data")
        rep.cite(*(rep.catalog.citations if rep.catalog else ("Section 4",)))
        return rep
    pres = pres or presentation(sig)
    if action is None:
        raise ValueError("an action is required for aspherical bases")
    rep.kernel = kernel_double_cover(pres, action, chi)
    rep.curve_tags = tuple(t.value for t in classify_reflector_curves(sig, action))
    rep.parity = parity_check(sig, action)
    rep.fingerprint = fingerprint(sig, pres, action).to_dict()
    rep.cite("Lemma 2")
    if not sig.has_singular_locus:
        rep.notes.append("bundle case: torsion-free group, total spaces are S^2-bundle spaces tabulated in the flat census")
        rep.notes.append("Gluck reconstruction changes the second Wu class in the bundle case")
        rep.twists["standard"] = TwistRecord(True, WuResult((WuClass.NOT_APPLICABLE,)), "0")
        rep.cite("Section 5", "Section 8", "Section 9")
        return rep

    gog = decompose(sig, pres)
    module = twisted_z(action)
    rep.h2_zu = mv_cohomology(gog, module, 2)
    rep.h3_zu = mv_cohomology(gog, module, 3)
    stated = theorem10_closed_form(sig, action)
    rep.h2_zu_stated = stated.h2
    if rep.h2_zu != stated.h2:
        rep.notes.append(
            f"computed H^2(pi;Z^u) = {rep.h2_zu} differs from the stated closed form {stated.h2}"
        )
    rep.cite("Theorem 10")

    count = homotopy_type_count(sig, action)
    rep.homotopy_type_count = count
    rep.cite("Theorem 12(3)")
    if count == 2:
        rep.cite("Theorem 11")
    wu = wu_class(sig, action, pres)
    rep.cite("Theorem 14")
    if wu.ambiguous:
        rep.notes.append("Wu class: both the reflector-curve and cone-point rules apply; no nonzero restricted square found")
    rep.twists["standard"] = TwistRecord(True, wu, stated.k_invariant)
    gluck = gluck_twist_geometric(sig, action)
    rep.twists["gluck"] = TwistRecord(gluck, wu, stated.k_invariant)
    rep.cite("Theorem 13")
    if count == 1:
        rep.notes.append("the Gluck twist gives the same homotopy type as the standard bundle")
    text = format_signature(sig)
    if text == ERRATUM_SIGNATURE:
        rep.notes.append(
            "erratum: an earlier published v_2 calculation for (Z+Z/2)*_Z D is wrong; the restricted square is nonzero"
        )
        rep.cite("Section 8")
    if text == OPEN_RP2_FIBRATION_SIGNATURE:
        rep.notes.append("open: whether the second flat Z*_Z D manifold also fibres over RP^2 is unknown")
        rep.cite("Section 11")
    return rep


def classify_all(sig: OrbifoldSignature) -> list[ClassificationReport]:
    """One report per action class (or a single catalog/bundle report)."""
    if geometry_class(sig) is GeometryClass.SPHERICAL:
        return [classify(sig)]
    pres = presentation(sig)
    classes = dedup_actions(sig, enumerate_actions(pres), pres)
    return [classify(sig, c.representative, pres) for c in classes]


# ---------------------------------------------------------------------------
# RP^2 fibration predicates


def rp2_product_test(pi_is_product: bool, chi_matches: bool, v2_zero: bool) -> bool:
    """Homotopy equivalence with ``RP^2 x F`` from the three group-level hypotheses."""
    return bool(pi_is_product and chi_matches and v2_zero)


@dataclass(frozen=True)
class SectionTestResult:
    holds: bool
    contradiction: bool
    notes: tuple[str, ...]
    citations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "contradiction": self.contradiction,
            "notes": list(self.notes),
            "citations": list(self.citations),
        }


def rp2_section_bundle_test(sig: OrbifoldSignature, action: Action | None, orientable_total_space: bool) -> SectionTestResult:
    """Fibration over ``RP^2`` with a section, for an orientable total space.

    An orientable total space whose group has torsion forces a reflector
    curve; a cones-only base with the orientable flag is flagged as a
    contradiction rather than accepted.
    """
    torsion = sig.has_singular_locus
    cites = ("Theorem 16",)
    if not (orientable_total_space and torsion):
        return SectionTestResult(False, False, (), cites)
    if sig.r == 0:
        return SectionTestResult(
            False,
            True,
            ("orientable total space with torsion requires a reflector curve; this base has none",),
            cites + ("Theorem 12 Corollary B",),
        )
    return SectionTestResult(True, False, ("the base has a reflector curve, so M is the standard bundle",), cites)
