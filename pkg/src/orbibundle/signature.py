"""Closed 2-orbifolds described combinatorially.

Text form::

    sig       := surface cones reflectors
    surface   := "S2" | "RP2" | "T" | "Kb" | "O" int | "N" int
    cones     := "(" [int ("," int)*] ")"
    reflectors:= "[" [circle ("," circle)*] "]"
    circle    := "*" | "*(" int ("," int)* ")"

``O g`` is the orientable surface of genus ``g``; ``N g`` the connected sum
of ``g`` projective planes.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfScopeError, SignatureSemanticError, SignatureSyntaxError


class GeometryClass(enum.Enum):
    SPHERICAL = "Spherical"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC = "Hyperbolic"
    BAD = "Bad"


@dataclass(frozen=True, order=True)
class OrbifoldSignature:
    orientable: bool
    genus: int
    cone_orders: tuple[int, ...] = ()
    reflector_circles: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cone_orders", tuple(self.cone_orders))
        object.__setattr__(self, "reflector_circles", tuple(tuple(c) for c in self.reflector_circles))
        if self.genus < 0:
            raise SignatureSemanticError("genus must be non-negative")
        if not self.orientable and self.genus < 1:
            raise SignatureSemanticError("a non-orientable surface needs at least one crosscap")
        if any(n < 2 for n in self.cone_orders):
            raise SignatureSemanticError("cone orders must be at least 2")
        if any(m < 2 for c in self.reflector_circles for m in c):
            raise SignatureSemanticError("corner orders must be at least 2")

    # -- convenience -------------------------------------------------------
    @property
    def k(self) -> int:
        """Number of cone points."""
        return len(self.cone_orders)

    @property
    def r(self) -> int:
        """Number of reflector circles."""
        return len(self.reflector_circles)

    @property
    def has_singular_locus(self) -> bool:
        return self.k + self.r > 0

    @property
    def complexity(self) -> int:
        return self.k + self.r + self.genus + (0 if self.orientable else 1)

    @property
    def underlying_euler_characteristic(self) -> int:
        """Euler characteristic of the underlying surface with one hole per reflector circle."""
        closed = 2 - 2 * self.genus if self.orientable else 2 - self.genus
        return closed - self.r

    def is_in_scope(self) -> bool:
        return all(n == 2 for n in self.cone_orders) and all(not c for c in self.reflector_circles)

    def with_cone(self, order: int = 2) -> "OrbifoldSignature":
        return OrbifoldSignature(self.orientable, self.genus, self.cone_orders + (order,), self.reflector_circles)

    def surface_name(self) -> str:
        if self.orientable:
            return {0: "S2", 1: "T"}.get(self.genus, f"O{self.genus}")
        return {1: "RP2", 2: "Kb"}.get(self.genus, f"N{self.genus}")

    def __str__(self) -> str:
        return format_signature(self)

    def short_name(self) -> str:
        """Conventional name for the small cases, e.g. ``S(2,2,2,2)`` or ``D(2,2)``."""
        cones = ",".join(str(n) for n in self.cone_orders)
        if self.r == 0:
            base = {
                (True, 0): "S",
                (False, 1): "P",
                (True, 1): "T",
                (False, 2): "Kb",
            }.get((self.orientable, self.genus))
            if base is None:
                return str(self)
            if not cones:
                return {"S": "S2", "P": "RP2"}.get(base, base)
            return f"{base}({cones})"
        if all(not c for c in self.reflector_circles):
            named = {(True, 0, 1): "D", (True, 0, 2): "A", (False, 1, 1): "Mb"}.get(
                (self.orientable, self.genus, self.r)
            )
            if named is not None:
                return f"{named}({cones})" if cones else named
        return str(self)


def format_signature(sig: OrbifoldSignature) -> str:
    cones = ",".join(str(n) for n in sig.cone_orders)
    circles = ",".join("*" if not c else "*(" + ",".join(str(m) for m in c) + ")" for c in sig.reflector_circles)
    return f"{sig.surface_name()}({cones})[{circles}]"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise SignatureSyntaxError(msg, self.text, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def int_list(self, close: str) -> list[int]:
        vals: list[int] = []
        if self.peek() == close:
            return vals
        vals.append(self.integer())
        while self.peek() == ",":
            self.pos += 1
            vals.append(self.integer())
        return vals

    def surface(self) -> tuple[bool, int]:
        t = self.text
        for word, val in (("S2", (True, 0)), ("RP2", (False, 1)), ("Kb", (False, 2)), ("T", (True, 1))):
            if t.startswith(word, self.pos):
                self.pos += len(word)
                return val
        ch = self.peek()
        if ch in ("O", "N"):
            self.pos += 1
            start = self.pos
            g = self.integer()
            if ch == "N" and g < 1:
                self.pos = start
                raise SignatureSemanticError(
                    f"crosscap count must be at least 1 (got N{g}) at position {start} in {t!r}"
                )
            return ch == "O", g
        self.error("expected a surface (S2, RP2, T, Kb, O<g>, N<g>)")

    def parse(self) -> OrbifoldSignature:
        orientable, genus = self.surface()
        self.expect("(")
        cones = self.int_list(")")
        self.expect(")")
        self.expect("[")
        circles: list[tuple[int, ...]] = []
        if self.peek() != "]":
            circles.append(self.circle())
            while self.peek() == ",":
                self.pos += 1
                circles.append(self.circle())
        self.expect("]")
        if self.pos != len(self.text):
            self.error("trailing characters")
        return OrbifoldSignature(orientable, genus, tuple(cones), tuple(circles))

    def circle(self) -> tuple[int, ...]:
        self.expect("*")
        if self.peek() == "(":
            self.pos += 1
            corners = self.int_list(")")
            if not corners:
                self.error("a cornered circle needs at least one corner order")
            self.expect(")")
            return tuple(corners)
        return ()


def parse_signature(text: str) -> OrbifoldSignature:
    """Parse the ASCII signature grammar; raises on syntax or semantic errors."""
    return _Parser(text).parse()


def euler_characteristic(sig: OrbifoldSignature) -> Fraction:
    chi = Fraction(sig.underlying_euler_characteristic)
    for n in sig.cone_orders:
        chi -= 1 - Fraction(1, n)
    for circle in sig.reflector_circles:
        for m in circle:
            chi -= Fraction(1, 2) * (1 - Fraction(1, m))
    return chi


S2_ONE_CONE = OrbifoldSignature(True, 0, (2,), ())


def geometry_class(sig: OrbifoldSignature) -> GeometryClass:
    """Geometry of an in-scope orbifold (cone orders 2, corner-free circles).

    The only bad orbifold with all isotropy of order at most two is ``S(2)``.
    """
    if not sig.is_in_scope():
        raise OutOfScopeError(f"{sig}: only cone points of order 2 and corner-free reflector circles are supported")
    if sig == S2_ONE_CONE:
        return GeometryClass.BAD
    chi = euler_characteristic(sig)
    if chi > 0:
        return GeometryClass.SPHERICAL
    if chi == 0:
        return GeometryClass.EUCLIDEAN
    return GeometryClass.HYPERBOLIC
