from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbibundle.errors import OutOfScopeError, SignatureSemanticError, SignatureSyntaxError
from orbibundle.presentation import Role, presentation
from orbibundle.signature import (
    GeometryClass,
    OrbifoldSignature,
    euler_characteristic,
    format_signature,
    geometry_class,
    parse_signature,
)

from .helpers import signatures

orders = st.integers(min_value=2, max_value=9)
sig_strategy = st.builds(
    lambda o, g, cones, circles: OrbifoldSignature(o, g + (0 if o else 1), tuple(cones), tuple(map(tuple, circles))),
    st.booleans(),
    st.integers(min_value=0, max_value=6),
    st.lists(orders, max_size=6),
    st.lists(st.lists(orders, max_size=3), max_size=3),
)


def test_parse_examples():
    s = parse_signature("S2(2,2,2,2)[]")
    assert (s.orientable, s.genus, s.cone_orders, s.reflector_circles) == (True, 0, (2, 2, 2, 2), ())
    t = parse_signature("T()[]")
    assert (t.orientable, t.genus, t.has_singular_locus) == (True, 1, False)
    d = parse_signature("S2(2,2)[*]")
    assert d.k == 2 and d.r == 1 and d.short_name() == "D(2,2)"


def test_parse_surface_aliases():
    assert parse_signature("O1()[]") == parse_signature("T()[]")
    assert parse_signature("N2()[]") == parse_signature("Kb()[]")
    assert parse_signature("N1(2,2)[]") == parse_signature("RP2(2,2)[]")
    assert format_signature(parse_signature("O0()[*(2,3)]")) == "S2()[*(2,3)]"


@pytest.mark.parametrize(
    "text, pos",
    [("S3()[]", 0), ("S2(2,2[]", 6), ("S2()", 4), ("S2()[*(]", 7), ("S2()[]x", 6), ("S2(,)[]", 3)],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(SignatureSyntaxError) as exc:
        parse_signature(text)
    assert exc.value.position == pos


def test_semantic_errors():
    with pytest.raises(SignatureSemanticError, match="N0"):
        parse_signature("N0()[]")
    with pytest.raises(SignatureSemanticError):
        parse_signature("S2(1)[]")
    with pytest.raises(SignatureSemanticError):
        parse_signature("S2()[*(1)]")


@settings(max_examples=1000, deadline=None)
@given(sig_strategy)
def test_print_parse_roundtrip(sig):
    text = format_signature(sig)
    assert parse_signature(text) == sig
    assert format_signature(parse_signature(text)) == text


@pytest.mark.parametrize(
    "text, chi",
    [
        ("S2(2,2,2,2)[]", Fraction(0)),
        ("S2()[*]", Fraction(1)),
        ("T()[]", Fraction(0)),
        ("S2(2,2,2,2,2,2)[]", Fraction(-1)),
        ("RP2(2,2)[]", Fraction(0)),
        ("S2(2,3,7)[]", Fraction(-1, 42)),
        ("S2()[*(2,2)]", Fraction(1, 2)),
    ],
)
def test_euler_characteristic(text, chi):
    assert euler_characteristic(parse_signature(text)) == chi


@settings(max_examples=300, deadline=None)
@given(sig_strategy)
def test_chi_additive_under_order_two_cone(sig):
    assert euler_characteristic(sig.with_cone(2)) == euler_characteristic(sig) - Fraction(1, 2)


def test_chi_additive_exhaustive():
    for sig in signatures(max_genus=3, max_r=3, max_k=6):
        assert euler_characteristic(sig.with_cone()) == euler_characteristic(sig) - Fraction(1, 2)


@pytest.mark.parametrize(
    "text, cls",
    [
        ("S2(2)[]", GeometryClass.BAD),
        ("RP2(2,2)[]", GeometryClass.EUCLIDEAN),
        ("S2(2,2,2,2,2,2)[]", GeometryClass.HYPERBOLIC),
        ("S2(2,2)[]", GeometryClass.SPHERICAL),
        ("S2()[]", GeometryClass.SPHERICAL),
    ],
)
def test_geometry_class(text, cls):
    assert geometry_class(parse_signature(text)) is cls


def test_geometry_class_out_of_scope():
    with pytest.raises(OutOfScopeError):
        geometry_class(parse_signature("S2(3,3,3)[]"))


def test_presentation_examples():
    p = presentation(parse_signature("S2(2,2,2,2)[]"))
    assert str(p) == "< x1, x2, x3, x4 | x1 x1, x2 x2, x3 x3, x4 x4, x1 x2 x3 x4 >"
    a = presentation(parse_signature("S2()[*,*]"))
    assert a.labels == ("z1", "c1", "z2", "c2")
    assert [g.role for g in a.generators] == [Role.BOUNDARY_LOOP, Role.REFLECTION] * 2
    assert str(a.abelianization()) == "Z + (Z/2)^2"
    pp = presentation(parse_signature("RP2(2,2)[]"))
    assert pp.format_word(pp.relators[-1]) == "x1 x2 v1 v1"


def test_presentation_invariants():
    for sig in signatures(max_genus=2, max_r=3, max_k=4):
        p = presentation(sig)
        torsion = {p.index(g.label) + 1 for g in p.generators if g.role in (Role.CONE, Role.REFLECTION)}
        squares = {r[0] for r in p.relators[:-1] if len(r) == 2 and r[0] == r[1]}
        assert torsion == squares
        assert len(p.relators) == sig.k + 2 * sig.r + 1


@pytest.mark.parametrize("g", range(0, 5))
def test_closed_surface_abelianization(g):
    o = presentation(OrbifoldSignature(True, g)).abelianization()
    assert (o.free_rank, o.invariant_factors) == (2 * g, ())
    if g >= 1:
        n = presentation(OrbifoldSignature(False, g)).abelianization()
        assert (n.free_rank, n.invariant_factors) == (g - 1, (2,))
