import pytest

from orbibundle.actions import enumerate_actions, kernel_subgroup, parse_action_literal
from orbibundle.classification import (
    WuClass,
    catalog_entry,
    classify,
    classify_all,
    generated_by_involutions,
    gluck_twist_geometric,
    homotopy_type_count,
    rp2_product_test,
    rp2_section_bundle_test,
    spherical_catalog,
    wu_class,
)
from orbibundle.cohomology import restricted_squares
from orbibundle.cohomology.mod2 import word_value
from orbibundle.errors import OutOfScopeError
from orbibundle.presentation import presentation
from orbibundle.rewriting import tietze_reduce
from orbibundle.signature import euler_characteristic, parse_signature

from .helpers import aspherical_corpus, lifts_to_z4, load_fixture


def _sp(text):
    s = parse_signature(text)
    return s, presentation(s)


@pytest.mark.parametrize("text, count", [("S2(2,2)[*]", 1), ("S2(2,2,2,2)[]", 2), ("RP2(2,2)[]", 2)])
def test_homotopy_type_count_examples(text, count):
    assert homotopy_type_count(parse_signature(text)) == count


def test_homotopy_type_count_scope():
    with pytest.raises(OutOfScopeError):
        homotopy_type_count(parse_signature("S2(2,2)[]"))
    with pytest.raises(OutOfScopeError):
        homotopy_type_count(parse_signature("T()[]"))


@pytest.mark.parametrize("text, value", [("S2(2,2,2,2)[]", True), ("RP2(2,2)[]", False), ("S2()[*,*]", False)])
def test_generated_by_involutions(text, value):
    assert generated_by_involutions(parse_signature(text)) is value


@pytest.mark.parametrize(
    "text, value", [("S2(2,2,2,2)[]", False), ("RP2(2,2)[]", True), ("S2(2,2,2,2,2,2)[]", False), ("T(2,2)[]", True)]
)
def test_gluck_twist_geometric(text, value):
    assert gluck_twist_geometric(parse_signature(text)) is value


def test_wu_examples():
    s, p = _sp("RP2(2,2)[]")
    for a in enumerate_actions(p):
        assert wu_class(s, a, p).labels == (WuClass.USQUARED,)
    assert catalog_entry(parse_signature("S2()[*]")).wu_class == "Zero"
    t, tp = _sp("T()[]")
    assert wu_class(t, enumerate_actions(tp)[0], tp).labels == (WuClass.NOT_APPLICABLE,)


def test_wu_on_d22_uses_nonzero_square():
    s, p = _sp("S2(2,2)[*]")
    for a in enumerate_actions(p):
        w = wu_class(s, a, p)
        assert w.labels == (WuClass.UW,) and not w.ambiguous
    rep = classify_all(s)[0]
    assert any("erratum" in n for n in rep.notes)


def test_uw_witness_fixture():
    fx = load_fixture("uw_witness.json")
    s, p = _sp(fx["signature"])
    a = parse_action_literal(fx["action"], p)
    w = wu_class(s, a, p)
    assert w.symbol == fx["wu_class"] == "UW"
    assert euler_characteristic(s) < 0
    cls = fx["witness_class"]
    assert any(cls) and len(cls) == p.ngens and list(p.labels) == fx["generators"]
    sub = kernel_subgroup(p, a)
    red = tietze_reduce(sub.presentation)
    res = [word_value(cls, wd) for wd in sub.schreier_words]
    assert not lifts_to_z4(red.presentation, [res[i] for i in red.kept])


def test_wu_never_zero_without_reflectors():
    for sig, a in aspherical_corpus(2, 3, 6):
        w = wu_class(sig, a)
        if sig.r == 0:
            assert WuClass.ZERO not in w.labels
        if w.ambiguous:
            assert sig.r > 0 and sig.k > 0 and not restricted_squares(presentation(sig), a).any_nonzero


def test_spherical_catalog_counts():
    counts = {e.base: e.bundle_count for e in spherical_catalog()}
    assert counts == {"S2": 2, "RP2": 4, "S(2,2)": 2, "D": 1, "D(2)": 1}
    assert "RP^4 #_{S^1} RP^4" in catalog_entry(parse_signature("S2(2,2)[]")).description
    assert "RP^2-bundle over RP^2" in catalog_entry(parse_signature("S2(2)[*]")).description


def test_classify_examples():
    rep = classify_all(parse_signature("S2(2,2,2,2)[]"))
    assert len(rep) == 1
    r = rep[0]
    assert r.homotopy_type_count == 2
    assert r.twists["standard"].geometric and not r.twists["gluck"].geometric
    assert str(r.h2_zu) == "0" and r.twists["standard"].k_invariant == "beta_u(U^2)"
    assert r.kernel.name == "T" and r.geometry == "S2xE2"
    s, p = _sp("S2()[*,*]")
    r = classify(s, parse_action_literal("z=+1", p), p)
    assert r.homotopy_type_count == 1 and r.twists["standard"].geometric
    assert str(r.h2_zu) == "Z + Z/2" and r.kernel.name == "T"
    assert classify_all(parse_signature("S2(2,2,2,2,2,2)[]"))[0].geometry == "S2xH2"


def test_classify_bundle_case():
    for r in classify_all(parse_signature("T()[]")):
        assert r.homotopy_type_count is None
        assert any("bundle case" in n for n in r.notes)


def test_classify_spherical_routes_to_catalog():
    r = classify(parse_signature("S2(2,2)[]"))
    assert r.catalog.bundle_count == 2 and r.homotopy_type_count == 2
    with pytest.raises(OutOfScopeError):
        classify(parse_signature("S2(2)[]"))


def test_report_citations_present():
    for r in classify_all(parse_signature("RP2(2,2)[]")):
        assert {"Theorem 10", "Theorem 12(3)", "Theorem 11", "Theorem 14"} <= set(r.citations)
        assert r.to_dict()["citations"] == r.citations


def test_rp2_product_test():
    assert rp2_product_test(True, True, True)
    assert not rp2_product_test(True, True, False)
    assert not rp2_product_test(False, True, True)


def test_rp2_section_bundle_test():
    s, p = _sp("S2(2,2)[*]")
    assert rp2_section_bundle_test(s, enumerate_actions(p)[0], True)
    q, qp = _sp("S2(2,2,2,2)[]")
    res = rp2_section_bundle_test(q, enumerate_actions(qp)[0], True)
    assert not res and res.contradiction
    t, tp = _sp("T()[]")
    assert not rp2_section_bundle_test(t, enumerate_actions(tp)[0], True)


def test_report_invariants_on_corpus():
    for sig, a in aspherical_corpus(2, 3, 6):
        r = classify(sig, a)
        assert (r.homotopy_type_count == 1) == (sig.r > 0)
        assert r.kernel.euler_characteristic == 2 * euler_characteristic(sig)
        if r.homotopy_type_count == 1:
            assert r.twists["gluck"].geometric
            assert r.twists["gluck"].wu_class == r.twists["standard"].wu_class
