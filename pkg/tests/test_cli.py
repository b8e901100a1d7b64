import io
import json
import re
import subprocess
import sys

import jsonschema
import pytest

from orbibundle import census as census_mod
from orbibundle import cli

SCHEMA = cli.load_schema()


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    payload = json.loads(out) if out else None
    if payload is not None:
        jsonschema.validate(payload, SCHEMA)
    return code, payload, err


def test_classify_example():
    code, p, _ = run_json("classify", "S2(2,2,2,2)[]")
    assert code == 0
    (r,) = p["reports"]
    assert r["homotopy_type_count"] == 2
    assert r["twists"]["gluck"]["geometric"] is False
    assert "Theorem 13" in p["citations"]


def test_census_flat_json():
    code, p, _ = run_json("census", "flat")
    assert code == 0 and p["grand_total"] == 23
    assert p["totals"] == {"s2_bundles": 10, "rp2_bundles": 4, "reflector_bases": 4, "finite_abelianization": 5}


def test_validate_bad_orbifold():
    code, p, err = run_json("validate", "S2(2)[]")
    assert code == 1
    assert "Lemma 2" in err
    assert [v["citation"] for v in p["violations"]] == ["Lemma 2"]
    code, p, _ = run_json("validate", "RP2(2,2)[]")
    assert code == 0 and p["accepted"]


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "S3()[]"],
        ["census", "hyperbolic"],
        ["cohomology", "S2()[*,*]"],
        ["classify", "S2()[*,*]", "--u", "q=1"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_validation_errors_exit_1():
    assert run("classify", "S2(2,2,2)[]")[0] == 1
    assert run("cover", "S2(2,2)[]")[0] == 1


def test_inconsistency_exits_3(monkeypatch):
    monkeypatch.setattr(census_mod, "EXPECTED_FLAT_TOTALS", {**census_mod.EXPECTED_FLAT_TOTALS, "rp2_bundles": 5})
    code, _, err = run("census", "flat")
    assert code == 3 and "inconsistency" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "S2(2,2)[*]"],
        ["classify", "S2(2,2)[]"],
        ["classify", "T()[]"],
        ["classify", "S2()[*,*]", "--u", "z=-1"],
        ["census", "flat"],
        ["census", "hyperbolic", "--max", "4"],
        ["cohomology", "RP2(2,2)[*]", "--degree", "2"],
        ["cohomology", "S2(2,2,2,2)[]", "--degree", "3", "--coeff", "F2"],
        ["cohomology", "T()[]", "--degree", "1", "--coeff", "Z"],
        ["cover", "S2()[*,*]"],
        ["validate", "S2(3)[]"],
    ],
)
def test_json_matches_schema(argv):
    code, p, _ = run_json(*argv)
    assert p["schema_version"] == "1.0" and p["command"] == argv[0]
    assert isinstance(p["citations"], list)


def test_text_and_json_agree_on_census():
    _, p, _ = run_json("census", "flat")
    _, text, _ = run("census", "flat")
    rows = [l.split() for l in text.splitlines() if l.strip()]
    totals = {r[0]: int(r[1]) for r in rows if len(r) == 2}
    assert totals == {**p["totals"], "grand_total": p["grand_total"]}
    counts = [(int(r[-3]), int(r[-2])) for r in rows if len(r) > 2 and r[-3].isdigit()]
    assert counts == [(e["homotopy_type_count"], e["geometric_count"]) for e in p["entries"]]


def test_text_and_json_agree_on_classify():
    for sig in ["S2(2,2,2,2)[]", "RP2(2,2)[]", "S2()[*,*]"]:
        _, p, _ = run_json("classify", sig)
        _, text, _ = run("classify", sig)
        found = [int(m) for m in re.findall(r"^homotopy types\s+(\d+)", text, re.M)]
        assert found == [r["homotopy_type_count"] for r in p["reports"]]


def test_cohomology_lists_all_classes():
    _, p, _ = run_json("cohomology", "S2()[*,*]", "--degree", "2")
    groups = {r["action"]: (r["free_rank"], r["torsion"]) for r in p["results"]}
    assert groups == {"z1=-1,c1=-1,z2=-1,c2=-1": (0, [2, 2]), "z1=+1,c1=-1,z2=+1,c2=-1": (1, [2])}
    _, p, _ = run_json("cohomology", "S2()[*,*]", "--degree", "2", "--u", "z=+1")
    assert len(p["results"]) == 1


def test_cover_output():
    _, p, _ = run_json("cover", "RP2(2,2)[]")
    (c,) = p["covers"]
    assert c["kernel"]["name"] == "Kb" and c["parity"] is True


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orbibundle", "census", "flat", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["grand_total"] == 23
