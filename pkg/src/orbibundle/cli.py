"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 internal
inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import __version__
from .actions import (
    classify_reflector_curves,
    dedup_actions,
    enumerate_actions,
    kernel_double_cover,
    kernel_subgroup,
    parity_check,
    parse_action_literal,
)
from .census import flat_census, hyperbolic_census
from .classification import classify, classify_all
from .cohomology import decompose, f2, h0, h1, mv_cohomology, trivial_z, twisted_z
from .errors import (
    ActionSyntaxError,
    InconsistencyError,
    OrbibundleError,
    SignatureSyntaxError,
)
from .presentation import presentation
from .rewriting import tietze_reduce
from .signature import GeometryClass, euler_characteristic, format_signature, geometry_class, parse_signature
from .validation import validate_bundle_base

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_VALIDATION, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class ValidationFailed(Exception):
    def __init__(self, payload: dict):
        self.payload = payload
        super().__init__(payload.get("error", "validation failed"))


def load_schema() -> dict:
    """The versioned JSON schema shipped with the package."""
    return json.loads(resources.files("orbibundle").joinpath("schema/report.schema.json").read_text())


def _envelope(command: str, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **body}


def _select_actions(sig, pres, literal):
    """The named action, or one representative per class when ``--u`` is omitted."""
    if literal is not None:
        return [parse_action_literal(literal, pres)]
    classes = dedup_actions(sig, enumerate_actions(pres), pres)
    if not classes:
        raise ValidationFailed({"error": f"{sig} admits no action with torsion-free kernel", "citations": ["Lemma 2"]})
    return [c.representative for c in classes]


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> dict:
    sig = parse_signature(args.signature)
    _require_valid(sig)
    if args.u is not None:
        reports = [classify(sig, parse_action_literal(args.u, presentation(sig)))]
    else:
        reports = classify_all(sig)
    cites: list[str] = []
    for r in reports:
        for c in r.citations:
            if c not in cites:
                cites.append(c)
    return _envelope("classify", {"signature": format_signature(sig), "reports": [r.to_dict() for r in reports], "citations": cites})


def cmd_census(args) -> dict:
    if args.kind == "flat":
        rep = flat_census()
    else:
        if args.max is None:
            raise UsageError("census hyperbolic needs --max N")
        rep = hyperbolic_census(args.max)
    return _envelope("census", {"kind": args.kind, **rep.to_dict()})


def _cohomology_group(sig, pres, module, degree):
    if degree == 0:
        return h0(pres, module)
    if degree == 1:
        return h1(pres, module)
    if not sig.has_singular_locus:
        raise ValidationFailed({"error": "degrees 2 and 3 need a base with cone points or reflector curves"})
    if geometry_class(sig) is GeometryClass.SPHERICAL:
        raise ValidationFailed({"error": "degrees 2 and 3 need an aspherical base"})
    return mv_cohomology(decompose(sig, pres), module, degree)


def cmd_cohomology(args) -> dict:
    sig = parse_signature(args.signature)
    _require_valid(sig)
    pres = presentation(sig)
    if args.coeff == "Zu":
        pairs = [(a, twisted_z(a)) for a in _select_actions(sig, pres, args.u)]
    elif args.coeff == "F2":
        pairs = [(None, f2(pres.labels))]
    else:
        pairs = [(None, trivial_z(pres.labels))]
    results = []
    for action, module in pairs:
        group = _cohomology_group(sig, pres, module, args.degree)
        results.append(
            {
                "action": action.literal() if action else None,
                "degree": args.degree,
                "coefficients": args.coeff,
                "free_rank": group.free_rank,
                "torsion": list(group.invariant_factors),
            }
        )
    return _envelope(
        "cohomology",
        {
            "signature": format_signature(sig),
            "results": results,
            "citations": ["Theorem 10"] if args.degree >= 2 else [],
        },
    )


def cmd_cover(args) -> dict:
    sig = parse_signature(args.signature)
    _require_valid(sig)
    if geometry_class(sig) is GeometryClass.SPHERICAL:
        raise ValidationFailed({"error": "double covers are reported for aspherical bases only", "citations": ["Section 4"]})
    pres = presentation(sig)
    covers = []
    for action in _select_actions(sig, pres, args.u):
        kernel = kernel_double_cover(pres, action, euler_characteristic(sig))
        reduced = tietze_reduce(kernel_subgroup(pres, action).presentation).presentation
        covers.append(
            {
                "action": action.literal(),
                "kernel": kernel.to_dict(),
                "curve_tags": [t.value for t in classify_reflector_curves(sig, action)],
                "parity": parity_check(sig, action),
                "kernel_presentation": str(reduced),
            }
        )
    return _envelope(
        "cover",
        {"signature": format_signature(sig), "covers": covers, "citations": ["Section 1", "Lemma 2"]},
    )


def cmd_validate(args) -> dict:
    sig = parse_signature(args.signature)
    res = validate_bundle_base(sig)
    body = _envelope("validate", {**res.to_dict(), "citations": sorted({v.citation for v in res.violations} | {"Lemma 2"})})
    if not res.accepted:
        raise ValidationFailed(body)
    return body


def _require_valid(sig) -> None:
    res = validate_bundle_base(sig)
    if not res.accepted:
        raise ValidationFailed(
            _envelope("validate", {**res.to_dict(), "citations": sorted({v.citation for v in res.violations})})
        )


# ---------------------------------------------------------------------------
# text rendering


def _group(d) -> str:
    if d is None:
        return "-"
    parts = (["Z" if d["free_rank"] == 1 else f"Z^{d['free_rank']}"] if d["free_rank"] else []) + [
        f"Z/{t}" for t in d["torsion"]
    ]
    return " + ".join(parts) or "0"


def render_text(payload: dict) -> str:
    cmd = payload.get("command")
    lines: list[str] = []
    if cmd == "classify":
        for r in payload["reports"]:
            lines.append(f"signature            {r['signature']}")
            lines.append(f"action               {r['action'] or '-'}")
            lines.append(f"geometry             {r['geometry']} (chi = {r['euler_characteristic']})")
            lines.append(f"homotopy types       {r['homotopy_type_count']}")
            if r["kernel"]:
                lines.append(f"kernel surface       {r['kernel']['name']} (chi = {r['kernel']['euler_characteristic']})")
            if r["curve_tags"]:
                lines.append(f"reflector curves     {', '.join(r['curve_tags'])}")
            if r["h2_zu"] is not None:
                lines.append(f"H^2(pi;Z^u)          {_group(r['h2_zu'])}")
                lines.append(f"H^3(pi;Z^u)          {_group(r['h3_zu'])}")
            for name, t in r["twists"].items():
                lines.append(
                    f"twist {name:<14} geometric={str(t['geometric']).lower()} wu={t['wu_class']['symbol']} k1={t['k_invariant']}"
                )
            for n in r["notes"]:
                lines.append(f"note                 {n}")
            lines.append(f"citations            {', '.join(r['citations'])}")
            lines.append("")
    elif cmd == "census":
        lines.append(f"{'base':<26}{'action class':<36}{'types':>6}{'geometric':>10}  category")
        for e in payload["entries"]:
            lines.append(
                f"{e['base']:<26}{(e['action_class'] or '-'):<36}{e['homotopy_type_count']:>6}{e['geometric_count']:>10}  {e['category']}"
            )
        lines.append("")
        for k, v in payload["totals"].items():
            lines.append(f"{k:<26}{v:>6}")
        lines.append(f"{'grand_total':<26}{payload['grand_total']:>6}")
    elif cmd == "cohomology":
        for r in payload["results"]:
            suffix = f"  [{r['action']}]" if r["action"] else ""
            lines.append(f"H^{r['degree']}({payload['signature']}; {r['coefficients']}) = {_group(r)}{suffix}")
    elif cmd == "cover":
        for c in payload["covers"]:
            k = c["kernel"]
            lines.append(f"action          {c['action']}")
            lines.append(f"kernel surface  {k['name']} (orientable={str(k['orientable']).lower()}, chi={k['euler_characteristic']})")
            lines.append(f"presentation    {c['kernel_presentation']}")
            if c["curve_tags"]:
                lines.append(f"curves          {', '.join(c['curve_tags'])}")
            lines.append(f"parity          {str(c['parity']).lower()}")
            lines.append("")
    elif cmd == "validate":
        lines.append(f"{payload['signature']}: {'accepted' if payload['accepted'] else 'rejected'}")
        for v in payload["violations"]:
            lines.append(f"  {v['clause']}: {v['message']} [{v['citation']}]")
    else:
        lines.append(json.dumps(payload, indent=2))
    return "\n".join(lines).rstrip() + "\n"


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbibundle", description="Classify S^2-orbifold bundles over closed 2-orbifolds.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[fmt], help="classification report for a base orbifold")
    c.add_argument("signature")
    c.add_argument("--u", help="action literal such as c1=-1,c2=-1,z=+1")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("census", parents=[fmt], help="flat census or bounded hyperbolic census")
    c.add_argument("kind", choices=("flat", "hyperbolic"))
    c.add_argument("--max", type=int, help="complexity bound for the hyperbolic census")
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("cohomology", parents=[fmt], help="H^n(pi; coefficients)")
    c.add_argument("signature")
    c.add_argument("--degree", type=int, choices=(0, 1, 2, 3), required=True)
    c.add_argument("--coeff", choices=("Zu", "F2", "Z"), default="Zu")
    c.add_argument("--u")
    c.set_defaults(func=cmd_cohomology)

    c = sub.add_parser("cover", parents=[fmt], help="kernel double cover of an action")
    c.add_argument("signature")
    c.add_argument("--u")
    c.set_defaults(func=cmd_cover)

    c = sub.add_parser("validate", parents=[fmt], help="check a base orbifold")
    c.add_argument("signature")
    c.set_defaults(func=cmd_validate)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    fmt = getattr(args, "format", "text")

    def emit(payload):
        out.write(json.dumps(payload, indent=2) + "\n" if fmt == "json" else render_text(payload))

    try:
        emit(args.func(args))
        return EXIT_OK
    except ValidationFailed as e:
        payload = e.payload if "command" in e.payload else _envelope(args.command, {"error": str(e), **e.payload})
        if payload.get("command") == "validate":
            emit(payload)
        msg = payload.get("error") or "; ".join(
            f"{v['clause']}: {v['message']} [{v['citation']}]" for v in payload.get("violations", [])
        )
        err.write(f"orbibundle: {msg}\n")
        return EXIT_VALIDATION
    except (UsageError, SignatureSyntaxError, ActionSyntaxError) as e:
        err.write(f"orbibundle: {e}\n")
        return EXIT_USAGE
    except InconsistencyError as e:
        err.write(f"orbibundle: internal inconsistency: {e}\n")
        return EXIT_INTERNAL
    except OrbibundleError as e:
        err.write(f"orbibundle: {e}\n")
        return EXIT_VALIDATION
    except Exception as e:  # pragma: no cover - defensive
        err.write(f"orbibundle: internal error: {e!r}\n")
        return EXIT_INTERNAL


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
