"""Search hyperbolic bases for a bundle whose Wu class is UW and write the first hit as a fixture.

Usage: python3 scripts/find_uw_witness.py [--max N] [--out tests/fixtures/uw_witness.json]
"""
from __future__ import annotations

import argparse
import json
from pathlib import Path

from orbibundle.actions import enumerate_actions
from orbibundle.classification import WuClass, wu_class
from orbibundle.cohomology import restricted_squares
from orbibundle.census import enumerate_bases
from orbibundle.presentation import presentation
from orbibundle.signature import GeometryClass, format_signature


def search(max_complexity: int):
    for sig in enumerate_bases(GeometryClass.HYPERBOLIC, max_complexity):
        if not sig.has_singular_locus:
            continue
        pres = presentation(sig)
        for action in enumerate_actions(pres):
            wu = wu_class(sig, action, pres)
            if WuClass.UW not in wu.labels or wu.ambiguous:
                continue
            sq = restricted_squares(pres, action)
            if not sq.any_nonzero:
                continue
            return {
                "signature": format_signature(sig),
                "action": action.literal(),
                "wu_class": wu.symbol,
                "witness_class": list(sq.witness),
                "generators": list(pres.labels),
                "kernel_relator": sq.surface.format_word(sq.surface.relators[0]),
                "search_bound": max_complexity,
            }
    return None


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=4)
    ap.add_argument("--out", default="tests/fixtures/uw_witness.json")
    args = ap.parse_args()
    hit = search(args.max)
    if hit is None:
        raise SystemExit("no witness found")
    Path(args.out).write_text(json.dumps(hit, indent=2) + "\n")
    print(json.dumps(hit, indent=2))


if __name__ == "__main__":
    main()
