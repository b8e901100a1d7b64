"""Compare the compiled and pure-Python Smith normal form kernels.

Usage: python3 benchmarks/bench_snf.py [--sizes 4 8 16 24] [--repeat 5]

The "corpus" row replays matrices recorded from cohomology computations on
small bases; the synthetic rows show where the 64-bit kernel overflows and
falls back to arbitrary precision.
"""
import argparse
import random
import timeit

from orbibundle.linalg import smith as smith_mod
from orbibundle.linalg import smith_normal_form


def random_matrix(rng, n, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def fox_like_matrix(rng, n):
    """Sparse +-1/2 entries, the shape of presentation Jacobians."""
    return [[rng.choice((0, 0, 0, 1, -1, 2)) for _ in range(n)] for _ in range(n)]


def corpus_matrices(limit):
    """Matrices passed to the SNF kernel by the mapping-cone cohomology of small bases."""
    from orbibundle.cohomology import decompose, mv_cohomology, twisted_z
    from orbibundle.actions import enumerate_actions
    from orbibundle.census import enumerate_bases
    from orbibundle.presentation import presentation
    from orbibundle.signature import GeometryClass

    seen = []
    orig = smith_mod._run

    def record(a, m, n, backend):
        seen.append(a)
        return orig(a, m, n, backend)

    smith_mod._run = record
    try:
        for geom in (GeometryClass.EUCLIDEAN, GeometryClass.HYPERBOLIC):
            for sig in enumerate_bases(geom, 5):
                if not sig.has_singular_locus:
                    continue
                p = presentation(sig)
                for u in enumerate_actions(p):
                    mv_cohomology(decompose(sig, p), twisted_z(u), 2)
                if len(seen) >= limit:
                    return seen[:limit]
    finally:
        smith_mod._run = orig
    return seen


def overflow_rate(mats):
    if smith_mod._smith_core is None:
        return float("nan")
    bad = 0
    for m in mats:
        try:
            smith_mod._smith_core.smith(m, len(m), len(m[0]))
        except OverflowError:
            bad += 1
    return bad / len(mats)


def time_backends(mats, backends, repeat):
    out = {}
    for b in backends:
        t = timeit.repeat(lambda: [smith_normal_form(m, backend=b) for m in mats], number=1, repeat=repeat)
        out[b] = min(t) / len(mats) * 1e3
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 16, 24])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--corpus", type=int, default=2000, help="number of recorded cohomology matrices")
    args = ap.parse_args()

    if smith_mod._smith_core is None:
        print("compiled kernel not built; only the python backend is available")
    backends = ["python"] + (["compiled"] if smith_mod._smith_core is not None else [])
    rng = random.Random(args.seed)
    header = f"{'kind':<8} {'n':>4} " + " ".join(f"{b + ' ms':>12}" for b in backends)
    print(header + f" {'speedup':>8} {'fallback':>9}")

    def row(kind, n, mats):
        times = time_backends(mats, backends, args.repeat)
        if "compiled" in times:
            for m in mats:
                assert smith_normal_form(m, backend="compiled").S == smith_normal_form(m, backend="python").S
        speed = times["python"] / times["compiled"] if "compiled" in times else float("nan")
        cells = " ".join(f"{times[b]:>12.3f}" for b in backends)
        print(f"{kind:<8} {n:>4} {cells} {speed:>8.1f} {overflow_rate(mats):>8.0%}")

    mats = corpus_matrices(args.corpus)
    row("corpus", max(max(len(m), len(m[0]) if m else 0) for m in mats), mats)
    for kind, gen in (("dense", random_matrix), ("fox", fox_like_matrix)):
        for n in args.sizes:
            row(kind, n, [gen(rng, n) for _ in range(10)])


if __name__ == "__main__":
    main()
