"""Compare the compiled and pure-Python kernels.

Each kernel is run over its whole domain at one size and timed with the
best of a few repeats.  Usage::

    python benchmarks/bench_kernels.py --n 8 --repeat 3
"""

import argparse
import sys
import time

from nonderangements import _kernels, oracle
from nonderangements.invseq import avoiders


def workloads(n):
    seqs = list(avoiders(n))
    nds = oracle.non_derangements(n)
    ders = oracle.derangements(n)
    return {
        "phi": (seqs, lambda k, x: k.phi(x)),
        "phi_inverse": ([_kernels.pure.phi(e) for e in seqs], lambda k, x: k.phi_inverse(x, n)),
        "split": (ders, lambda k, x: k.split(x)),
        "varphi": (nds, lambda k, x: k.varphi(x)),
        "varphi_alt": (nds, lambda k, x: k.varphi_alt(x)),
        "theta": (nds, lambda k, x: _safe(k.theta, x)),
    }


def _safe(fn, x):
    try:
        return fn(x)
    except ValueError:  # the one excluded element
        return None


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = [_kernels.pure] + ([_kernels.compiled] if _kernels.compiled else [])
    if len(backends) == 1:
        print("compiled extension not built; timing the pure backend only", file=sys.stderr)

    print(f"n = {args.n}, best of {args.repeat}")
    print(f"{'kernel':12} {'items':>8} " + " ".join(f"{b.BACKEND:>10}" for b in backends) + "   speedup")
    for name, (items, call) in workloads(args.n).items():
        secs = [best_of(args.repeat, lambda k=k: [call(k, x) for x in items]) for k in backends]
        speed = f"{secs[0] / secs[1]:8.1f}x" if len(secs) == 2 else ""
        print(f"{name:12} {len(items):>8} " + " ".join(f"{s:9.3f}s" for s in secs) + f"  {speed}")


if __name__ == "__main__":
    main()
