"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--large]

Down-set counting is timed on clique supports: in the full clique
(N)-gon the probe {1, 1+a+1} has a*(N-2-a) crossing diagonals.  --large
adds the 25-member support that sits at the oracle's guard; the
pure-Python side is skipped there since it takes minutes.
"""

import argparse
import time

from ptolemy_cc import _pykernels
from ptolemy_cc.diagram import PtolemyDiagram
from ptolemy_cc.oracle import _preds
from ptolemy_cc.polygon import Diagonal, diagonals
from ptolemy_cc.tables import polygon_tables

try:
    from ptolemy_cc import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def clique_relation(N, c):
    d = PtolemyDiagram(N, frozenset(diagonals(N)))
    t = polygon_tables(N)
    sup = t.cross[t.index[c]] & d.mask
    members = [i for i in range(len(t.diags)) if sup >> i & 1]
    preds = _preds(N, c)
    return [sum(1 << k for k, s in enumerate(members) if preds[r] >> s & 1) for r in members]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--large", action="store_true", help="include the 25-member support")
    args = ap.parse_args()
    if _ckernels is None:
        ap.error("compiled kernels not built; run `pip install -e . --no-build-isolation`")

    cases = []
    for N in (7, 8, 9):
        t = polygon_tables(N)
        a = (len(t.diags), t.pair_i, t.pair_j, t.pair_req)
        cases.append((f"enumerate_closed N={N}", lambda k, a=a: k.enumerate_closed(*a), True))
    t = polygon_tables(12)
    seeds = [t.mask([x]) for x in t.diags]
    cases.append(("closure x{} N=12".format(len(seeds)),
                  lambda k: [k.closure(len(t.diags), s, t.pair_i, t.pair_j, t.pair_req)
                             for s in seeds], True))
    probes = [(10, Diagonal(1, 6)), (11, Diagonal(1, 6)), (12, Diagonal(1, 5))]
    if args.large:
        probes.append((12, Diagonal(1, 7)))
    for N, c in probes:
        rel = clique_relation(N, c)
        cases.append((f"count_downsets k={len(rel)}",
                      lambda k, rel=rel: k.count_downsets(rel), len(rel) <= 22))

    print(f"{'case':<28}{'cython (s)':>12}{'python (s)':>12}{'speedup':>10}")
    for name, fn, run_py in cases:
        tc = best_of(lambda: fn(_ckernels), args.repeat)
        if run_py:
            assert fn(_ckernels) == fn(_pykernels), name
            tp = best_of(lambda: fn(_pykernels), args.repeat)
            print(f"{name:<28}{tc:>12.4f}{tp:>12.4f}{tp / tc:>9.1f}x")
        else:
            print(f"{name:<28}{tc:>12.4f}{'skipped':>12}{'':>10}")


if __name__ == "__main__":
    main()
