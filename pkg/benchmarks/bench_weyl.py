#!/usr/bin/env python3
"""Benchmark the Weyl-engine kernels: numba against the pure-numpy fallback.

The two hot loops are group enumeration (breadth-first closure over
permutations of roots) and conjugacy-class closure.  Both have a numba
implementation and a batched numpy one selected at call time; this script
times them side by side on a ladder of Weyl groups.

    python benchmarks/bench_weyl.py [--types B4,D5,E6] [--repeat 3]

The numba column includes JIT compilation on the first call; run twice or
rely on the on-disk cache for steady-state numbers.  Setting
DLCHAR_NO_NUMBA=1 in the environment makes the library itself use the
numpy path everywhere; here both paths are forced explicitly.
"""

import argparse
import time

from dlchar.weyl import CartanType, ElementStore


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_type(name, repeat):
    ct = CartanType.parse(name)
    row = {"type": name, "order": ct.weyl_order()}
    for impl in ("numba", "numpy"):
        row[f"enum_{impl}"] = best_of(
            lambda: ElementStore(ct, force_impl=impl, keep_perms=True), repeat)
        store = ElementStore(ct, force_impl=impl, keep_perms=True)
        row[f"conj_{impl}"] = best_of(
            lambda: store.conjugacy_class_ids(), repeat)
    return row


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--types", default="B3,A5,B4,D5,A6,E6")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = [t.strip() for t in args.types.split(",") if t.strip()]

    # warm the JIT cache so the numba column shows steady-state times
    ElementStore("A2", force_impl="numba").conjugacy_class_ids()

    header = (f"{'type':>6s} {'|W|':>9s} "
              f"{'enum numba':>12s} {'enum numpy':>12s} "
              f"{'conj numba':>12s} {'conj numpy':>12s}")
    print(header)
    print("-" * len(header))
    for name in names:
        r = bench_type(name, args.repeat)
        print(f"{r['type']:>6s} {r['order']:>9d} "
              f"{r['enum_numba'] * 1e3:>10.1f}ms "
              f"{r['enum_numpy'] * 1e3:>10.1f}ms "
              f"{r['conj_numba'] * 1e3:>10.1f}ms "
              f"{r['conj_numpy'] * 1e3:>10.1f}ms")


if __name__ == "__main__":
    main()
