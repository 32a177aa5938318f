#!/usr/bin/env python3
"""Benchmark the numba-compiled kernels against the plain-Python fallback.

The kernel backend is fixed per process by CHORDLAB_KERNEL, so the parent
re-runs itself as a worker subprocess for each backend and prints a
comparison table.  Workload: the exhaustive all-pairs longest-path sweep,
longest-cycle enumeration, and Hamilton-cycle enumeration over the full
corpus of connected cubic graphs on a given order.

    python3 benchmarks/bench_kernels.py --n 10
"""

import argparse
import json
import os
import subprocess
import sys
import time


def worker(n: int, repeat: int) -> dict:
    from chordlab import kernels
    from chordlab.generate import enumerate_cubic
    from chordlab.search import hamilton_cycles, longest_cycles, longest_xy_paths

    graphs = enumerate_cubic(n)
    t0 = time.perf_counter()
    kernels.warmup()
    warmup_s = time.perf_counter() - t0

    witnesses = 0
    t0 = time.perf_counter()
    for _ in range(repeat):
        witnesses = 0
        for g in graphs:
            for x in range(g.n):
                for y in range(x + 1, g.n):
                    witnesses += len(longest_xy_paths(g, x, y, mode="all").witnesses)
    paths_s = (time.perf_counter() - t0) / repeat

    cycles = 0
    t0 = time.perf_counter()
    for _ in range(repeat):
        cycles = sum(len(longest_cycles(g)) for g in graphs)
    cycles_s = (time.perf_counter() - t0) / repeat

    hams = 0
    t0 = time.perf_counter()
    for _ in range(repeat):
        hams = sum(len(hamilton_cycles(g)) for g in graphs)
    ham_s = (time.perf_counter() - t0) / repeat

    return {
        "backend": kernels.BACKEND,
        "graphs": len(graphs),
        "warmup_s": warmup_s,
        "longest_paths_s": paths_s,
        "longest_cycles_s": cycles_s,
        "hamilton_s": ham_s,
        "witnesses": witnesses,
        "cycles": cycles,
        "hamilton": hams,
    }


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=10, help="corpus order (even, 4..12)")
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.worker:
        print(json.dumps(worker(args.n, args.repeat)))
        return 0

    results = {}
    for backend in ("python", "numba"):
        env = dict(os.environ, CHORDLAB_KERNEL=backend)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__),
             "--worker", "--n", str(args.n), "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True,
        )
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            return 1
        results[backend] = json.loads(proc.stdout)

    py, nb = results["python"], results["numba"]
    for key in ("witnesses", "cycles", "hamilton"):
        if py[key] != nb[key]:
            print(f"MISMATCH on {key}: python={py[key]} numba={nb[key]}")
            return 1

    print(f"corpus: all {py['graphs']} connected cubic graphs on {args.n} vertices")
    print(f"checks agree: {py['witnesses']} longest-path witnesses, "
          f"{py['cycles']} longest cycles, {py['hamilton']} Hamilton cycles")
    print(f"numba JIT warmup: {nb['warmup_s']:.2f}s (cached after first run)\n")
    header = f"{'workload':<28}{'python':>12}{'numba':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, key in (
        ("all-pairs longest paths", "longest_paths_s"),
        ("longest-cycle enumeration", "longest_cycles_s"),
        ("Hamilton-cycle enumeration", "hamilton_s"),
    ):
        ratio = py[key] / nb[key] if nb[key] else float("inf")
        print(f"{label:<28}{py[key]:>11.3f}s{nb[key]:>11.3f}s{ratio:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
