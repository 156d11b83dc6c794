#!/usr/bin/env python3
"""Run the full decision procedure for a range of k and print what the proof
pipeline did: solutions found, branch closures, and the oracle cross-check.

Usage:
    python scripts/reproduce_theorem.py                # k = 0, 1, 2
    python scripts/reproduce_theorem.py --k-max 4 --x-max 1000000
    python scripts/reproduce_theorem.py --replay       # re-run every step
"""

from __future__ import annotations

import argparse
import time
from collections import Counter

from ln_kit.solver import solve


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--x-max", type=int, default=10**7)
    ap.add_argument("--skip-oracle", action="store_true")
    ap.add_argument("--replay", action="store_true", help="replay each trace step")
    args = ap.parse_args()

    for k in range(args.k_max + 1):
        t0 = time.monotonic()
        solutions, trace = solve(
            k, args.n_max, args.x_max, cross_check=not args.skip_oracle
        )
        dt = time.monotonic() - t0
        print(f"== k = {k}  (D = 19^{2*k+1}, n <= {args.n_max}, {dt:.2f}s) ==")
        for s in solutions:
            tag = "n7 family" if s.n == 7 else ("n2 family" if s.n == 2 else "")
            print(f"  x = {s.x}, y = {s.y}, n = {s.n}   {tag}")
        if not solutions:
            print("  (no solutions in range)")
        ops = Counter(step.op for step in trace.steps)
        closed = sum(
            1 for step in trace.steps if step.result.get("outcome") == "contradiction"
        )
        print(f"  proof steps: {len(trace.steps)} ({closed} branch closures)")
        print("  step kinds:", ", ".join(f"{op} x{n}" for op, n in sorted(ops.items())))
        print(f"  oracle cross-check: {'ran, agreed' if trace.oracle_checked else 'skipped'}")
        if args.replay:
            diverged = trace.replay()
            print(f"  replay: {'all steps reproduced' if not diverged else diverged}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
