#!/usr/bin/env python3
"""Run the full randomised soundness battery and print per-family ratio
statistics.  Exit code 2 if any trial violates its bound.

    python scripts/soundness_sweep.py --trials 1000 --seed 0
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from grusskit.battery import THEOREM_IDS, verify_theorem


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--theorem", default="all")
    args = ap.parse_args()

    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    any_bad = False
    for tid in ids:
        start = time.perf_counter()
        s = verify_theorem(tid, args.trials, args.seed)
        elapsed = time.perf_counter() - start
        flag = "ok " if s.ok else "BAD"
        print(f"{flag} {tid:12s} {elapsed:6.1f}s  "
              f"min={s.min_ratio:.4f} mean={s.mean_ratio:.4f} "
              f"max={s.max_ratio:.4f}  violations={len(s.violations)}")
        if not s.ok:
            any_bad = True
            for v in s.violations[:3]:
                print("    ", v)
    return 2 if any_bad else 0


if __name__ == "__main__":
    sys.exit(main())
