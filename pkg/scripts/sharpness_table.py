#!/usr/bin/env python3
"""Print the extremal-witness table: every registered witness must reach its
expected tightness ratio on the requested interval.

    python scripts/sharpness_table.py --a -3 --b 7
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from grusskit.sharpness import p_branch_constant_estimate, run_catalogue


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=float, default=0.0)
    ap.add_argument("--b", type=float, default=1.0)
    args = ap.parse_args()

    rows = run_catalogue(args.a, args.b)
    print(f"{'id':12s} {'theorem':12s} {'ratio':>22s} {'expected':>9s} pass")
    for wid, tid, ratio, expected, ok in rows:
        print(f"{wid:12s} {tid:12s} {ratio:22.17f} {expected:9.3f} "
              f"{'yes' if ok else 'NO'}")
    print()
    print("norm-branch constant estimates (limit 0.5 as q -> 1+):")
    for q in (2.0, 1.1, 1.01, 1.001):
        print(f"  q={q:<6} estimate={p_branch_constant_estimate(q):.6f}")
    return 0 if all(r[4] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
