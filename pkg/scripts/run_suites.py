"""Run every identity suite at a chosen size and print a one-line summary per suite.

    python scripts/run_suites.py --trials 200 --seed 1 --max-n 6
"""

import argparse
import json
import sys

from svf.suites import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--json", help="also dump the full report here")
    args = ap.parse_args()

    report = run_suite("all", args.trials, args.seed, args.max_n)
    width = max(map(len, SUITES))
    for sub in report.suites:
        status = "ok" if not sub["failures"] else "FAIL"
        print(f"{sub['suite']:<{width}}  {sub['passes']:>5}/{sub['trials']:<5} {sub['elapsed']:>8.2f}s  {status}")
    print(f"{'total':<{width}}  {report.passes:>5}/{report.trials:<5} {report.elapsed:>8.2f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
