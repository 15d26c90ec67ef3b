"""Time every evaluation route over its allowed size range, one CSV per route.

    python scripts/bench_sweep.py --outdir bench_results
"""

import argparse
from pathlib import Path

from svf.cli import BENCH_LIMITS, METHODS, main as svf_main

START = {"triangular": 2, "gdw": 1, "trapezoid": 1, "efp": 1}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="bench_results")
    ap.add_argument("--max-size", type=int, default=None, help="cap every range (quick runs)")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for quantity, limit in BENCH_LIMITS.items():
        hi = limit if args.max_size is None else min(limit, args.max_size)
        for method in METHODS[quantity]:
            # 2^m subsets: keep the subset sum to moderate sizes
            top = min(hi, 10) if method == "subset-sum" else hi
            target = out / f"{quantity}_{method}.csv"
            svf_main(["bench", "--quantity", quantity, "--sizes", f"{START[quantity]}..{top}",
                      "--method", method, "--out", str(target)])
            print(f"wrote {target}")


if __name__ == "__main__":
    main()
