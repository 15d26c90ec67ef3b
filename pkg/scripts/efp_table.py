"""Tabulate the emptiness formation probability P(m) for one ordered instance.

Both evaluation routes are printed; they must agree exactly.

    python scripts/efp_table.py --n 4 --max-m 4
"""

import argparse
from fractions import Fraction

from svf.efp import EfpParams, efp_components, efp_determinant
from svf.vertex import BoundaryVectors


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--c", default="1")
    args = ap.parse_args()

    vecs = BoundaryVectors((1, Fraction(1, 2)), (1, 0), (2, 1), (Fraction(1, 3), 1))
    c = Fraction(args.c)
    print(f"n={args.n}  c={c}  vectors={vecs.as_dict()}")
    print(f"{'m':>2}  {'P(m) determinant':>28}  {'P(m) components':>28}  {'decimal':>12}")
    for m in range(args.max_m + 1):
        # strictly increasing, spaced so no v_j - v_k + c vanishes
        v = tuple(Fraction(3 * k + 1, 2) for k in range(args.n + m))
        p = EfpParams(args.n, m, v, c, vecs)
        a, b = efp_determinant(p), efp_components(p)
        assert a == b
        print(f"{m:>2}  {str(a):>28}  {str(b):>28}  {float(a):>12.6f}")


if __name__ == "__main__":
    main()
