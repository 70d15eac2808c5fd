"""Map where the Jacobi product-formula sum hits Pochhammer poles.

Scans alpha + beta + 1 over a grid of quarter-integers and reports, for each
degree, whether the sum is defined there.

    python3 scripts/pole_map.py --n-max 6
"""

import argparse
from fractions import Fraction

from orthoinvert.exactnum import ZeroDenominator
from orthoinvert.inversion import jacobi_product_formula


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--lo", type=int, default=-12, help="lower end of s = alpha+beta+1, in quarters")
    ap.add_argument("--hi", type=int, default=4)
    args = ap.parse_args()
    print("s = alpha+beta+1   n: " + " ".join(str(n) for n in range(args.n_max + 1)))
    for q in range(args.lo, args.hi + 1):
        s = Fraction(q, 4)
        alpha = s / 2
        beta = s - 1 - alpha
        marks = []
        for n in range(args.n_max + 1):
            try:
                marks.append("." if jacobi_product_formula(n, alpha, beta, Fraction(1, 3)).passed else "F")
            except ZeroDenominator:
                marks.append("x")
        print(f"{str(s):>16}      " + " ".join(marks))
    print("legend: . identity holds, x pole, F failure")


if __name__ == "__main__":
    main()
