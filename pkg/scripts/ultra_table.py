"""Print the DE coefficients a_i(x) for a symmetric generalized ultraspherical family.

All three synthesis routes are computed and compared before printing.

    python3 scripts/ultra_table.py --alpha 1/2 --a01 0 --i-max 6
"""

import argparse
import time

from orthoinvert.exactnum import rat, rat_str
from orthoinvert.poly import latex
from orthoinvert.ultrade import a0_sequence, closed_form_coeffs, coeffs_via_inversion


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", default="0")
    ap.add_argument("--a01", default="0")
    ap.add_argument("--i-max", type=int, default=6)
    args = ap.parse_args()
    alpha, a01 = rat(args.alpha), rat(args.a01)

    timings = {}
    routes = {}
    for name, fn in [
        ("closed", lambda: closed_form_coeffs(alpha, a01, args.i_max)),
        ("System54", lambda: coeffs_via_inversion(alpha, a01, args.i_max, "System54")),
        ("System52", lambda: coeffs_via_inversion(alpha, a01, args.i_max, "System52")),
    ]:
        t0 = time.perf_counter()
        routes[name] = fn()
        timings[name] = time.perf_counter() - t0
    agree = routes["closed"] == routes["System54"] == routes["System52"]

    a0 = a0_sequence(alpha, a01, args.i_max)
    print(f"alpha = {rat_str(alpha)}, a_0(1) = {rat_str(a01)}")
    print("a_0(n): " + ", ".join(rat_str(a0[n]) for n in sorted(a0)))
    for i, p in routes["closed"].items():
        print(f"a_{i}(x) = {latex(p)}")
    print("routes agree: " + ("yes" if agree else "NO"))
    print("timings: " + ", ".join(f"{k} {v * 1000:.1f} ms" for k, v in timings.items()))
    if not agree:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
