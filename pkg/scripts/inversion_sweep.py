"""Sweep the Jacobi inversion sums over a random parameter grid.

Counts passes, failures and pole skips, and times each parameter point.

    python3 scripts/inversion_sweep.py --points 8 --i-max 10 --seed 1
"""

import argparse
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from orthoinvert.exactnum import ZeroDenominator
from orthoinvert.inversion import jacobi_inversion_check


@dataclass
class SweepConfig:
    points: int = 6
    i_max: int = 10
    seed: int = 0
    max_den: int = 7


def random_point(rng: random.Random, max_den: int) -> tuple[Fraction, Fraction]:
    d1, d2 = rng.randint(1, max_den), rng.randint(1, max_den)
    return Fraction(rng.randint(-4 * d1, 4 * d1), d1), Fraction(rng.randint(-4 * d2, 4 * d2), d2)


def sweep(cfg: SweepConfig) -> list[dict]:
    rng = random.Random(cfg.seed)
    rows = []
    for _ in range(cfg.points):
        a, b = random_point(rng, cfg.max_den)
        ok = fail = poles = 0
        t0 = time.perf_counter()
        for i in range(cfg.i_max + 1):
            for j in range(i + 1):
                for variant in ("Delta31", "Monomial37"):
                    try:
                        r = jacobi_inversion_check(i, j, a, b, variant)
                    except ZeroDenominator:
                        poles += 1
                        continue
                    ok += r.passed
                    fail += not r.passed
        rows.append({"alpha": a, "beta": b, "ok": ok, "fail": fail, "poles": poles, "secs": time.perf_counter() - t0})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=SweepConfig.points)
    ap.add_argument("--i-max", type=int, default=SweepConfig.i_max)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    rows = sweep(SweepConfig(args.points, args.i_max, args.seed))
    print(f"{'alpha':>8} {'beta':>8} {'ok':>5} {'fail':>5} {'poles':>5} {'secs':>7}")
    for r in rows:
        print(f"{str(r['alpha']):>8} {str(r['beta']):>8} {r['ok']:>5} {r['fail']:>5} {r['poles']:>5} {r['secs']:>7.3f}")
    if any(r["fail"] for r in rows):
        raise SystemExit(1)


if __name__ == "__main__":
    main()
