"""Sweep the Lorenz parameter r and print where the fixed-point verdicts change.

    python scripts/lorenz_sweep.py --sigma 10 --b 8/3 --r-max 40 --steps 400
"""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from routh_hurwitz.lorenz import LorenzParams, analyze, critical_r


@dataclass
class SweepConfig:
    sigma: Fraction = Fraction(10)
    b: Fraction = Fraction(8, 3)
    r_max: Fraction = Fraction(40)
    steps: int = 400


def sweep(cfg: SweepConfig):
    rows = []
    for k in range(1, cfg.steps + 1):
        r = cfg.r_max * k / cfg.steps
        a = analyze(LorenzParams(cfg.sigma, r, cfg.b))
        p12 = a.p12_verdict.kind.value if a.p12_verdict else "-"
        rows.append((r, a.p0_verdict.kind.value, p12))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sigma", type=Fraction, default=SweepConfig.sigma)
    ap.add_argument("--b", type=Fraction, default=SweepConfig.b)
    ap.add_argument("--r-max", type=Fraction, default=SweepConfig.r_max)
    ap.add_argument("--steps", type=int, default=SweepConfig.steps)
    args = ap.parse_args()
    cfg = SweepConfig(args.sigma, args.b, args.r_max, args.steps)
    rs = critical_r(cfg.sigma, cfg.b)
    print(f"sigma = {cfg.sigma}, b = {cfg.b}, r_star = {rs if rs is not None else 'inf'}")
    last = None
    for r, v0, v12 in sweep(cfg):
        if (v0, v12) != last:
            print(f"r = {str(r):>8} ({float(r):8.4f}): origin {v0:<16} nonzero points {v12}")
            last = (v0, v12)
    if rs is not None:
        for r in (rs - Fraction(1, 1000), rs, rs + Fraction(1, 1000)):
            v = analyze(LorenzParams(cfg.sigma, r, cfg.b)).p12_verdict
            print(f"r = {r}: {v.kind.value} {v.distribution.counts}")


if __name__ == "__main__":
    main()
