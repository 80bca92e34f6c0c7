"""Exact winding, Routh verdict and an eigenvalue oracle for 32 12 46 21 16 7 1.

Writes the sampled hodograph next to the report.

    python scripts/sixth_degree_curve.py --out curve.svg
"""
import argparse
from dataclasses import dataclass

import numpy as np

from routh_hurwitz.hodograph import emit, sample_curve, winding_increment
from routh_hurwitz.routh import classify, describe
from routh_hurwitz.scalar_poly import Polynomial


@dataclass
class CurveConfig:
    coeffs: tuple = (32, 12, 46, 21, 16, 7, 1)
    points: int = 4000
    out: str = "sixth_degree_curve.svg"
    tol: float = 1e-8


def report(cfg: CurveConfig) -> None:
    p = Polynomial(cfg.coeffs)
    w = winding_increment(p)
    sc = classify(p)
    roots = np.linalg.eigvals(np.polynomial.polynomial.polycompanion(
        [float(c) for c in reversed(cfg.coeffs)]))
    left = int((roots.real < -cfg.tol).sum())
    right = int((roots.real > cfg.tol).sum())
    print(f"p = {p}")
    print(f"exact winding / pi = {w.delta_over_pi}, crossing indices {list(w.crossing_indices)}")
    print(f"routh: {describe(sc)}, h = {' '.join(map(str, sc.outcome.h))}, "
          f"(n_minus, n_plus) = {sc.distribution.counts[:2]}")
    print(f"eigenvalues: (left, right) = ({left}, {right}), "
          f"smallest |Re| = {np.min(np.abs(roots.real)):.3e}")
    for r in sorted(roots, key=lambda z: z.real):
        print(f"  {r.real:+.9f} {r.imag:+.9f}i")
    fmt = "svg" if cfg.out.endswith(".svg") else "csv"
    with open(cfg.out, "w") as fh:
        fh.write(emit(sample_curve(p, cfg.points), fmt))
    print(f"curve written to {cfg.out}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=CurveConfig.out)
    ap.add_argument("--points", type=int, default=CurveConfig.points)
    args = ap.parse_args()
    report(CurveConfig(out=args.out, points=args.points))


if __name__ == "__main__":
    main()
