"""Search for a polynomial with nonnegative Hurwitz minors and a right-half-plane root.

Candidates have small integer coefficients and a positive leading term; the
minors are exact, the root check uses numpy eigenvalues with a safety margin.

    python scripts/nonnegative_minors_search.py --seed 0 --tries 20000
"""
import argparse
import random
from dataclasses import dataclass

import numpy as np

from routh_hurwitz.hurwitz import leading_minors
from routh_hurwitz.scalar_poly import Polynomial


@dataclass
class SearchConfig:
    seed: int = 0
    tries: int = 20000
    max_degree: int = 5
    span: int = 3
    margin: float = 1e-3  # required real part of the offending root


def search(cfg: SearchConfig):
    rng = random.Random(cfg.seed)
    for attempt in range(cfg.tries):
        n = rng.randint(2, cfg.max_degree)
        coeffs = [rng.randint(1, cfg.span)] + [rng.randint(0, cfg.span) for _ in range(n)]
        if coeffs[-1] == 0:
            continue
        p = Polynomial(tuple(coeffs))
        minors = leading_minors(p).minors
        if any(m < 0 for m in minors):
            continue
        worst = float(np.max(np.roots(coeffs).real))
        if worst > cfg.margin:
            return attempt, p, minors, worst
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=SearchConfig.seed)
    ap.add_argument("--tries", type=int, default=SearchConfig.tries)
    args = ap.parse_args()
    hit = search(SearchConfig(seed=args.seed, tries=args.tries))
    if hit is None:
        print("no counterexample found")
        return
    attempt, p, minors, worst = hit
    print(f"attempt {attempt}: p = {p}")
    print("minors:", " ".join(str(m) for m in minors))
    print(f"largest root real part: {worst:.6f}")


if __name__ == "__main__":
    main()
