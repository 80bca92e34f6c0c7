"""Run all five root-distribution methods over a constructed corpus.

    python scripts/crosscheck_corpus.py --seed 1 --size 500
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from routh_hurwitz.corpus import corpus
from routh_hurwitz.crosscheck import METHODS, crosscheck


@dataclass
class CorpusConfig:
    seed: int = 1
    size: int = 500
    max_degree: int = 8


def run(cfg: CorpusConfig) -> int:
    start = time.perf_counter()
    notes, used = Counter(), Counter()
    mismatches = []
    for k, item in enumerate(corpus(cfg.seed, cfg.size, cfg.max_degree)):
        cc = crosscheck(item.poly)
        for r in cc.results:
            if r.distribution is not None:
                used[r.method] += 1
            if r.note:
                notes[f"{r.method}: {r.note}"] += 1
        if not cc.agree or cc.applicable[0].distribution.counts != item.counts:
            mismatches.append((k, item))
    elapsed = time.perf_counter() - start
    print(f"{cfg.size} polynomials (seed {cfg.seed}) in {elapsed:.2f}s")
    for m in METHODS:
        print(f"  {m:<8} applicable on {used[m]}")
    for note, count in sorted(notes.items()):
        print(f"  {note}: {count}")
    for k, item in mismatches:
        print(f"  MISMATCH #{k}: {item.poly} expected {item.counts}")
    print("all agree with the construction" if not mismatches else f"{len(mismatches)} mismatches")
    return 1 if mismatches else 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--size", type=int, default=CorpusConfig.size)
    ap.add_argument("--max-degree", type=int, default=CorpusConfig.max_degree)
    args = ap.parse_args()
    raise SystemExit(run(CorpusConfig(args.seed, args.size, args.max_degree)))


if __name__ == "__main__":
    main()
