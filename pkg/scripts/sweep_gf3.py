#!/usr/bin/env python3
"""Exhaustive small-field sweeps: decision engines versus the brute oracle.

For a chosen prime p this script sweeps all p^8 ordered pairs of 2x2
matrices over GF(p) and reports how often pair_triangularizable,
is_triangularizable and is_triangularizable_fast agree with the
brute-force conjugation search, followed by a sample of random triples.

Counts are reported, not asserted: the pair/sequence criteria are proved
for characteristic != 2, so running with --p 2 shows where (and whether)
the characteristic-2 boundary actually bites, while --p 3 and --p 5
reproduce the zero-mismatch acceptance results.

Usage:
    python3 scripts/sweep_gf3.py            # p = 3
    python3 scripts/sweep_gf3.py --p 2 --triples 2000
"""

import argparse
import itertools
import random
import time
from dataclasses import dataclass

from matseq import (
    GF,
    MatSeq,
    brute_triangularizable,
    is_triangularizable,
    is_triangularizable_fast,
    mat2,
    pair_triangularizable,
)


@dataclass(frozen=True)
class SweepConfig:
    p: int = 3
    triples: int = 10_000
    seed: int = 0


def sweep_pairs(cfg: SweepConfig) -> dict:
    ring = GF(cfg.p)
    mats = [mat2(ring, [[a, b], [c, d]])
            for a, b, c, d in itertools.product(range(cfg.p), repeat=4)]
    counts = {"pairs": 0, "tri": 0, "pair_vs_oracle": 0,
              "seq_vs_oracle": 0, "fast_vs_oracle": 0}
    for x in mats:
        for y in mats:
            s = MatSeq([x, y])
            oracle = brute_triangularizable(s) is not None
            counts["pairs"] += 1
            counts["tri"] += oracle
            counts["pair_vs_oracle"] += (pair_triangularizable(x, y) != oracle)
            counts["seq_vs_oracle"] += (is_triangularizable(s) != oracle)
            counts["fast_vs_oracle"] += (is_triangularizable_fast(s) != oracle)
    return counts


def sweep_triples(cfg: SweepConfig) -> dict:
    ring = GF(cfg.p)
    rng = random.Random(cfg.seed)
    counts = {"triples": cfg.triples, "tri": 0, "seq_vs_oracle": 0}
    for _ in range(cfg.triples):
        terms = [mat2(ring, [[rng.randrange(cfg.p) for _ in range(2)]
                             for _ in range(2)]) for _ in range(3)]
        s = MatSeq(terms)
        oracle = brute_triangularizable(s) is not None
        counts["tri"] += oracle
        counts["seq_vs_oracle"] += (is_triangularizable(s) != oracle)
    return counts


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3, help="field size (prime)")
    ap.add_argument("--triples", type=int, default=10_000,
                    help="number of random triples (0 to skip)")
    ap.add_argument("--seed", type=int, default=0)
    ns = ap.parse_args()
    cfg = SweepConfig(p=ns.p, triples=ns.triples, seed=ns.seed)

    start = time.monotonic()
    pair_counts = sweep_pairs(cfg)
    print(f"GF({cfg.p}) pairs: {pair_counts['pairs']} total, "
          f"{pair_counts['tri']} triangularizable")
    for key in ("pair_vs_oracle", "seq_vs_oracle", "fast_vs_oracle"):
        print(f"  {key.replace('_', ' ')} mismatches: {pair_counts[key]}")

    if cfg.triples:
        triple_counts = sweep_triples(cfg)
        print(f"GF({cfg.p}) random triples: {triple_counts['triples']} total, "
              f"{triple_counts['tri']} triangularizable")
        print(f"  seq vs oracle mismatches: {triple_counts['seq_vs_oracle']}")
    print(f"done in {time.monotonic() - start:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
