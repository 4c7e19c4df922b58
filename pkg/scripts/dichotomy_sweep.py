"""Histogram of csize over random structured groups, flagging values strictly between aleph0 and c."""
import argparse
import random
from collections import Counter
from dataclasses import dataclass

from agt.cardinal import ALEPH0, CONTINUUM, CardinalMode, Ordering, cmp, normalize, render
from agt.parse import render_group
from agt.sampling import random_group
from agt.topology import csize


@dataclass
class Config:
    samples: int = 1000
    seed: int = 0


def run(cfg: Config) -> tuple[Counter, list[str]]:
    rng = random.Random(cfg.seed)
    hist: Counter = Counter()
    gaps = []
    for _ in range(cfg.samples):
        g = random_group(rng)
        value = csize(g)
        hist[render(normalize(value, CardinalMode.GCH))] += 1
        if cmp(ALEPH0, value, CardinalMode.GCH) is Ordering.LT and cmp(value, CONTINUUM, CardinalMode.GCH) is Ordering.LT:
            gaps.append(render_group(g))
    return hist, gaps


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    hist, gaps = run(Config(args.samples, args.seed))
    for value, count in sorted(hist.items(), key=lambda kv: -kv[1]):
        print(f"{count:6}  {value}")
    print(f"groups strictly between aleph0 and c (under GCH): {len(gaps)}")


if __name__ == "__main__":
    main()
