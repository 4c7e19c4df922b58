"""Count index-m subgroups of Z^n by HNF enumeration and compare with closed forms."""
import argparse
from dataclasses import dataclass

from agt.arith import divisors, sigma
from agt.fg import FgGroup, enumerate_finite_index


@dataclass
class Config:
    rank: int = 3
    max_index: int = 12


def closed_form(rank: int, m: int) -> int | None:
    if rank == 1:
        return 1
    if rank == 2:
        return sigma(m)
    if rank == 3:
        return sum(d * sigma(d) for d in divisors(m))
    return None


def run(cfg: Config) -> list[tuple[int, int, int | None]]:
    g = FgGroup(cfg.rank)
    return [(m, len(enumerate_finite_index(g, m)), closed_form(cfg.rank, m)) for m in range(1, cfg.max_index + 1)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rank", type=int, default=Config.rank)
    ap.add_argument("--max-index", type=int, default=Config.max_index)
    args = ap.parse_args()
    print("m  count  closed-form")
    for m, count, want in run(Config(args.rank, args.max_index)):
        flag = "" if want is None or want == count else "  MISMATCH"
        print(f"{m:<3}{count:<7}{'-' if want is None else want}{flag}")


if __name__ == "__main__":
    main()
