"""Print weight, character and density of gamma, nu and Bohr for a list of groups."""
import argparse
from dataclasses import dataclass, field

from agt.cardinal import CardinalMode, render
from agt.classify import BOHR, GAMMA, NU
from agt.parse import parse_group
from agt.topology import CardinalInvariantKind as K, invariant

DEFAULT_GROUPS = ["Z", "Z^2", "Q", "Z(2^inf)", "Z(2)^(aleph0)", "Z(8)^(c)", "J(2)", "T(2)", "Q + Z(2)", "Z + Z(6)"]


@dataclass
class Config:
    groups: list[str] = field(default_factory=lambda: list(DEFAULT_GROUPS))
    mode: CardinalMode = CardinalMode.ZFC


def run(cfg: Config) -> list[list[str]]:
    rows = []
    for text in cfg.groups:
        g = parse_group(text)
        row = [text]
        for top in (GAMMA, NU, BOHR):
            row += [render(invariant(g, top, k, cfg.mode).value) for k in (K.WEIGHT, K.CHARACTER, K.DENSITY)]
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*", default=DEFAULT_GROUPS)
    ap.add_argument("--mode", choices=["zfc", "gch"], default="zfc")
    args = ap.parse_args()
    rows = run(Config(args.groups, CardinalMode(args.mode)))
    header = ["group"] + [f"{k}({t})" for t in ("gamma", "nu", "bohr") for k in ("w", "chi", "d")]
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    for r in [header] + rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)))


if __name__ == "__main__":
    main()
