"""``agt`` command-line front end.

Every command builds a plain dict; the renderer prints it either as JSON or
as ``key: value`` lines.  Exit codes: 0 ok, 1 user error, 2 internal
invariant violation, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .cardinal import CardinalMode, Verdict, is_infinite, render
from .classify import (
    ClassKind,
    GroupClass,
    _LOCAL_CLASSES,
    equalizer,
    is_in_class,
    parse_class,
    parse_topology,
)
from .fg import (
    INFINITE,
    BudgetExceeded,
    FgGroup,
    FgSubgroup,
    enclosing_finite_index,
    enumerate_finite_index,
    parse_matrix,
)
from .finite import DEFAULT_CAP, FiniteGroup, all_subgroups, kernel_fibers, quotient_is_cyclic
from .arith import totient
from .groups import AtomKind, StructuredGroup, invariants as group_invariants, relevant_primes
from .parse import parse_group, render_group
from .topology import CardinalInvariantKind, check_log_bound, csize, invariant
from .verify import SUITES, VerifyConfig, finite_structured, run_suite

EXIT_OK, EXIT_USER, EXIT_INTERNAL, EXIT_MISMATCH = 0, 1, 2, 3
UNKNOWN_TEXT = "unknown (independent of ZFC or an open problem)"


class InvariantViolation(RuntimeError):
    pass


class Mismatch(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("counterexample", "mismatch"))
        self.payload = payload


def verdict_text(v: Verdict) -> str:
    return UNKNOWN_TEXT if v is Verdict.UNKNOWN else v.value


# -- commands ----------------------------------------------------------------------------


def cmd_invariants(args) -> dict:
    g = parse_group(args.expr)
    inv = group_invariants(g)
    mode = CardinalMode(args.mode)
    primes = {}
    for p in relevant_primes(g):
        primes[str(p)] = {
            "rank_p": render(inv.rank_p(p)),
            "quotient_p": render_group(inv.quotient_mod(p)),
            "quotient_p_size": render(inv.quotient_size(p)),
        }
    out = {
        "group": render_group(g),
        "size": render(inv.size),
        "rank0": render(inv.rank0),
        "divisible_part": render_group(inv.divisible_part),
        "torsion_part": render_group(inv.torsion_part),
        "ulm": render_group(inv.ulm),
        "exponent": inv.exponent,
        "primes": primes,
        "csize": render(csize(g)),
        "mode": mode.value,
    }
    if inv.ulm.is_zero and is_infinite(inv.size) and check_log_bound(g, mode) is Verdict.FALSE:
        raise InvariantViolation(f"log |G| <= w(G, nu) fails for {render_group(g)}")
    return out


def _class_names(g: StructuredGroup) -> list[GroupClass]:
    out = []
    for kind in ClassKind:
        if kind in _LOCAL_CLASSES:
            out.extend(GroupClass(kind, p) for p in relevant_primes(g))
        else:
            out.append(GroupClass(kind))
    return out


def cmd_classify(args) -> dict:
    g = parse_group(args.expr)
    classes = [parse_class(args.cls)] if args.cls else _class_names(g)
    return {"group": render_group(g), "classes": {str(c): verdict_text(is_in_class(g, c)) for c in classes}}


def cmd_card(args) -> dict:
    t = parse_topology(args.topology)
    k = CardinalInvariantKind(args.invariant)
    g = parse_group(args.expr)
    res = invariant(g, t, k, CardinalMode(args.mode))
    return {
        "group": render_group(g),
        "topology": str(t),
        "invariant": k.value,
        "value": render(res.value),
        "basis": res.basis,
        "mode": res.mode.value,
    }


def cmd_equalizer(args) -> dict:
    t, s = parse_topology(args.t1), parse_topology(args.t2)
    g = parse_group(args.expr)
    ans = equalizer(t, s, g)
    return {
        "group": render_group(g),
        "pair": [str(t), str(s)],
        "verdict": verdict_text(ans.verdict),
        "rule": ans.rule,
        "note": ans.note,
    }


def _orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"orders must be comma-separated integers, got {text!r}") from None
    return orders


def cmd_finite_subgroups(args) -> dict:
    group = FiniteGroup(_orders(args.orders), cap=args.cap)
    subs = []
    for s in all_subgroups(group):
        entry: dict[str, Any] = {"order": s.order, "index": s.index, "generators": [list(x) for x in s.generators()]}
        if s.order <= 50:
            entry["elements"] = [list(x) for x in s.elements]
        subs.append(entry)
    return {"group": str(group), "count": len(subs), "subgroups": subs}


def cmd_finite_verify(args) -> dict:
    orders = _orders(args.orders)
    group = FiniteGroup(orders, cap=args.cap)
    subs = all_subgroups(group)
    symbolic = render(csize(finite_structured(orders)))
    fibers = kernel_fibers(group)
    out = {"group": str(group), "subgroups": len(subs), "csize": symbolic, "fiber_total": sum(fibers.values())}
    problems = []
    if symbolic != str(len(subs)):
        problems.append(f"csize {symbolic} != {len(subs)} enumerated subgroups")
    if out["fiber_total"] != group.size:
        problems.append(f"kernel fibers sum to {out['fiber_total']}, not {group.size}")
    for s in subs:
        want = totient(s.index) if quotient_is_cyclic(group, s) else 0
        if fibers.get(s.codes, 0) != want:
            problems.append(f"subgroup {s.generators()} has fiber {fibers.get(s.codes, 0)}, expected {want}")
            break
    out["ok"] = not problems
    if problems:
        out["counterexample"] = problems[0]
        raise Mismatch(out)
    return out


def _fg_from_expr(text: str) -> FgGroup:
    g = parse_group(text)
    rank, torsion = 0, []
    for a, m in g:
        if not m.is_finite or a.kind not in (AtomKind.Z, AtomKind.CYC):
            raise ValueError(f"{render_group(g)} is not finitely generated")
        if a.kind is AtomKind.Z:
            rank += m.n
        else:
            torsion.extend([a.order] * m.n)
    return FgGroup(rank, tuple(torsion))


def _subgroup_view(h: FgSubgroup) -> dict:
    idx = h.index()
    return {
        "hnf": [list(r) for r in h.basis],
        "index": "infinite" if idx is INFINITE else idx,
        "free_part": h.free_part,
        "torsion_generators": [list(x) for x in h.torsion_part.generators()],
        "mixing": [list(x) for x in h.mixing_part],
    }


def cmd_fg_count(args) -> dict:
    if args.rank < 0 or args.index < 1:
        raise ValueError("rank must be >= 0 and index >= 1")
    subs = enumerate_finite_index(FgGroup(args.rank), args.index, budget=args.cap * 100)
    return {"group": str(FgGroup(args.rank)), "index": args.index, "count": len(subs)}


def cmd_fg_enclose(args) -> dict:
    group = _fg_from_expr(args.group)
    rows = parse_matrix(args.subgroup)
    if any(len(r) != group.dim for r in rows):
        raise ValueError(f"subgroup rows must have {group.dim} entries")
    h = FgSubgroup.generated(group, rows)
    big = enclosing_finite_index(group, h)
    if not h.is_subgroup_of(big) or big.index() in (1, INFINITE):
        raise InvariantViolation("enclosure is not a proper finite-index overgroup")
    return {"group": str(group), "subgroup": _subgroup_view(h), "enclosure": _subgroup_view(big)}


def cmd_verify(args) -> dict:
    cfg = VerifyConfig(seed=args.seed, cap=args.cap, mode=CardinalMode(args.mode), samples=args.samples)
    r = run_suite(args.suite, cfg)
    out = {"suite": r.name, "checked": r.checked, "ok": r.ok, "seed": cfg.seed, "cap": cfg.cap, "mode": cfg.mode.value}
    if not r.ok:
        out["counterexample"] = r.counterexample
        raise Mismatch(out)
    return out


# -- parser and rendering ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=[m.value for m in CardinalMode], default="zfc")
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--cap", type=int, default=None, help="size cap for brute-force engines")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="agt", description="Abelian groups and their functorial topologies.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="structural invariants of a group")
    p.add_argument("expr")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", parents=[common], help="class memberships")
    p.add_argument("expr")
    p.add_argument("--class", dest="cls")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("card", parents=[common], help="weight, character or density of a topology")
    p.add_argument("expr")
    p.add_argument("--topology", required=True)
    p.add_argument("--invariant", required=True, choices=[k.value for k in CardinalInvariantKind])
    p.set_defaults(func=cmd_card)

    p = sub.add_parser("equalizer", parents=[common], help="do two topologies coincide on a group")
    p.add_argument("t1")
    p.add_argument("t2")
    p.add_argument("expr")
    p.set_defaults(func=cmd_equalizer)

    finite = sub.add_parser("finite", help="brute-force finite groups").add_subparsers(dest="action", required=True)
    p = finite.add_parser("subgroups", parents=[common])
    p.add_argument("orders", help="comma-separated cyclic orders, e.g. 2,2,4")
    p.set_defaults(func=cmd_finite_subgroups)
    p = finite.add_parser("verify", parents=[common])
    p.add_argument("orders")
    p.set_defaults(func=cmd_finite_verify)

    fg = sub.add_parser("fg", help="finitely generated groups").add_subparsers(dest="action", required=True)
    p = fg.add_parser("count", parents=[common])
    p.add_argument("rank", type=int)
    p.add_argument("index", type=int)
    p.set_defaults(func=cmd_fg_count)
    p = fg.add_parser("enclose", parents=[common])
    p.add_argument("group", help='e.g. "Z^2 + Z(3)"')
    p.add_argument("subgroup", help="generator rows, e.g. [[2,0,1]]")
    p.set_defaults(func=cmd_fg_enclose)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def _render_text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if (isinstance(v, dict) and v) or (isinstance(v, list) and any(isinstance(x, dict) for x in v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    return lines


def _scalar(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return str(v).lower()
    return json.dumps(v) if isinstance(v, list) else str(v)


def _emit(payload: dict, as_json: bool, stream) -> None:
    if as_json:
        stream.write(json.dumps(payload) + "\n")
        return
    # single-value commands print just the value
    for key in ("value", "verdict"):
        if key in payload:
            stream.write(f"{payload[key]}\n")
            return
    stream.write("\n".join(_render_text(payload)) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.cap is None:
        args.cap = 200 if args.func is cmd_verify else DEFAULT_CAP
    try:
        payload = args.func(args)
    except Mismatch as exc:
        _emit(exc.payload, args.json, sys.stdout)
        return EXIT_MISMATCH
    except (InvariantViolation, AssertionError) as exc:
        _emit({"error": "internal invariant violated", "detail": str(exc)}, args.json, sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, BudgetExceeded, OverflowError) as exc:
        _emit({"error": str(exc)}, args.json, sys.stderr)
        return EXIT_USER
    _emit(payload, args.json, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
