"""Abelian groups, their functorial topologies, and exact cardinal invariants."""

from .cardinal import CardinalMode, Ordering, Verdict, cmp, parse_cardinal, render
from .classify import equalizer_member, is_in_class, parse_class, parse_topology
from .groups import StructuredGroup, invariants
from .parse import parse_group, render_group
from .topology import CardinalInvariantKind, csize, csize_p, invariant

__all__ = [
    "CardinalInvariantKind",
    "CardinalMode",
    "Ordering",
    "StructuredGroup",
    "Verdict",
    "cmp",
    "csize",
    "csize_p",
    "equalizer_member",
    "invariant",
    "invariants",
    "is_in_class",
    "parse_cardinal",
    "parse_class",
    "parse_group",
    "parse_topology",
    "render",
    "render_group",
]
