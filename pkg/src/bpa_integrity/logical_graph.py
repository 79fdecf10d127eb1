"""The logical network of a BPA and its slide degree sequence.

Each declared focal element becomes a node whose degree is its mass. The
empty set is the hub that hands mass out to the other elements: it is always
a node, with degree m(∅) (zero when undeclared). Edges are never
materialized since only the degrees are used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apen import apen
from .evidence import EMPTY, FocalElement, MassFunction

MIN_NODES = 3


class TooFewNodes(ValueError):
    """The BPA network has fewer than three nodes.

    A BPA that assigns nothing, or commits everything to a single element,
    leaves no room for undiscovered elements, so its integrity uncertainty
    is not defined.
    """

    def __init__(self, n_nodes: int, needed: int = MIN_NODES):
        self.n_nodes = n_nodes
        self.needed = needed
        super().__init__(
            f"BPA network has {n_nodes} node(s), at least {needed} are needed; "
            "a BPA that assigns nothing or only one element has no measurable "
            "integrity uncertainty"
        )


@dataclass(frozen=True)
class LogicalDegreeMap:
    entries: tuple[tuple[FocalElement, float], ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def degrees(self) -> list[float]:
        return [d for _, d in self.entries]


def logical_degrees(bpa: MassFunction) -> LogicalDegreeMap:
    entries = list(bpa.assignments)
    if not any(e.is_empty for e, _ in entries):
        entries.append((EMPTY, 0.0))
    return LogicalDegreeMap(tuple(entries))


def slide(bpa: MassFunction) -> tuple[float, ...]:
    """Node degrees of the logical network in non-increasing order."""
    return tuple(sorted(logical_degrees(bpa).degrees, reverse=True))


def node_count(bpa: MassFunction) -> int:
    return len(logical_degrees(bpa))


def slide_apen(bpa: MassFunction, m: int, r: float) -> float:
    seq = slide(bpa)
    if len(seq) < m + 1:
        raise TooFewNodes(len(seq), m + 1)
    return apen(seq, m, r)
