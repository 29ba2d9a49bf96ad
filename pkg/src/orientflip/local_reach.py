"""Reachability between strongly connected orientations by single flips.

Two strongly connected orientations are joined in the flip graph of
strongly connected orientations exactly when no 2-edge-cut has both of its
edges reversed between them.  When they are joined, flipping the
differing edges greedily, always choosing one that keeps strong
connectivity, gives a shortest sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import GraphMismatch, InternalInvariantViolated, NotStronglyConnected, Obstructed
from .flip_core import FlipSequence
from .connectivity import lambda_directed
from .multigraph import ROOT, Orientation, UndirectedMultigraph, diff, flip


@dataclass(frozen=True)
class Obstruction:
    cut_edges: tuple[int, int]
    side: int


def two_edge_cuts(G: UndirectedMultigraph):
    """Yield ``(e, f, side)`` for every 2-edge-cut ``{e, f}`` of a 2-edge-connected graph.

    ``side`` is the shore containing the root.  Pairs come in lexicographic order.
    """
    yield from _two_edge_cuts(G)


@lru_cache(maxsize=256)
def _two_edge_cuts(G: UndirectedMultigraph) -> tuple[tuple[int, int, int], ...]:
    out = []
    for e, f in combinations(range(G.m), 2):
        side = G.component_of(ROOT, removed=(e, f))
        if side != G.all_vertices:
            out.append((e, f, side))
    return tuple(out)


def find_obstruction(D1: Orientation, D2: Orientation) -> Obstruction | None:
    """The first 2-edge-cut whose two edges are both reversed between ``D1`` and ``D2``."""
    if D1.graph != D2.graph:
        raise GraphMismatch("orientations of different graphs")
    for D in (D1, D2):
        if not D.is_strongly_connected():
            raise NotStronglyConnected("both orientations must be strongly connected")
    changed = D1.dir ^ D2.dir
    if not changed:
        return None
    for e, f, side in _two_edge_cuts(D1.graph):
        if (changed >> e) & 1 and (changed >> f) & 1:
            return Obstruction((e, f), side)
    return None


def reconfigure_strong(D1: Orientation, D2: Orientation) -> FlipSequence:
    """Shortest flip sequence between strongly connected orientations.

    Its length is the number of differing edges.
    """
    obstruction = find_obstruction(D1, D2)
    if obstruction is not None:
        raise Obstructed(obstruction)
    seq = FlipSequence()
    cur = D1
    remaining = sorted(diff(D1, D2))
    while remaining:
        for e in remaining:
            nxt = flip(cur, e)
            if nxt.is_strongly_connected():
                break
        else:
            raise InternalInvariantViolated(f"no differing edge of {remaining} can be flipped")
        remaining.remove(e)
        cur = nxt
        seq.flips.append(e)
        seq.lambdas.append(lambda_directed(cur))
    return seq
