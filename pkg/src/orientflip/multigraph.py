"""Undirected multigraphs, their orientations and single edge flips.

Vertex sets are plain ``int`` bitmasks throughout the package: bit ``v`` is
set iff vertex ``v`` belongs to the set.  Orientations store one direction
bit per edge in an ``int`` as well (bit ``e`` clear means edge ``e`` is
oriented as stored, ``(u, v)``; set means ``(v, u)``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    EdgeOutOfRange,
    GraphMismatch,
    NotStronglyConnected,
    SelfLoop,
    VertexOutOfRange,
)

ROOT = 0


# -- vertex sets ------------------------------------------------------------

def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def set_key(mask: int) -> tuple[int, ...]:
    """Sort key giving the lexicographic order on sorted member tuples."""
    return tuple(members(mask))


def lowest_vertex(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# -- graphs -----------------------------------------------------------------

@dataclass(frozen=True)
class UndirectedMultigraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _incident: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        incident = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            incident[u].append(e)
            incident[v].append(e)
        object.__setattr__(self, "_incident", tuple(tuple(x) for x in incident))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def incident(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def cut_size(self, X: int) -> int:
        """Number of edges with exactly one endpoint in ``X``."""
        return sum(1 for u, v in self.edges if ((X >> u) ^ (X >> v)) & 1)

    def is_connected(self, removed: Iterable[int] = ()) -> bool:
        removed = set(removed)
        seen = 1
        stack = [0]
        while stack:
            x = stack.pop()
            for e in self._incident[x]:
                if e in removed:
                    continue
                u, v = self.edges[e]
                y = v if u == x else u
                if not (seen >> y) & 1:
                    seen |= 1 << y
                    stack.append(y)
        return seen == self.all_vertices

    def component_of(self, x: int, removed: Iterable[int] = ()) -> int:
        removed = set(removed)
        seen = 1 << x
        stack = [x]
        while stack:
            a = stack.pop()
            for e in self._incident[a]:
                if e in removed:
                    continue
                u, v = self.edges[e]
                b = v if u == a else u
                if not (seen >> b) & 1:
                    seen |= 1 << b
                    stack.append(b)
        return seen


def build(n: int, edge_list: Iterable[Sequence[int]]) -> UndirectedMultigraph:
    """Build a multigraph on ``n`` vertices; edge ids follow list order."""
    edges = []
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} not in [0, {n})")
        if u == v:
            raise SelfLoop(u)
        edges.append((u, v))
    return UndirectedMultigraph(n, tuple(edges))


def cycle_graph(n: int) -> UndirectedMultigraph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> UndirectedMultigraph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def duplicate(G: UndirectedMultigraph, times: int) -> UndirectedMultigraph:
    """``times``-fold duplication: every edge is repeated, copies stay adjacent in id order."""
    return build(G.n, [e for e in G.edges for _ in range(times)])


def _closure(masks: list[int], start: int, within: int) -> int:
    seen = frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = masks[low.bit_length() - 1] & within & ~seen
        seen |= new
        frontier |= new
    return seen


# -- orientations -----------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    graph: UndirectedMultigraph
    dir: int = 0

    @classmethod
    def from_bits(cls, graph: UndirectedMultigraph, bits: Sequence[int] | str) -> "Orientation":
        if len(bits) != graph.m:
            raise GraphMismatch(f"expected {graph.m} direction bits, got {len(bits)}")
        mask = 0
        for e, b in enumerate(bits):
            if int(b):
                mask |= 1 << e
        return cls(graph, mask)

    @classmethod
    def from_arcs(cls, graph: UndirectedMultigraph, arcs: Sequence[Sequence[int]]) -> "Orientation":
        """Orientation whose arc for edge ``e`` is ``arcs[e]``."""
        if len(arcs) != graph.m:
            raise GraphMismatch(f"expected {graph.m} arcs, got {len(arcs)}")
        mask = 0
        for e, (a, b) in enumerate(arcs):
            u, v = graph.edges[e]
            if (a, b) == (v, u):
                mask |= 1 << e
            elif (a, b) != (u, v):
                raise GraphMismatch(f"arc {(a, b)} does not orient edge {e} = {(u, v)}")
        return cls(graph, mask)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def bits(self) -> str:
        return "".join("1" if (self.dir >> e) & 1 else "0" for e in range(self.m))

    def arc(self, e: int) -> tuple[int, int]:
        u, v = self.graph.edges[e]
        return (v, u) if (self.dir >> e) & 1 else (u, v)

    def tail(self, e: int) -> int:
        return self.arc(e)[0]

    def head(self, e: int) -> int:
        return self.arc(e)[1]

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc(e) for e in range(self.m)]

    def reversed(self) -> "Orientation":
        """The orientation with every arc reversed."""
        return Orientation(self.graph, self.dir ^ ((1 << self.m) - 1))

    def flip(self, e: int) -> "Orientation":
        return flip(self, e)

    def out_arcs(self, x: int) -> list[tuple[int, int]]:
        """``(edge id, head)`` for every arc leaving ``x``, in edge id order."""
        out = []
        for e in self.graph.incident(x):
            a, b = self.arc(e)
            if a == x:
                out.append((e, b))
        return out

    def in_arcs(self, x: int) -> list[tuple[int, int]]:
        """``(edge id, tail)`` for every arc entering ``x``, in edge id order."""
        out = []
        for e in self.graph.incident(x):
            a, b = self.arc(e)
            if b == x:
                out.append((e, a))
        return out

    def neighbour_masks(self, backward: bool = False) -> list[int]:
        """Per vertex, the bitmask of heads of its leaving arcs (tails of entering arcs if ``backward``)."""
        masks = [0] * self.n
        d = self.dir
        for e, (u, v) in enumerate(self.graph.edges):
            if (d >> e) & 1 != backward:
                u, v = v, u
            masks[u] |= 1 << v
        return masks

    def reachable(self, source: int, within: int | None = None, backward: bool = False) -> int:
        """Vertices reachable from ``source`` (or reaching it, if ``backward``) inside ``within``."""
        if within is None:
            within = self.graph.all_vertices
        return _closure(self.neighbour_masks(backward), 1 << source, within)

    def is_strongly_connected(self) -> bool:
        full = self.graph.all_vertices
        return self.reachable(ROOT) == full and self.reachable(ROOT, backward=True) == full

    def __repr__(self):
        return f"Orientation(n={self.n}, bits={self.bits()!r})"


def flip(D: Orientation, e: int) -> Orientation:
    """Reverse the arc of edge ``e``."""
    if not 0 <= e < D.m:
        raise EdgeOutOfRange(f"edge {e} not in [0, {D.m})")
    return Orientation(D.graph, D.dir ^ (1 << e))


def apply_flips(D: Orientation, flips: Iterable[int]) -> Orientation:
    for e in flips:
        D = flip(D, e)
    return D


def diff(D1: Orientation, D2: Orientation) -> set[int]:
    """Edge ids oriented differently in the two orientations."""
    if D1.graph != D2.graph:
        raise GraphMismatch("orientations of different graphs")
    x = D1.dir ^ D2.dir
    return {e for e in range(D1.m) if (x >> e) & 1}


def bfs_path(D: Orientation, source: int, target: int, within: int | None = None):
    """Shortest directed path inside ``within`` as ``(vertices, edge ids)``, or None.

    Parallel arcs resolve to the lowest edge id; ties between equal-length
    paths resolve toward lower vertex ids explored first.
    """
    if within is None:
        within = D.graph.all_vertices
    parent = {source: None}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if x == target:
            break
        for e, y in D.out_arcs(x):
            if (within >> y) & 1 and y not in parent:
                parent[y] = (x, e)
                queue.append(y)
    if target not in parent:
        return None
    verts, edges = [target], []
    x = target
    while parent[x] is not None:
        x, e = parent[x]
        verts.append(x)
        edges.append(e)
    return verts[::-1], edges[::-1]


def _tree_arcs(D: Orientation, r: int, backward: bool) -> set[int]:
    arcs = set()
    seen = 1 << r
    queue = deque([r])
    step = D.in_arcs if backward else D.out_arcs
    while queue:
        x = queue.popleft()
        for e, y in step(x):
            if not (seen >> y) & 1:
                seen |= 1 << y
                arcs.add(e)
                queue.append(y)
    if seen != D.graph.all_vertices:
        raise NotStronglyConnected("reference orientation is not strongly connected")
    return arcs


def strong_skeleton(D_ref: Orientation, r: int = ROOT) -> set[int]:
    """Edge ids of a BFS out-tree plus a BFS in-tree of ``D_ref``, both rooted at ``r``.

    The union is strongly connected and has at most ``2n - 2`` arcs.
    """
    return _tree_arcs(D_ref, r, backward=False) | _tree_arcs(D_ref, r, backward=True)


def strong_orientation(G: UndirectedMultigraph) -> Orientation:
    """A strongly connected orientation of a 2-edge-connected graph.

    DFS from the root: tree edges point away from the root, all other edges
    point back toward the ancestor.
    """
    if G.n == 1:
        return Orientation(G, 0)
    arcs: list[tuple[int, int] | None] = [None] * G.m
    order = {ROOT: 0}
    stack = [(ROOT, iter(G.incident(ROOT)))]
    while stack:
        x, it = stack[-1]
        for e in it:
            if arcs[e] is not None:
                continue
            u, v = G.edges[e]
            y = v if u == x else u
            if y in order:
                arcs[e] = (x, y) if order[y] < order[x] else (y, x)
            else:
                arcs[e] = (x, y)
                order[y] = len(order)
                stack.append((y, iter(G.incident(y))))
            break
        else:
            stack.pop()
    if len(order) != G.n:
        raise NotStronglyConnected("graph is disconnected")
    D = Orientation.from_arcs(G, arcs)
    if not D.is_strongly_connected():
        raise NotStronglyConnected("graph is not 2-edge-connected")
    return D
