"""Brute-force ground truth by enumerating vertex subsets and orientations.

Nothing here calls a flow routine: every cut value comes from a per-graph
table listing, for each vertex subset ``X``, the edges that cross ``X``
with their stored tail inside (``fwd``) or outside (``bwd``).  With the
direction bits ``d`` of an orientation, ``delta_plus(X) =
popcount(fwd & ~d) + popcount(bwd & d)``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .connectivity import TightFamilies, minimal_sets
from .errors import NodeNotFound, TooLarge
from .multigraph import ROOT, Orientation, UndirectedMultigraph, members

DEFAULT_EDGE_CAP = 24
DEFAULT_VERTEX_CAP = 14
DEFAULT_NODE_CAP = 2_000_000


def node_cap_from_env(default: int = DEFAULT_NODE_CAP) -> int:
    value = os.environ.get("ORIENTFLIP_CAP")
    return int(value) if value else default


@dataclass(frozen=True)
class CutTable:
    n: int
    m: int
    fwd: tuple[int, ...]
    bwd: tuple[int, ...]

    def delta_plus(self, X: int, d: int) -> int:
        return (self.fwd[X] & ~d).bit_count() + (self.bwd[X] & d).bit_count()

    def delta_minus(self, X: int, d: int) -> int:
        return (self.fwd[X] & d).bit_count() + (self.bwd[X] & ~d).bit_count()

    def lam(self, d: int) -> int:
        if self.n < 2:
            return 0
        best = self.m
        for X in range(1, (1 << self.n) - 1):
            v = (self.fwd[X] & ~d).bit_count() + (self.bwd[X] & d).bit_count()
            if v < best:
                best = v
                if best == 0:
                    break
        return best

    def lam_batch(self, dirs) -> np.ndarray:
        """``lam`` of every direction word in ``dirs`` at once."""
        d = np.asarray(dirs, dtype=np.uint64)
        if self.n < 2:
            return np.zeros(len(d), dtype=np.int64)
        inv = d ^ np.uint64((1 << self.m) - 1)
        best = np.full(len(d), self.m, dtype=np.int64)
        for X in range(1, (1 << self.n) - 1):
            v = (np.bitwise_count(inv & np.uint64(self.fwd[X]))
                 + np.bitwise_count(d & np.uint64(self.bwd[X])))
            np.minimum(best, v, out=best)
        return best

    def at_least(self, d: int, k: int) -> bool:
        if k <= 0:
            return True
        for X in range(1, (1 << self.n) - 1):
            if (self.fwd[X] & ~d).bit_count() + (self.bwd[X] & d).bit_count() < k:
                return False
        return True


@lru_cache(maxsize=256)
def cut_table(G: UndirectedMultigraph, cap: int = DEFAULT_VERTEX_CAP) -> CutTable:
    if G.n > cap:
        raise TooLarge(f"{G.n} vertices exceeds the subset-enumeration cap {cap}")
    size = 1 << G.n
    fwd = [0] * size
    bwd = [0] * size
    for X in range(size):
        f = b = 0
        for e, (u, v) in enumerate(G.edges):
            inu, inv = (X >> u) & 1, (X >> v) & 1
            if inu and not inv:
                f |= 1 << e
            elif inv and not inu:
                b |= 1 << e
        fwd[X] = f
        bwd[X] = b
    return CutTable(G.n, G.m, tuple(fwd), tuple(bwd))


def lambda_bruteforce(D: Orientation) -> int:
    return cut_table(D.graph).lam(D.dir)


def lambda_undirected_bruteforce(G: UndirectedMultigraph) -> int:
    table = cut_table(G)
    return min(((table.fwd[X] | table.bwd[X]).bit_count()
                for X in range(1, (1 << G.n) - 1)), default=0)


def subset_deltas(D: Orientation) -> tuple[list[int], list[int]]:
    """``delta_plus`` and ``delta_minus`` of every subset, indexed by bitmask."""
    table = cut_table(D.graph)
    d = D.dir
    size = 1 << D.n
    return ([table.delta_plus(X, d) for X in range(size)],
            [table.delta_minus(X, d) for X in range(size)])


# -- orientation enumeration and flip graphs ----------------------------------

def _bit_reverse(codes: np.ndarray, m: int) -> np.ndarray:
    out = np.zeros_like(codes)
    for e in range(m):
        out |= ((codes >> np.uint64(m - 1 - e)) & np.uint64(1)) << np.uint64(e)
    return out


def enumerate_orientations(G: UndirectedMultigraph, k: int, cap: int = DEFAULT_EDGE_CAP
                           ) -> list[Orientation]:
    """Every orientation with edge-connectivity at least ``k``.

    Ordered lexicographically by direction string (edge 0 first).
    """
    if G.m > cap:
        raise TooLarge(f"{G.m} edges exceeds the enumeration cap {cap}")
    table = cut_table(G)
    total = 1 << G.m
    full = np.uint64(total - 1)
    chunk = 1 << 18
    found: list[int] = []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.uint64)
        dirs = _bit_reverse(codes, G.m)
        ok = np.ones(len(dirs), dtype=bool)
        if k > 0 and G.n >= 2:
            inv = dirs ^ full
            for X in range(1, (1 << G.n) - 1):
                fw = np.uint64(table.fwd[X])
                bw = np.uint64(table.bwd[X])
                dplus = np.bitwise_count(inv & fw) + np.bitwise_count(dirs & bw)
                ok &= dplus >= k
        found.extend(int(d) for d in dirs[ok])
    return [Orientation(G, d) for d in found]


@dataclass
class FlipGraph:
    graph: UndirectedMultigraph
    k: int
    nodes: list[Orientation]
    adjacency: list[tuple[int, int]]
    index: dict[int, int] = field(repr=False)
    neighbors: list[list[int]] = field(repr=False)

    def distances(self, source: int) -> list[int | None]:
        dist: list[int | None] = [None] * len(self.nodes)
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.neighbors[x]:
                if dist[y] is None:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def components(self) -> list[list[int]]:
        seen = [False] * len(self.nodes)
        comps = []
        for i in range(len(self.nodes)):
            if seen[i]:
                continue
            comp = [j for j, d in enumerate(self.distances(i)) if d is not None]
            for j in comp:
                seen[j] = True
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        if not self.nodes:
            return False
        return all(d is not None for d in self.distances(0))

    def diameter(self) -> int | None:
        """Largest flip distance, or None when disconnected."""
        best = 0
        for i in range(len(self.nodes)):
            dist = self.distances(i)
            if any(d is None for d in dist):
                return None
            best = max(best, max(dist))
        return best

    def to_dot(self) -> str:
        lines = ["graph flipgraph {"]
        for D in self.nodes:
            lines.append(f'  "{D.bits()}";')
        for i, j in self.adjacency:
            lines.append(f'  "{self.nodes[i].bits()}" -- "{self.nodes[j].bits()}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_flip_graph(G: UndirectedMultigraph, k: int, cap: int = DEFAULT_EDGE_CAP) -> FlipGraph:
    nodes = enumerate_orientations(G, k, cap)
    index = {D.dir: i for i, D in enumerate(nodes)}
    neighbors: list[list[int]] = [[] for _ in nodes]
    adjacency = []
    for i, D in enumerate(nodes):
        for e in range(G.m):
            j = index.get(D.dir ^ (1 << e))
            if j is not None:
                neighbors[i].append(j)
                if i < j:
                    adjacency.append((i, j))
    return FlipGraph(G, k, nodes, adjacency, index, neighbors)


def bfs_distance(FG: FlipGraph, D1: Orientation, D2: Orientation) -> int | None:
    for D in (D1, D2):
        if D.graph != FG.graph or D.dir not in FG.index:
            raise NodeNotFound(f"{D!r} is not a node of the flip graph")
    return FG.distances(FG.index[D1.dir])[FG.index[D2.dir]]


def shortest_flip_path(start: Orientation, goal: Orientation, k: int,
                       cap: int = DEFAULT_NODE_CAP) -> list[int] | None:
    """Edge ids of a shortest flip path through orientations with connectivity >= k.

    Breadth-first without materialising the flip graph.  Returns None when
    ``goal`` is unreachable and raises :class:`TooLarge` after ``cap``
    visited orientations.
    """
    table = cut_table(start.graph)
    m = start.m
    if start.dir == goal.dir:
        return []
    parent = {start.dir: None}
    queue = deque([start.dir])
    while queue:
        d = queue.popleft()
        for e in range(m):
            nd = d ^ (1 << e)
            if nd in parent or not table.at_least(nd, k):
                continue
            parent[nd] = (d, e)
            if nd == goal.dir:
                flips = []
                x = nd
                while parent[x] is not None:
                    x, e2 = parent[x]
                    flips.append(e2)
                return flips[::-1]
            if len(parent) > cap:
                raise TooLarge(f"flip-graph search exceeded {cap} orientations")
            queue.append(nd)
    return None


# -- literal family and safety checks -----------------------------------------

def enumerate_families(D: Orientation, k: int) -> tuple[list[int], list[int]]:
    """All members of ``F_out`` and ``F_in`` (``V`` included), by subset enumeration."""
    plus, minus = subset_deltas(D)
    full = D.graph.all_vertices
    f_out = [X for X in range(1, full + 1) if not (X >> ROOT) & 1 and plus[X] == k]
    f_in = [X for X in range(1, full + 1) if not (X >> ROOT) & 1 and minus[X] == k]
    return f_out + [full], f_in + [full]


def check_families(D: Orientation, k: int, cap: int = DEFAULT_VERTEX_CAP) -> TightFamilies:
    if D.n > cap:
        raise TooLarge(f"{D.n} vertices exceeds the cap {cap}")
    f_out, f_in = enumerate_families(D, k)
    f_out_min = minimal_sets(f_out)
    f_in_min = minimal_sets(f_in)
    f_min = minimal_sets(f_out + f_in)
    val = sum(D.n - X.bit_count() for X in f_min)
    return TightFamilies(k, ROOT, f_out_min, f_in_min, f_min, val)


def _has_member_below(values: list[int], k: int, n: int) -> list[bool]:
    """``below[Y]``: some nonempty ``X' <= Y`` has ``values[X'] == k``."""
    size = 1 << n
    below = [False] * size
    for Y in range(1, size):
        if values[Y] == k:
            below[Y] = True
            continue
        for v in members(Y):
            if below[Y & ~(1 << v)]:
                below[Y] = True
                break
    return below


def check_safety(D: Orientation, S: int, s: int, k: int, kind: str = "source",
                 cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """Whether ``s`` is a safe source (or sink) of ``S``, straight from the definition.

    For every ``X`` avoiding the root with ``s`` in ``X`` and ``S - X`` nonempty:
    the leaving count (entering, for sinks) is at least ``k + 1``, and when it
    equals ``k + 1`` some member of ``F_out`` (``F_in``) lies inside ``X - s``.
    """
    if D.n > cap:
        raise TooLarge(f"{D.n} vertices exceeds the cap {cap}")
    if not (S >> s) & 1:
        return False
    plus, minus = subset_deltas(D)
    if kind == "sink":
        plus, minus = minus, plus
    elif kind != "source":
        raise ValueError(f"unknown kind {kind!r}")
    below = _has_member_below(plus, k, D.n)
    for X in range(1, 1 << D.n):
        if (X >> ROOT) & 1 or not (X >> s) & 1 or not S & ~X:
            continue
        if plus[X] < k + 1:
            return False
        if plus[X] == k + 1 and not below[X & ~(1 << s)]:
            return False
    return True


def audit_flip_path(D: Orientation, path, k: int) -> list[str]:
    """Problems with a case-(a) flip path found by exhaustive family enumeration.

    ``path`` is a :class:`~orientflip.flip_core.FlipPath` built on ``D``
    (for case "b", pass the reversed orientation).  An empty list means all
    three path conditions hold.
    """
    problems = []
    f_out, f_in = enumerate_families(D, k)
    R = path.R
    f_r_out = [X for X in f_out if X & R == X and X != R]
    S, T = path.source.set, path.sink.set
    s, t = path.source.vertex, path.sink.vertex
    if S not in minimal_sets(f_in):
        problems.append("S is not minimal in F_in")
    if T not in minimal_sets(f_out):
        problems.append("T is not minimal in F_out")
    if S & R != S:
        problems.append("S not inside R")
    if T & R != T or T == R:
        problems.append("T not strictly inside R")
    if not check_safety(D, S, s, k, "source"):
        problems.append("s is not a safe source")
    if not check_safety(D, T, t, k, "sink"):
        problems.append("t is not a safe sink")
    if path.vertices[0] != s or path.vertices[-1] != t:
        problems.append("endpoints do not match the safe vertices")
    if len(set(path.vertices)) != len(path.vertices):
        problems.append("path is not simple")
    for i, e in enumerate(path.edges):
        if D.arc(e) != (path.vertices[i], path.vertices[i + 1]):
            problems.append(f"edge {e} is not the arc {path.vertices[i]}->{path.vertices[i + 1]}")
        if not (R >> path.vertices[i + 1]) & 1 or not (R >> path.vertices[i]) & 1:
            problems.append("path leaves R")
    q1_inner = 0
    for v in path.vertices[: path.q1_end]:
        q1_inner |= 1 << v
    if any(X & q1_inner for X in f_r_out):
        problems.append("Q1 meets a member of F^R_out before t'")
    for e in path.edges[path.q1_end:]:
        a, b = D.arc(e)
        if any((X >> a) & 1 and not (X >> b) & 1 for X in f_out):
            problems.append(f"Q2 arc {e} leaves a member of F_out")
    return problems


def path_avoids(D: Orientation, edges, family: list[int], entering: bool = False) -> bool:
    """No arc of ``edges`` leaves (or enters) any set of ``family``."""
    for e in edges:
        a, b = D.arc(e)
        if entering:
            a, b = b, a
        for X in family:
            if (X >> a) & 1 and not (X >> b) & 1:
                return False
    return True


# -- the k = 2 counterexample hunt --------------------------------------------

def hunt_k2_counterexample(graphs, cap: int = 16):
    """First ``(G, D1, D2)`` showing that the 2-edge-cut criterion has no k = 2 analogue.

    ``G`` is 4-edge-connected; ``D1`` is 2-edge-connected with no flip that
    keeps it so; ``D2 != D1`` is 2-edge-connected and agrees with ``D1`` on
    every edge of every 4-edge-cut of ``G``.
    """
    for G in graphs:
        if G.m > cap or G.n < 2 or lambda_undirected_bruteforce(G) < 4:
            continue
        table = cut_table(G)
        on_cuts = 0
        for X in range(1, (1 << G.n) - 1):
            crossing = table.fwd[X] | table.bwd[X]
            if crossing.bit_count() == 4:
                on_cuts |= crossing
        nodes = enumerate_orientations(G, 2, cap)
        for D1 in nodes:
            if any(table.at_least(D1.dir ^ (1 << e), 2) for e in range(G.m)):
                continue
            for D2 in nodes:
                if D2.dir != D1.dir and not (D1.dir ^ D2.dir) & on_cuts:
                    return G, D1, D2
    return None
