"""Cut primitives, edge-connectivity and the tight-set families of an orientation.

All cut queries go through :func:`min_cut`, an augmenting-path max flow
on the arc multiset.  Source and sink may be vertex *sets*;
they are joined to a super source/sink by uncapacitated arcs, which is how
"cuts containing X and avoiding Y" are expressed.

For a fixed orientation ``D`` and connectivity level ``k`` (root ``r = 0``):

* ``F_out`` = sets ``X`` avoiding ``r`` with exactly ``k`` leaving arcs, plus ``V``;
* ``F_in``  = the same with entering arcs;
* ``F_min`` = inclusionwise minimal members of ``F_out | F_in``;
* ``val``   = sum of ``n - |X|`` over ``F_min``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import (
    NotKConnected,
    SameVertex,
    TooSmall,
    UnderlyingConnectivityTooLow,
)
from .multigraph import ROOT, Orientation, UndirectedMultigraph, set_key, vertex_set


@dataclass(frozen=True)
class CutResult:
    value: int
    min_source_side: int
    max_source_side: int


def _as_mask(x) -> int:
    if isinstance(x, int):
        return x
    return vertex_set(x)


class FlowNetwork:
    """Residual capacities of an arc multiset, reusable across cut queries.

    Parallel arcs collapse into one capacity.  Augmenting paths come from a
    multi-source BFS over neighbour bitmasks, which on the small vertex
    counts handled here beats a general blocking-flow scheme.
    """

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        self.n = n
        cap = [[0] * n for _ in range(n)]
        for a, b in arcs:
            cap[a][b] += 1
        self.cap0 = cap
        self.out0 = [sum(1 << v for v in range(n) if row[v]) for row in cap]

    def cut(self, sources: int, sinks: int, limit: int | None = None) -> CutResult:
        """Max flow from vertex set ``sources`` to vertex set ``sinks``.

        With ``limit`` set, augmentation stops once the flow reaches it; the
        returned sides are then only meaningful when ``value < limit``.
        """
        if sources & sinks:
            raise SameVertex("source and sink sets overlap")
        n = self.n
        cap = [row[:] for row in self.cap0]
        out = self.out0[:]
        parent = [0] * n
        flow = 0
        while limit is None or flow < limit:
            seen = frontier = sources
            hit = 0
            while frontier and not hit:
                nxt = 0
                while frontier:
                    low = frontier & -frontier
                    frontier ^= low
                    u = low.bit_length() - 1
                    new = out[u] & ~seen
                    if not new:
                        continue
                    seen |= new
                    nxt |= new
                    rest = new
                    while rest:
                        lv = rest & -rest
                        rest ^= lv
                        parent[lv.bit_length() - 1] = u
                    if new & sinks:
                        hit = new & sinks
                        break
                frontier = nxt
            if not hit:
                break
            v = (hit & -hit).bit_length() - 1
            while not (sources >> v) & 1:
                u = parent[v]
                cap[u][v] -= 1
                if not cap[u][v]:
                    out[u] &= ~(1 << v)
                cap[v][u] += 1
                out[v] |= 1 << u
                v = u
            flow += 1

        min_side = frontier = sources
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = out[low.bit_length() - 1] & ~min_side
            min_side |= new
            frontier |= new
        into = [0] * n
        for u in range(n):
            rest = out[u]
            while rest:
                lv = rest & -rest
                rest ^= lv
                into[lv.bit_length() - 1] |= 1 << u
        reach_t = frontier = sinks
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = into[low.bit_length() - 1] & ~reach_t
            reach_t |= new
            frontier |= new
        max_side = ((1 << n) - 1) & ~reach_t
        return CutResult(flow, min_side, max_side)


def _cut(n: int, arcs: Iterable[tuple[int, int]], sources: int, sinks: int,
               limit: int | None = None) -> CutResult:
    return FlowNetwork(n, arcs).cut(sources, sinks, limit)


def min_cut(D: Orientation, sources, sinks, limit: int | None = None) -> CutResult:
    """Minimum number of arcs leaving a set containing ``sources`` and avoiding ``sinks``.

    ``min_source_side``/``max_source_side`` are the inclusionwise minimal and
    maximal such sets attaining the minimum.
    """
    return _cut(D.n, D.arcs(), _as_mask(sources), _as_mask(sinks), limit)


def max_flow(D: Orientation, s: int, t: int) -> CutResult:
    if s == t:
        raise SameVertex(f"s = t = {s}")
    return min_cut(D, 1 << s, 1 << t)


def delta_plus(D: Orientation, X) -> int:
    X = _as_mask(X)
    return sum(1 for a, b in D.arcs() if (X >> a) & 1 and not (X >> b) & 1)


def delta_minus(D: Orientation, X) -> int:
    X = _as_mask(X)
    return sum(1 for a, b in D.arcs() if (X >> b) & 1 and not (X >> a) & 1)


def _lambda_of_arcs(n: int, arcs: list[tuple[int, int]], cap: int | None = None) -> int:
    outdeg = [0] * n
    indeg = [0] * n
    for a, b in arcs:
        outdeg[a] += 1
        indeg[b] += 1
    # singletons are cuts, so the smallest degree bounds every flow from above
    best = min(min(outdeg), min(indeg))
    if cap is not None:
        best = min(best, cap)
    if best == 0:
        return 0
    net = FlowNetwork(n, arcs)
    for v in range(n):
        if v == ROOT:
            continue
        for s, t in ((ROOT, v), (v, ROOT)):
            best = min(best, net.cut(1 << s, 1 << t, best).value)
            if best == 0:
                return 0
    return best


def lambda_directed(D: Orientation) -> int:
    """Edge-connectivity: fewest arcs leaving any nonempty proper vertex set."""
    if D.n < 2:
        raise TooSmall("edge-connectivity needs at least two vertices")
    return _lambda_of_arcs(D.n, D.arcs())


@lru_cache(maxsize=1024)
def lambda_undirected(G: UndirectedMultigraph) -> int:
    if G.n < 2:
        raise TooSmall("edge-connectivity needs at least two vertices")
    arcs = list(G.edges) + [(v, u) for u, v in G.edges]
    return _lambda_of_arcs(G.n, arcs)


def is_k_edge_connected(D: Orientation, k: int) -> bool:
    if k <= 0 or D.n < 2:
        return True
    return _lambda_of_arcs(D.n, D.arcs(), cap=k) >= k


def _require_k_connected(D: Orientation, k: int):
    if not is_k_edge_connected(D, k):
        raise NotKConnected(f"orientation is not {k}-edge-connected")


def x_out(D: Orientation, s: int, k: int) -> int:
    """The unique minimal member of ``F_out`` containing ``s`` (``V`` if none is proper)."""
    full = D.graph.all_vertices
    if s == ROOT:
        return full
    cut = min_cut(D, 1 << s, 1 << ROOT, limit=k + 1)
    if cut.value < k:
        raise NotKConnected(f"only {cut.value} arc-disjoint paths from {s} to the root")
    return cut.min_source_side if cut.value == k else full


def _x_out_all(D: Orientation, k: int) -> list[int]:
    full = D.graph.all_vertices
    net = FlowNetwork(D.n, D.arcs())
    out = [full]
    for s in range(1, D.n):
        cut = net.cut(1 << s, 1 << ROOT, k + 1)
        if cut.value < k:
            raise NotKConnected(f"only {cut.value} arc-disjoint paths from {s} to the root")
        out.append(cut.min_source_side if cut.value == k else full)
    return out


def x_in(D: Orientation, s: int, k: int) -> int:
    """Mirror of :func:`x_out` for entering arcs."""
    return x_out(D.reversed(), s, k)


def minimal_sets(sets: Iterable[int]) -> list[int]:
    """Inclusionwise minimal members, sorted lexicographically."""
    uniq = set(sets)
    out = [X for X in uniq if not any(Y != X and Y & X == Y for Y in uniq)]
    return sorted(out, key=set_key)


def maximal_sets(sets: Iterable[int]) -> list[int]:
    uniq = set(sets)
    out = [X for X in uniq if not any(Y != X and Y & X == X for Y in uniq)]
    return sorted(out, key=set_key)


@dataclass(frozen=True)
class TightFamilies:
    k: int
    r: int
    f_out_min: list[int]
    f_in_min: list[int]
    f_min: list[int]
    val: int

    @property
    def is_trivial(self) -> bool:
        return self.val == 0


def tight_families(D: Orientation, k: int, check_underlying: bool = True,
                   check_connected: bool = True) -> TightFamilies:
    """Minimal members of ``F_out``, ``F_in`` and ``F_min`` together with ``val``.

    The underlying graph must be (2k+2)-edge-connected unless
    ``check_underlying`` is False; the minimal elements are still correct
    without it, but ``F_out`` and ``F_in`` may then share proper sets.
    """
    if check_connected:
        _require_k_connected(D, k)
    G = D.graph
    n = G.n
    if check_underlying and n >= 2 and lambda_undirected(G) < 2 * k + 2:
        raise UnderlyingConnectivityTooLow(
            f"underlying graph is not {2 * k + 2}-edge-connected")
    outs = _x_out_all(D, k)
    ins = _x_out_all(D.reversed(), k)
    f_out_min = minimal_sets(outs)
    f_in_min = minimal_sets(ins)
    f_min = minimal_sets(f_out_min + f_in_min)
    val = sum(n - X.bit_count() for X in f_min)
    return TightFamilies(k, ROOT, f_out_min, f_in_min, f_min, val)


def val(D: Orientation, k: int) -> int:
    return tight_families(D, k, check_underlying=False).val
