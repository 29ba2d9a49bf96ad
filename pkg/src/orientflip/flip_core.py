"""Edge-flip sequences that raise edge-connectivity without ever lowering it.

The driver :func:`orient_k_connected` turns any orientation of a
2k-edge-connected graph into a k-edge-connected one by single flips whose
edge-connectivity never decreases.  Each phase (:func:`augment_connectivity`)
lifts a k-edge-connected orientation to k+1 by repeated
:func:`improve_step` calls, each of which reverses one carefully chosen
path and strictly lowers the potential ``val`` (see
:mod:`orientflip.connectivity`).

Only case (a) of the path construction is implemented directly: a set
``R`` in ``F_in`` strictly containing a member of ``F_out``.  Case (b) is
case (a) on the fully reversed orientation, since reversal swaps ``F_in``
and ``F_out`` and commutes with flipping any edge.

Ties are broken toward the lowest vertex id and the lexicographically
smallest vertex set everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .connectivity import (
    FlowNetwork,
    TightFamilies,
    delta_minus,
    is_k_edge_connected,
    lambda_directed,
    lambda_undirected,
    maximal_sets,
    minimal_sets,
    tight_families,
)
from .errors import (
    AlreadyTight,
    GraphMismatch,
    InternalInvariantViolated,
    MiddleSearchTooLarge,
    NotAPath,
    NotKConnected,
    NotKPlus1Connected,
    NotMinimalTightSet,
    PreconditionConnectivity,
    TooLarge,
    UnderlyingConnectivityTooLow,
)
from .multigraph import (
    ROOT,
    Orientation,
    bfs_path,
    flip,
    lowest_vertex,
    members,
    set_key,
    strong_orientation,
    strong_skeleton,
)

DEFAULT_MIDDLE_CAP = 2_000_000


class DiPath(NamedTuple):
    vertices: list[int]
    edges: list[int]

    def reversed(self) -> "DiPath":
        return DiPath(self.vertices[::-1], self.edges[::-1])


@dataclass(frozen=True)
class SafeVertex:
    vertex: int
    set: int
    kind: str  # "source" or "sink"


@dataclass(frozen=True)
class FlipPath:
    """An (s, t)-path split at ``vertices[q1_end]`` into Q1 and Q2."""

    vertices: list[int]
    q1_end: int
    edges: list[int]
    source: SafeVertex
    sink: SafeVertex
    R: int
    case: str = "a"

    @property
    def q1(self) -> DiPath:
        return DiPath(self.vertices[: self.q1_end + 1], self.edges[: self.q1_end])

    @property
    def q2(self) -> DiPath:
        return DiPath(self.vertices[self.q1_end:], self.edges[self.q1_end:])


@dataclass
class FlipSequence:
    """Flips in order with ``lambdas[i]`` the edge-connectivity after flip ``i``.

    ``vals`` holds the potential before the first and after every improve
    step, when the producer tracks it.
    """

    flips: list[int] = field(default_factory=list)
    lambdas: list[int] = field(default_factory=list)
    vals: list[int] = field(default_factory=list)

    def __len__(self):
        return len(self.flips)

    def extend(self, other: "FlipSequence"):
        self.flips.extend(other.flips)
        self.lambdas.extend(other.lambdas)
        self.vals.extend(other.vals)


# -- cached cut queries on one orientation ----------------------------------

class _Cuts:
    """Lazily cached ``x_out``/``x_in`` for a fixed orientation and level."""

    def __init__(self, D: Orientation, k: int):
        self.D = D
        self.k = k
        self.n = D.n
        self.full = D.graph.all_vertices
        self.net = FlowNetwork(D.n, D.arcs())
        self._xo: dict[int, int] = {}

    def x_out(self, s: int) -> int:
        if s not in self._xo:
            if s == ROOT:
                self._xo[s] = self.full
            else:
                cut = self.net.cut(1 << s, 1 << ROOT, self.k + 1)
                if cut.value < self.k:
                    raise NotKConnected(f"orientation is not {self.k}-edge-connected")
                self._xo[s] = cut.min_source_side if cut.value == self.k else self.full
        return self._xo[s]

    def f_out_min(self) -> list[int]:
        return minimal_sets(self.x_out(s) for s in range(self.n))

    def cut(self, sources: int, sinks: int, limit: int):
        return self.net.cut(sources, sinks, limit)


# -- safe sources and sinks -------------------------------------------------

def _is_minimal_in_f_in(D: Orientation, S: int, k: int) -> bool:
    Dr = D.reversed()
    cuts = _Cuts(Dr, k)
    if S != D.graph.all_vertices:
        if (S >> ROOT) & 1 or not S:
            return False
        if delta_minus(D, S) != k:
            return False
    return all(cuts.x_out(s) == S for s in members(S))


def _safe_source_unchecked(D: Orientation, S: int, k: int) -> int:
    full = D.graph.all_vertices
    if S == full:
        return ROOT
    net = FlowNetwork(D.n, D.arcs())
    outside = full & ~S
    ys = []
    for v in members(S):
        cut = net.cut(1 << v, outside, k + 1)
        if cut.value == k:
            ys.append(cut.max_source_side)
    covered = 0
    for Y in maximal_sets(ys):
        covered |= Y
    rest = S & ~covered
    zs = []
    for v in members(rest):
        cut = net.cut(1 << v, full & ~rest, k + 2)
        if cut.value == k + 1:
            zs.append(cut.max_source_side)
    for Z in maximal_sets(zs):
        covered |= Z
    candidates = S & ~covered
    if not candidates:
        raise InternalInvariantViolated("no vertex left outside the maximal Y and Z sets")
    return lowest_vertex(candidates)


def safe_source(D: Orientation, S: int, k: int, validate: bool = True) -> int:
    """A safe source of ``S``, an inclusionwise minimal member of ``F_in``.

    The vertex returned avoids every maximal proper subset of ``S`` with
    exactly ``k`` leaving arcs and every maximal set of the remainder with
    exactly ``k + 1`` leaving arcs.  ``S = V`` yields the root.
    """
    if validate:
        if k < 1:
            raise PreconditionConnectivity("safe vertices need k >= 1")
        if lambda_undirected(D.graph) < 2 * k + 2:
            raise PreconditionConnectivity(f"underlying graph is not {2 * k + 2}-edge-connected")
        if not is_k_edge_connected(D, k):
            raise NotKConnected(f"orientation is not {k}-edge-connected")
        if not _is_minimal_in_f_in(D, S, k):
            raise NotMinimalTightSet(f"{members(S)} is not a minimal member of F_in")
    return _safe_source_unchecked(D, S, k)


def safe_sink(D: Orientation, T: int, k: int, validate: bool = True) -> int:
    """Mirror of :func:`safe_source` for a minimal member of ``F_out``."""
    return safe_source(D.reversed(), T, k, validate)


# -- paths avoiding tight cuts ----------------------------------------------

def _path_to_minimal_out(cuts: _Cuts, s: int) -> tuple[int, dict[int, DiPath]]:
    D = cuts.D
    verts, edges = [s], []
    cur = s
    for _ in range(D.n + 1):
        X = cuts.x_out(cur)
        smaller = [u for u in members(X) if cuts.x_out(u) != X]
        if not smaller:
            break
        found = bfs_path(D, cur, smaller[0], within=X)
        if found is None:
            raise InternalInvariantViolated(f"no path inside x_out({cur})")
        qv, qe = found
        for idx, w in enumerate(qv):
            if cuts.x_out(w) != X:
                break
        verts.extend(qv[1: idx + 1])
        edges.extend(qe[:idx])
        cur = qv[idx]
    else:
        raise InternalInvariantViolated("x_out descent did not terminate")
    T = cuts.x_out(cur)
    paths = {}
    for t in members(T):
        found = bfs_path(D, cur, t, within=T)
        if found is None:
            raise InternalInvariantViolated(f"no path inside minimal set to {t}")
        paths[t] = DiPath(verts + found[0][1:], edges + found[1])
    return T, paths


def path_to_minimal_out(D: Orientation, s: int, k: int) -> tuple[int, dict[int, DiPath]]:
    """A minimal ``T`` in ``F_out`` with, for each ``t`` in ``T``, an (s, t)-path
    that uses no arc leaving any member of ``F_out``.
    """
    if k < 1 or not is_k_edge_connected(D, k):
        raise NotKConnected(f"orientation is not {k}-edge-connected (k >= 1 required)")
    return _path_to_minimal_out(_Cuts(D, k), s)


def path_from_minimal_in(D: Orientation, t: int, k: int) -> tuple[int, dict[int, DiPath]]:
    """A minimal ``S`` in ``F_in`` with, for each ``s`` in ``S``, an (s, t)-path
    that uses no arc entering any member of ``F_in``.
    """
    S, paths = path_to_minimal_out(D.reversed(), t, k)
    return S, {s: p.reversed() for s, p in paths.items()}


# -- one improve step ---------------------------------------------------------

def choose_r_set(D: Orientation, k: int) -> tuple[int, str]:
    """The smallest set ``R`` such that (a) ``R`` is in ``F_in`` and strictly
    contains a member of ``F_out``, or (b) the same with the roles swapped.
    """
    full = D.graph.all_vertices
    out_cuts = _Cuts(D, k)
    in_cuts = _Cuts(D.reversed(), k)
    f_out_min = out_cuts.f_out_min()
    f_in_min = in_cuts.f_out_min()
    if f_out_min == [full] and f_in_min == [full]:
        raise AlreadyTight(f"orientation is already {k + 1}-edge-connected")
    candidates = []
    for X in f_out_min:
        if X == full:
            continue
        # smallest superset of X avoiding the root with k entering arcs
        cut = out_cuts.cut(1 << ROOT, X, k + 1)
        R = full & ~cut.max_source_side if cut.value == k else full
        candidates.append((R.bit_count(), set_key(R), "a", R))
    for X in f_in_min:
        if X == full:
            continue
        cut = out_cuts.cut(X, 1 << ROOT, k + 1)
        R = cut.min_source_side if cut.value == k else full
        candidates.append((R.bit_count(), set_key(R), "b", R))
    best = min(candidates)
    return best[3], best[2]


def _build_flip_path_a(D: Orientation, R: int, k: int) -> FlipPath:
    full = D.graph.all_vertices
    cuts = _Cuts(D, k)
    in_cuts = _Cuts(D.reversed(), k)
    blocked = (full & ~R) | (1 << ROOT)
    member_memo: dict[int, bool] = {}

    def in_some_f_r_out(x):
        if x not in member_memo:
            member_memo[x] = x != ROOT and cuts.cut(1 << x, blocked, k + 1).value == k
        return member_memo[x]

    t_star = next((x for x in members(R) if in_some_f_r_out(x)), None)
    if t_star is None:
        raise InternalInvariantViolated("F^R_out is empty")
    S, rev_paths = _path_to_minimal_out(in_cuts, t_star)
    s = _safe_source_unchecked(D, S, k)
    Ps = rev_paths[s].reversed()
    idx = next(i for i, x in enumerate(Ps.vertices) if in_some_f_r_out(x))
    t_prime = Ps.vertices[idx]
    T, q2_paths = _path_to_minimal_out(cuts, t_prime)
    t = _safe_source_unchecked(D.reversed(), T, k)
    Q2 = q2_paths[t]
    vertices = Ps.vertices[: idx + 1] + Q2.vertices[1:]
    edges = Ps.edges[:idx] + Q2.edges
    if len(set(vertices)) != len(vertices):
        raise InternalInvariantViolated(f"spliced path {vertices} repeats a vertex")
    return FlipPath(vertices, idx, edges, SafeVertex(s, S, "source"), SafeVertex(t, T, "sink"), R, "a")


def build_flip_path(D: Orientation, R: int, k: int, case: str = "a") -> FlipPath:
    """The path from a safe source to a safe sink whose reversal improves ``D``.

    For case "b" the path is built in the reversed orientation, so it runs
    from the safe sink to the safe source of ``D``; flipping its arcs from
    the ``t`` end is still the right order.
    """
    if case == "a":
        return _build_flip_path_a(D, R, k)
    if case == "b":
        path = _build_flip_path_a(D.reversed(), R, k)
        return FlipPath(path.vertices, path.q1_end, path.edges, path.source, path.sink, R, "b")
    raise ValueError(f"unknown case {case!r}")


def plan_improve_step(D: Orientation, k: int) -> FlipPath:
    R, case = choose_r_set(D, k)
    return build_flip_path(D, R, k, case)


def _improve_step(D: Orientation, k: int, families: TightFamilies
                  ) -> tuple[FlipSequence, Orientation, TightFamilies]:
    if families.val == 0:
        raise AlreadyTight(f"orientation is already {k + 1}-edge-connected")
    path = plan_improve_step(D, k)
    seq = FlipSequence(vals=[families.val])
    cur = D
    for e in reversed(path.edges):
        cur = flip(cur, e)
        lam = lambda_directed(cur)
        if lam < k:
            raise InternalInvariantViolated(f"flip of edge {e} dropped connectivity to {lam}")
        seq.flips.append(e)
        seq.lambdas.append(lam)
    if len(seq.flips) > D.n:
        raise InternalInvariantViolated("improve step longer than |V|")
    after = tight_families(cur, k, check_underlying=False, check_connected=False)
    if after.val >= families.val:
        raise InternalInvariantViolated(f"val did not decrease ({families.val} -> {after.val})")
    seq.vals.append(after.val)
    return seq, cur, after


def improve_step(D: Orientation, k: int, families: TightFamilies | None = None
                 ) -> tuple[FlipSequence, Orientation]:
    """Reverse one planned path arc by arc, starting at the sink end.

    Every intermediate stays k-edge-connected and ``val`` strictly drops.
    """
    if families is None:
        families = tight_families(D, k)
    seq, cur, _ = _improve_step(D, k, families)
    return seq, cur


# -- phases and the driver ----------------------------------------------------

def _record(D: Orientation, flips) -> tuple[FlipSequence, Orientation]:
    seq = FlipSequence()
    for e in flips:
        D = flip(D, e)
        seq.flips.append(e)
        seq.lambdas.append(lambda_directed(D))
    return seq, D


def augment_connectivity(D: Orientation, k: int) -> tuple[FlipSequence, Orientation]:
    """Flips taking a k-edge-connected ``D`` to a (k+1)-edge-connected orientation,
    every intermediate staying k-edge-connected.  Needs a (2k+2)-edge-connected graph.
    """
    G = D.graph
    if lambda_undirected(G) < 2 * k + 2:
        raise UnderlyingConnectivityTooLow(f"underlying graph is not {2 * k + 2}-edge-connected")
    lam = lambda_directed(D)
    if lam < k:
        raise NotKConnected(f"orientation has edge-connectivity {lam} < {k}")
    if lam >= k + 1:
        return FlipSequence(), D
    if k == 0:
        ref = strong_orientation(G)
        skeleton = strong_skeleton(ref)
        differ = sorted(e for e in skeleton if ((D.dir ^ ref.dir) >> e) & 1)
        return _record(D, differ)
    seq = FlipSequence()
    cur = D
    families = tight_families(cur, k, check_underlying=False, check_connected=False)
    seq.vals.append(families.val)
    for _ in range(D.n ** 2):
        if families.val == 0:
            break
        step, cur, families = _improve_step(cur, k, families)
        seq.flips.extend(step.flips)
        seq.lambdas.extend(step.lambdas)
        seq.vals.append(families.val)
    else:
        if families.val:
            raise InternalInvariantViolated("val did not reach 0 within |V|^2 improve steps")
    if seq.lambdas and seq.lambdas[-1] < k + 1:
        raise InternalInvariantViolated("final orientation is not (k+1)-edge-connected")
    return seq, cur


def orient_k_connected(D: Orientation, k: int) -> tuple[FlipSequence, Orientation]:
    """Flips with non-decreasing edge-connectivity ending at exactly ``k``.

    The graph must be 2k-edge-connected.  Each phase lifts the current level
    ``p`` to ``p + 1`` and is cut right after the first flip reaching it, so
    inside phase ``p`` every intermediate has edge-connectivity exactly ``p``.
    """
    if k <= 0:
        return FlipSequence(), D
    if lambda_undirected(D.graph) < 2 * k:
        raise UnderlyingConnectivityTooLow(f"underlying graph is not {2 * k}-edge-connected")
    p = lambda_directed(D)
    seq = FlipSequence()
    cur = D
    while p < k:
        phase, _ = augment_connectivity(cur, p)
        cut = next((i for i, lam in enumerate(phase.lambdas) if lam >= p + 1), None)
        if cut is None:
            raise InternalInvariantViolated(f"phase {p} never reached {p + 1}")
        for e in phase.flips[: cut + 1]:
            cur = flip(cur, e)
        seq.flips.extend(phase.flips[: cut + 1])
        seq.lambdas.extend(phase.lambdas[: cut + 1])
        seq.vals.extend(phase.vals)
        if phase.lambdas[cut] != p + 1:
            raise InternalInvariantViolated("one flip raised connectivity by more than one")
        p += 1
    return seq, cur


# -- path/cycle flips ---------------------------------------------------------

def _check_directed_walk(D: Orientation, path_edges) -> list[int]:
    for e in path_edges:
        if not 0 <= e < D.m:
            raise NotAPath(f"edge {e} out of range")
    if len(set(path_edges)) != len(path_edges):
        raise NotAPath("edge repeated")
    verts = [D.tail(path_edges[0])]
    for e in path_edges:
        a, b = D.arc(e)
        if a != verts[-1]:
            raise NotAPath(f"arc {e} = {(a, b)} does not continue from {verts[-1]}")
        verts.append(b)
    inner = verts[:-1] if verts[0] == verts[-1] else verts
    if len(set(inner)) != len(inner):
        raise NotAPath("vertex repeated")
    return verts


def decompose_path_flip(D: Orientation, path_edges, k: int) -> FlipSequence:
    """Reverse a directed path or cycle one arc at a time in traversal order.

    Starting from a (k+1)-edge-connected orientation, no intermediate drops
    below k.
    """
    path_edges = list(path_edges)
    if not path_edges:
        return FlipSequence()
    _check_directed_walk(D, path_edges)
    if not is_k_edge_connected(D, k + 1):
        raise NotKPlus1Connected(f"orientation is not {k + 1}-edge-connected")
    seq, _ = _record(D, path_edges)
    bad = [lam for lam in seq.lambdas if lam < k]
    if bad:
        raise InternalInvariantViolated(f"intermediate connectivity {bad[0]} < {k}")
    return seq


# -- reconfiguration between two k-edge-connected orientations -----------------

def reconfigure_k(D1: Orientation, D2: Orientation, k: int,
                  cap: int = DEFAULT_MIDDLE_CAP) -> FlipSequence:
    """Flips from ``D1`` to ``D2`` keeping every intermediate k-edge-connected.

    Both ends are first lifted to k+1 by :func:`augment_connectivity`; the
    two lifted orientations are joined by breadth-first search over
    k-edge-connected orientations, visiting at most ``cap`` of them.
    """
    from .oracle import shortest_flip_path

    if D1.graph != D2.graph:
        raise GraphMismatch("orientations of different graphs")
    if D1 == D2:
        return FlipSequence()
    if lambda_undirected(D1.graph) < 2 * k + 2:
        raise UnderlyingConnectivityTooLow(f"underlying graph is not {2 * k + 2}-edge-connected")
    for D in (D1, D2):
        if not is_k_edge_connected(D, k):
            raise NotKConnected(f"an endpoint is not {k}-edge-connected")
    up1, E1 = augment_connectivity(D1, k)
    up2, E2 = augment_connectivity(D2, k)
    try:
        middle = shortest_flip_path(E1, E2, k, cap=cap)
    except TooLarge as exc:
        raise MiddleSearchTooLarge(
            str(exc), partial={"start": E1, "goal": E2, "head": up1, "tail": up2}) from exc
    if middle is None:
        raise InternalInvariantViolated("lifted endpoints are disconnected in the flip graph")
    seq, end = _record(D1, up1.flips + middle + up2.flips[::-1])
    if end != D2:
        raise InternalInvariantViolated("replayed sequence does not end at the target")
    if any(lam < k for lam in seq.lambdas):
        raise InternalInvariantViolated("an intermediate dropped below k")
    return seq
