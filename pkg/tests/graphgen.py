"""Deterministic test-graph families: cycles, complete graphs, duplications, random multigraphs."""

import itertools
import random

from orientflip.multigraph import build, complete_graph, cycle_graph, duplicate


def canonical_form(G):
    best = None
    for perm in itertools.permutations(range(G.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in G.edges))
        if best is None or key < best:
            best = key
    return G.n, best


def structured_graphs(max_n=6, max_m=12):
    out = []
    for n in range(3, max_n + 1):
        for base in (cycle_graph(n), complete_graph(n)):
            for times in range(1, 5):
                G = duplicate(base, times)
                if G.m <= max_m:
                    out.append(G)
    for times in range(1, max_m + 1):
        out.append(build(2, [(0, 1)] * times))
    return out


def random_multigraph(rng, n, m):
    """Connected multigraph: a random spanning tree plus uniformly random extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    while len(edges) < m:
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    rng.shuffle(edges)
    return build(n, edges)


def random_graphs(n, count=200, max_m=12, seed=0):
    rng = random.Random(seed * 1000 + n)
    out = []
    for _ in range(count):
        m = rng.randint(max(n - 1, 1), max_m)
        out.append(random_multigraph(rng, n, m))
    return out


def graph_corpus(max_n=6, max_m=12, per_size=200, seed=0, min_n=2):
    """Structured graphs plus ``per_size`` random ones per vertex count, isomorphs removed."""
    seen = set()
    out = []
    candidates = structured_graphs(max_n, max_m)
    for n in range(min_n, max_n + 1):
        candidates += random_graphs(n, per_size, max_m, seed)
    for G in candidates:
        if G.n < min_n or G.n > max_n or G.m > max_m:
            continue
        key = canonical_form(G)
        if key not in seen:
            seen.add(key)
            out.append(G)
    return out


def simple_graphs(max_n=5, min_lambda=0):
    """Every simple connected graph on 2..max_n vertices up to isomorphism."""
    from orientflip.connectivity import lambda_undirected

    seen = set()
    out = []
    for n in range(2, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            G = build(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
            if not G.is_connected() or lambda_undirected(G) < min_lambda:
                continue
            key = canonical_form(G)
            if key not in seen:
                seen.add(key)
                out.append(G)
    return out


def four_connected_graphs(trials=40000, max_m=16, seed=7):
    """Random 4-edge-connected multigraphs on 4..6 vertices, isomorphs removed, sorted by size."""
    from orientflip.connectivity import lambda_undirected

    rng = random.Random(seed)
    seen = set()
    out = []
    for _ in range(trials):
        n = rng.randint(4, 6)
        G = random_multigraph(rng, n, rng.randint(2 * n, max_m))
        if lambda_undirected(G) < 4:
            continue
        key = canonical_form(G)
        if key not in seen:
            seen.add(key)
            out.append(G)
    out.sort(key=lambda G: (G.m, G.n))
    return out
