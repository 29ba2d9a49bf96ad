import itertools
import random

import pytest

from orientflip.errors import GraphMismatch, NotStronglyConnected, Obstructed
from orientflip.local_reach import find_obstruction, reconfigure_strong, two_edge_cuts
from orientflip.multigraph import Orientation, apply_flips, build, complete_graph, cycle_graph
from orientflip.oracle import bfs_distance, build_flip_graph, lambda_bruteforce


def test_two_edge_cuts_of_a_cycle():
    cuts = list(two_edge_cuts(cycle_graph(4)))
    assert [(e, f) for e, f, _ in cuts] == list(itertools.combinations(range(4), 2))
    # removing edges 0=(0,1) and 2=(2,3) leaves {0, 3} with the root
    assert dict(((e, f), side) for e, f, side in cuts)[(0, 2)] == 0b1001


def test_no_two_edge_cuts_in_k4():
    assert list(two_edge_cuts(complete_graph(4))) == []


def test_cycle_reversal_is_obstructed():
    C = cycle_graph(4)
    D1 = Orientation(C, 0)
    D2 = Orientation(C, 0b1111)
    obs = find_obstruction(D1, D2)
    assert obs.cut_edges == (0, 1)
    with pytest.raises(Obstructed):
        reconfigure_strong(D1, D2)


def test_rejects_weak_orientations():
    C = cycle_graph(3)
    with pytest.raises(NotStronglyConnected):
        find_obstruction(Orientation(C, 0), Orientation(C, 0b001))
    with pytest.raises(GraphMismatch):
        find_obstruction(Orientation(C, 0), Orientation(cycle_graph(4), 0))


def test_theta_graph_against_flip_graph():
    # two vertices joined by three paths of length 2
    G = build(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    FG = build_flip_graph(G, 1)
    for D1, D2 in itertools.product(FG.nodes, repeat=2):
        dist = bfs_distance(FG, D1, D2)
        obs = find_obstruction(D1, D2)
        assert (obs is None) == (dist is not None)
        if dist is not None:
            seq = reconfigure_strong(D1, D2)
            assert len(seq) == dist == bin(D1.dir ^ D2.dir).count("1")
            assert apply_flips(D1, seq.flips) == D2


def test_reconfigure_strong_on_k5():
    rng = random.Random(2)
    nodes = build_flip_graph(complete_graph(5), 1).nodes
    for _ in range(30):
        D1, D2 = rng.sample(nodes, 2)
        seq = reconfigure_strong(D1, D2)
        assert len(seq) == bin(D1.dir ^ D2.dir).count("1")
        cur = D1
        for e, lam in zip(seq.flips, seq.lambdas):
            cur = cur.flip(e)
            assert lam == lambda_bruteforce(cur) >= 1
