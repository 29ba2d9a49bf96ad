"""Flip graphs of strongly connected orientations, and why 3-edge-connectivity matters."""

from orientflip import build, complete_graph, cycle_graph, duplicate, find_obstruction, reconfigure_strong
from orientflip.connectivity import lambda_undirected
from orientflip.oracle import bfs_distance, build_flip_graph

for name, G in [("C4", cycle_graph(4)), ("K4", complete_graph(4)), ("C4x2", duplicate(cycle_graph(4), 2))]:
    FG = build_flip_graph(G, 1)
    print(f"{name:5s} lambda(G)={lambda_undirected(G)}  strong orientations={len(FG.nodes):3d}  "
          f"components={len(FG.components())}  diameter={FG.diameter()}")

# a 4-cycle with one chord still has 2-edge-cuts, so some pairs are separated
G = build(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
FG = build_flip_graph(G, 1)
a = FG.nodes[0]
for b in FG.nodes[1:]:
    obs = find_obstruction(a, b)
    if obs is not None:
        print(a.bits(), "->", b.bits(), "blocked by cut", obs.cut_edges, "distance", bfs_distance(FG, a, b))
        break
for b in FG.nodes[1:]:
    if find_obstruction(a, b) is None:
        seq = reconfigure_strong(a, b)
        print(a.bits(), "->", b.bits(), "flips", seq.flips, "distance", bfs_distance(FG, a, b))
        break
