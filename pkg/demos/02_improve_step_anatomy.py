"""Take one improve step apart: the chosen set R, the safe endpoints and the path."""

from orientflip import (
    build_flip_path,
    choose_r_set,
    duplicate,
    complete_graph,
    improve_step,
    members,
    tight_families,
)
from orientflip.oracle import audit_flip_path, enumerate_orientations, lambda_bruteforce

G = duplicate(complete_graph(4), 2)   # 6-edge-connected, so k = 1 and k = 2 both qualify
k = 1
D = next(D for D in enumerate_orientations(G, k) if lambda_bruteforce(D) == k)

fam = tight_families(D, k)
print("minimal out-tight sets:", [members(X) for X in fam.f_out_min])
print("minimal in-tight sets: ", [members(X) for X in fam.f_in_min])
print("val:", fam.val)

R, case = choose_r_set(D, k)
path = build_flip_path(D, R, k, case)
print(f"R = {members(R)} (case {case})")
print("safe source", path.source.vertex, "of", members(path.source.set))
print("safe sink  ", path.sink.vertex, "of", members(path.sink.set))
print("path vertices", path.vertices, "edges", path.edges, "split at", path.q1_end)

host = D if case == "a" else D.reversed()
print("oracle audit:", audit_flip_path(host, path, k) or "all conditions hold")

seq, E = improve_step(D, k)
print("flips (sink end first):", seq.flips, "lambdas:", seq.lambdas, "val:", seq.vals)
