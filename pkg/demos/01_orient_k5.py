"""Walk the all-one-way orientation of K5 up to a 2-edge-connected one, one flip at a time."""

from orientflip import Orientation, complete_graph, lambda_directed, orient_k_connected, tight_families

G = complete_graph(5)
D = Orientation(G, 0)          # every edge i-j points from the smaller id to the larger
print("start:", D.bits(), "lambda =", lambda_directed(D))

seq, E = orient_k_connected(D, 2)
cur = D
for e, lam in zip(seq.flips, seq.lambdas):
    cur = cur.flip(e)
    print(f"flip edge {e:2d} {G.edges[e]}  ->  lambda {lam}")

print("end:  ", E.bits(), "lambda =", lambda_directed(E))
print("val trace of the improve phases:", seq.vals)

# once 2-edge-connected, the level-1 potential is zero: no tight sets remain
print("val at k=1:", tight_families(E, 1).val)
