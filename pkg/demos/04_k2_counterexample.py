"""Load the saved k = 2 counterexample and show that its first orientation cannot move."""

import json
from pathlib import Path

from orientflip import Orientation, build
from orientflip.oracle import lambda_bruteforce, lambda_undirected_bruteforce, shortest_flip_path

data = json.loads((Path(__file__).parents[1] / "tests" / "data" / "k2_counterexample.json").read_text())
G = build(data["n"], data["edges"])
D1 = Orientation.from_bits(G, data["d1"])
D2 = Orientation.from_bits(G, data["d2"])

print("n =", G.n, "m =", G.m, "lambda(G) =", lambda_undirected_bruteforce(G))
print("lambda(D1) =", lambda_bruteforce(D1), " lambda(D2) =", lambda_bruteforce(D2))
print("lambda after each single flip of D1:", [lambda_bruteforce(D1.flip(e)) for e in range(G.m)])
print("edges where D1 and D2 differ:", [e for e in range(G.m) if (D1.dir ^ D2.dir) >> e & 1])
print("flip path at level 2:", shortest_flip_path(D1, D2, 2))
