import io
import json
import subprocess
import sys

import pytest

from orientflip.cli import main
from orientflip.formats import format_graph
from orientflip.multigraph import Orientation, apply_flips, complete_graph, cycle_graph, duplicate
from orientflip.oracle import lambda_bruteforce


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_gen_and_lambda(files):
    code, text = run(["gen", "complete", "5"])
    assert code == 0 and text == format_graph(complete_graph(5))
    g = files("k5.txt", text)
    assert run(["lambda", g]) == (0, "4\n")
    o = files("o.txt", "0" * 10)
    assert run(["lambda", g, o]) == (0, "0\n")


def test_gen_duplicate():
    code, text = run(["gen", "cycle", "3", "--dup", "2"])
    assert text.splitlines()[0] == "3 6"


def test_orient_prints_flips_and_final_lambda(files, tmp_path):
    G = complete_graph(5)
    g = files("g.txt", format_graph(G))
    o = files("o.txt", "0" * 10)
    report = tmp_path / "r.json"
    code, text = run(["orient", g, o, "--k", "2", "--json", str(report)])
    assert code == 0
    lines = text.splitlines()
    assert lines[-1] == "# lambda: 2"
    flips = [int(x) for x in lines[:-1]]
    assert lambda_bruteforce(apply_flips(Orientation(G, 0), flips)) == 2
    data = json.loads(report.read_text())
    assert data["sequence"] == flips
    assert data["graph"] == {"n": 5, "m": 10}
    assert data["lambdas"] == sorted(data["lambdas"])
    assert set(data) >= {"command", "inputs_digest", "k", "val_trace", "elapsed_ms"}


def test_orient_underlying_too_low(files):
    g = files("c.txt", format_graph(cycle_graph(4)))
    o = files("o.txt", "0000")
    assert run(["orient", g, o, "--k", "2"])[0] == 3


def test_reconfigure_k1_obstruction(files):
    g = files("c.txt", format_graph(cycle_graph(4)))
    a = files("a.txt", "0000")
    b = files("b.txt", "1111")
    assert run(["reconfigure", g, a, b, "--k", "1"]) == (4, "OBSTRUCTION 0 1\n")


def test_reconfigure_k1_and_k2(files):
    G = duplicate(complete_graph(4), 2)
    g = files("g.txt", format_graph(G))
    a = files("a.txt", "01" * 6)
    b = files("b.txt", "10" * 6)
    code, text = run(["reconfigure", g, a, b, "--k", "1"])
    assert code == 0 and len(text.split()) == 12
    code, text = run(["reconfigure", g, a, b, "--k", "1", "--cap", "3"])
    assert code == 0


def test_reconfigure_middle_cap(files):
    G = complete_graph(5)
    g = files("g.txt", format_graph(G))
    a = files("a.txt", "0110100110")
    b = files("b.txt", "1001011001")
    assert lambda_bruteforce(Orientation.from_bits(G, "0110100110")) >= 1
    code, text = run(["reconfigure", g, a, b, "--k", "1", "--cap", "1"])
    # K=1 never uses the middle search
    assert code == 0
    code, text = run(["reconfigure", g, a, b, "--k", "2", "--cap", "1"])
    assert code == 3


def test_reconfigure_cap_exit_code(files):
    from orientflip.oracle import enumerate_orientations
    G = duplicate(complete_graph(4), 2)
    nodes = enumerate_orientations(G, 2)
    g = files("g.txt", format_graph(G))
    a = files("a.txt", nodes[0].bits())
    b = files("b.txt", nodes[-1].bits())
    code, text = run(["reconfigure", g, a, b, "--k", "2", "--cap", "1"])
    assert code == 5
    assert text.splitlines()[0] == "MIDDLE-SEARCH-CAP"
    code, text = run(["reconfigure", g, a, b, "--k", "2"])
    flips = [int(x) for x in text.split()]
    assert code == 0 and apply_flips(nodes[0], flips) == nodes[-1]


def test_flipgraph(files, tmp_path):
    g = files("k4.txt", format_graph(complete_graph(4)))
    dot = tmp_path / "fg.dot"
    code, text = run(["flipgraph", g, "--k", "1", "--dot", str(dot)])
    assert code == 0
    assert text == "nodes=24 edges=36 connected=true diameter=6\n"
    assert dot.read_text().count(" -- ") == 36
    g3 = files("c3.txt", format_graph(cycle_graph(3)))
    assert run(["flipgraph", g3, "--k", "1"])[1] == "nodes=2 edges=0 connected=false diameter=inf\n"


def test_flipgraph_too_large(files):
    g = files("k4.txt", format_graph(complete_graph(4)))
    assert run(["flipgraph", g, "--k", "1", "--cap", "10"])[0] == 6


def test_bad_input_exit_code(files):
    g = files("bad.txt", "3 1\n0 0\n")
    assert run(["lambda", g])[0] == 2
    assert run(["lambda", "/nonexistent/graph"])[0] == 2


def test_module_entry_point(files):
    g = files("k4.txt", format_graph(complete_graph(4)))
    done = subprocess.run([sys.executable, "-m", "orientflip", "lambda", g],
                          capture_output=True, text=True, check=True)
    assert done.stdout == "3\n"


def test_triangle_reversal_reports_obstruction(files):
    g = files("c3.txt", format_graph(cycle_graph(3)))
    a = files("a.txt", "000")
    b = files("b.txt", "111")
    assert run(["reconfigure", g, a, b, "--k", "1"]) == (4, "OBSTRUCTION 0 1\n")


def test_identical_inputs_give_empty_sequence(files):
    g = files("k4.txt", format_graph(complete_graph(4)))
    a = files("a.txt", "001101")
    assert lambda_bruteforce(Orientation.from_bits(complete_graph(4), "001101")) == 1
    assert run(["reconfigure", g, a, a, "--k", "1"]) == (0, "")


def test_triangle_cannot_reach_two(files):
    g = files("c3.txt", format_graph(cycle_graph(3)))
    o = files("o.txt", "000")
    assert run(["orient", g, o, "--k", "2"])[0] == 3


def test_doubled_triangle_reaches_two(files):
    G = duplicate(cycle_graph(3), 2)
    g = files("g.txt", format_graph(G))
    o = files("o.txt", "010101")
    code, text = run(["orient", g, o, "--k", "2"])
    flips = [int(x) for x in text.splitlines()[:-1]]
    assert code == 0 and text.endswith("# lambda: 2\n")
    assert lambda_bruteforce(apply_flips(Orientation.from_bits(G, "010101"), flips)) == 2
    code, text = run(["orient", g, files("p.txt", "000000"), "--k", "2"])
    assert text == "# lambda: 2\n"
