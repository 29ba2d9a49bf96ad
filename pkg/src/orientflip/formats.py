"""Plain-text graph and orientation files.

Graph file: first line ``n m``, then ``m`` lines ``u v``; the edge on the
i-th of those lines has id i.  Orientation file: ``m`` characters ``0``/``1``
in edge id order (``0`` keeps the stored direction), whitespace ignored.
Lines starting with ``#`` are comments in both.
"""

from __future__ import annotations

from .errors import OrientFlipError, ParseError
from .multigraph import Orientation, UndirectedMultigraph, build


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]


def parse_graph(text: str) -> UndirectedMultigraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0].split())
        pairs = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"malformed graph file: {exc}") from None
    if len(pairs) != m or any(len(p) != 2 for p in pairs):
        raise ParseError(f"expected {m} lines 'u v', got {len(pairs)}")
    try:
        return build(n, pairs)
    except OrientFlipError as exc:
        raise ParseError(str(exc)) from None


def parse_orientation(text: str, G: UndirectedMultigraph) -> Orientation:
    bits = "".join("".join(ln.split()) for ln in _content_lines(text))
    if len(bits) != G.m or set(bits) - {"0", "1"}:
        raise ParseError(f"expected {G.m} characters 0/1, got {bits!r}")
    return Orientation.from_bits(G, bits)


def format_graph(G: UndirectedMultigraph) -> str:
    return "".join([f"{G.n} {G.m}\n"] + [f"{u} {v}\n" for u, v in G.edges])


def format_orientation(D: Orientation) -> str:
    return D.bits() + "\n"


def read_graph(path) -> UndirectedMultigraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def read_orientation(path, G: UndirectedMultigraph) -> Orientation:
    with open(path) as fh:
        return parse_orientation(fh.read(), G)
