"""Plain-text formats for matrices, graphs and bases."""

from __future__ import annotations

from .code import BinaryMatrix
from .cycles import Graph
from .groebner import Binomial
from .term import parse_word


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_matrix(text: str) -> BinaryMatrix:
    """One row per line of ``0``/``1`` characters; whitespace and ``#`` comments ignored."""
    rows = []
    width = None
    for no, line in _content_lines(text):
        bits = "".join(line.split())
        bad = set(bits) - {"0", "1"}
        if bad:
            raise ParseError(f"unexpected character {sorted(bad)[0]!r} in matrix row {line!r}", no)
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise ParseError(f"row has {len(bits)} entries, expected {width}", no)
        rows.append(bits)
    if width is None:
        raise ParseError("no matrix rows found")
    return BinaryMatrix.from_rows(rows, width)


def format_matrix(m: BinaryMatrix) -> str:
    return "".join(f"{r}\n" for r in m.to_strings())


def parse_graph(text: str) -> Graph:
    """``V <count>`` header followed by one ``u v`` edge per line (1-based)."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "V" or not parts[1].isdigit():
        raise ParseError(f"expected 'V <count>', got {head!r}", no)
    count = int(parts[1])
    edges = []
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'u v', got {line!r}", no)
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return Graph(count, tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    return f"V {g.vertex_count}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)


def parse_basis(text: str, n: int) -> list[Binomial]:
    """Lines ``head - tail`` in the word text format."""
    out = []
    for no, line in _content_lines(text):
        if " - " not in line:
            raise ParseError(f"expected 'head - tail', got {line!r}", no)
        lhs, rhs = line.split(" - ", 1)
        try:
            out.append(Binomial(parse_word(lhs, n), parse_word(rhs, n)))
        except ValueError as exc:
            raise ParseError(str(exc), no) from exc
    return out
