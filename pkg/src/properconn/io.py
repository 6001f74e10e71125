"""Reading and writing graphs, colorings, and run reports.

Two graph formats: a plain edge-list text format (first line ``n m``, then one
``u v`` pair per line, 0-based) and graph6 for corpus exchange. Colorings
travel as JSON with explicit edge-color triples so files stay diffable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError
from .coloring import EdgeColoring


class ParseError(GraphError):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


# -- edge-list text format ----------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """``n m`` header, then m lines ``u v``; blank lines and #-comments skipped."""
    rows = []
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((num, line))
    if not rows:
        raise ParseError("empty graph file")
    num, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"expected header 'n m', got {header!r}", num)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected integers in header, got {header!r}", num)
    if len(rows) - 1 != m:
        raise ParseError(f"header promises {m} edges, file has {len(rows) - 1}")
    edges = []
    for num, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected edge 'u v', got {line!r}", num)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected integer endpoints, got {line!r}", num)
        edges.append((u, v) if u < v else (v, u))
    try:
        return Graph(n, tuple(sorted(edges)))
    except GraphError as exc:
        raise ParseError(str(exc))


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# -- graph6 ---------------------------------------------------------------------

# Reference: the graph6 format packs the upper triangle of the adjacency
# matrix, column by column, into 6-bit chunks offset by 63.


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError("graph6 characters out of range")
    if data[0] <= 62:
        n, data = data[0], data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        raise ParseError("graph6 order field too large")
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise ParseError(
            f"graph6 payload is {len(data)} chunks, expected {(nbits + 5) // 6}"
        )
    bits = []
    for b in data:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, tuple(sorted(edges)))


def format_graph6(g: Graph) -> str:
    if g.n > 62:
        header = [63, g.n >> 12, (g.n >> 6) & 63, g.n & 63]
    else:
        header = [g.n]
    eset = set(g.edges)
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in eset else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = [
        (bits[i] << 5)
        | (bits[i + 1] << 4)
        | (bits[i + 2] << 3)
        | (bits[i + 3] << 2)
        | (bits[i + 4] << 1)
        | bits[i + 5]
        for i in range(0, len(bits), 6)
    ]
    return "".join(chr(63 + b) for b in header + chunks)


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise ParseError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return format_edgelist(g)
    if fmt == "graph6":
        return format_graph6(g) + "\n"
    raise ParseError(f"unknown graph format {fmt!r}")


# -- coloring JSON -------------------------------------------------------------


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """JSON object with ``k`` and ``edges: [[u, v, color], ...]``; must cover
    every edge of ``g`` exactly once."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"coloring file is not valid JSON: {exc}")
    if not isinstance(obj, dict) or "k" not in obj or "edges" not in obj:
        raise ParseError("coloring JSON needs 'k' and 'edges' fields")
    assignment = {}
    for row in obj["edges"]:
        if not (isinstance(row, list) and len(row) == 3):
            raise ParseError(f"bad edge row {row!r}, expected [u, v, color]")
        u, v, col = row
        e = (u, v) if u < v else (v, u)
        if e in assignment:
            raise ParseError(f"edge {e} colored twice")
        assignment[e] = col
    c = EdgeColoring(obj["k"], assignment)
    c.validate(g)
    return c


def format_coloring(c: EdgeColoring) -> str:
    rows = [[u, v, c.assignment[(u, v)]] for u, v in sorted(c.assignment)]
    return json.dumps({"k": c.k, "edges": rows}, indent=2) + "\n"


# -- run reports ----------------------------------------------------------------


def _pkg_version() -> str:
    from . import __version__

    return __version__


@dataclass
class RunReport:
    """Reproducibility envelope for one CLI invocation.

    ``inputs`` maps file labels to sha256 digests; together with the command
    echo, seed, and version this pins down a re-run. Wall time is omitted in
    deterministic mode so identical runs emit identical bytes.
    """

    command: str
    inputs: dict = field(default_factory=dict)
    result: dict = field(default_factory=dict)
    evidence: list = field(default_factory=list)
    seed: Optional[int] = None
    wall_time_s: Optional[float] = None
    version: str = field(default_factory=_pkg_version)

    def add_input(self, label: str, content: str) -> None:
        digest = hashlib.sha256(content.encode()).hexdigest()
        self.inputs[label] = f"sha256:{digest}"

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "version": self.version,
            "inputs": self.inputs,
            "seed": self.seed,
            "result": self.result,
            "evidence": self.evidence,
        }
        if self.wall_time_s is not None:
            payload["wall_time_s"] = round(self.wall_time_s, 3)
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
