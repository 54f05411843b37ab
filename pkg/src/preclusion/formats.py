"""Graph serialization: graph6, edge-list, and JSON.

graph6 is the standard ASCII encoding (upper-triangle adjacency bits packed
into printable sextets); the edge-list format is a "n m" header followed by
one "u v" line per edge; JSON carries the vertex count, edge list, and
optional bipartition.
"""

from __future__ import annotations

import json
import re

from .errors import ParameterError, ParseError
from .graphs import Graph

__all__ = [
    "parse",
    "emit",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
    "parse_json",
    "emit_json",
    "detect_format",
]

_GRAPH6_HEADER = ">>graph6<<"
_MAX_GRAPH6_N = 258047  # largest order the 1- and 4-byte size prefixes cover


def emit_graph6(g: Graph) -> str:
    if g.n > _MAX_GRAPH6_N:
        raise ParameterError(f"graph6 supports at most {_MAX_GRAPH6_N} vertices")
    out = []
    if g.n <= 62:
        out.append(chr(g.n + 63))
    else:
        out.append("~")
        for shift in (12, 6, 0):
            out.append(chr(((g.n >> shift) & 0x3F) + 63))
    bits = 0
    nbits = 0
    adjacency = {pair: True for pair in g.edges}
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | (1 if (i, j) in adjacency else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
        base = len(_GRAPH6_HEADER)
    if not s:
        raise ParseError("empty graph6 input", base)
    vals = []
    for pos, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", base + pos)
        vals.append(code - 63)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
        body_base = base + 1
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size prefix", base + len(s))
        if vals[1] == 63:
            raise ParseError("graph6 sizes above 258047 are not supported", base + 1)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        body_base = base + 4
    need = n * (n - 1) // 2
    have = 6 * len(body)
    if have < need:
        raise ParseError(
            f"graph6 body too short: need {need} bits, have {have}", base + len(s)
        )
    if have - need >= 6:
        raise ParseError("trailing bytes after graph6 body", body_base + (need + 5) // 6)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (body[idx // 6] >> (5 - idx % 6)) & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


_HEADER_RE = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    offsets = []
    pos = 0
    for line in lines:
        offsets.append(pos)
        pos += len(line) + 1
    rows = [
        (i, line) for i, line in enumerate(lines) if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ParseError("empty edge-list input", 0)
    first_idx, first = rows[0]
    header = _HEADER_RE.match(first)
    if not header:
        raise ParseError("edge list must start with a 'n m' header line", offsets[first_idx])
    n, m = int(header.group(1)), int(header.group(2))
    if len(rows) - 1 != m:
        raise ParseError(
            f"header promises {m} edges but {len(rows) - 1} edge lines follow",
            offsets[first_idx],
        )
    edges = []
    for idx, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"bad edge line {line!r}", offsets[idx])
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in {line!r}", offsets[idx])
        if u == v:
            raise ParseError(f"self-loop in {line!r}", offsets[idx])
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ParameterError as exc:
        raise ParseError(str(exc), offsets[first_idx]) from exc


def emit_json(g: Graph) -> str:
    payload = {
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges],
        "bipartition": list(g.bipartition) if g.bipartition is not None else None,
    }
    return json.dumps(payload) + "\n"


def parse_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(payload, dict) or "n" not in payload or "edges" not in payload:
        raise ParseError("JSON graph needs 'n' and 'edges' keys", 0)
    try:
        return Graph(
            payload["n"],
            [tuple(e) for e in payload["edges"]],
            bipartition=payload.get("bipartition"),
        )
    except (ParameterError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid JSON graph: {exc}", 0) from exc


_PARSERS = {"graph6": parse_graph6, "edge_list": parse_edge_list, "json": parse_json}
_EMITTERS = {"graph6": emit_graph6, "edge_list": emit_edge_list, "json": emit_json}


def parse(fmt: str, text: str) -> Graph:
    if fmt not in _PARSERS:
        raise ParameterError(f"unknown format {fmt!r}; choose from {sorted(_PARSERS)}")
    return _PARSERS[fmt](text)


def emit(g: Graph, fmt: str) -> str:
    if fmt not in _EMITTERS:
        raise ParameterError(f"unknown format {fmt!r}; choose from {sorted(_EMITTERS)}")
    return _EMITTERS[fmt](g)


def detect_format(text: str) -> str:
    """Guess between edge-list and graph6 input: a leading "n m" line means
    edge list, anything else is treated as graph6."""
    for line in text.splitlines():
        if line.strip():
            return "edge_list" if _HEADER_RE.match(line) else "graph6"
    return "graph6"
