"""graph6 and edge-list text formats."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    """Malformed graph text; the message names the offending byte or line."""


# -- graph6 ------------------------------------------------------------------


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = bytearray(_encode_size(g.n))
    adj = g.adj
    acc = 0
    nbits = 0
    # upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, g.n):
        col = adj[j] & ((1 << j) - 1)
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise GraphParseError("empty graph6 string")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte {pos} ({chr(b)!r}) outside the graph6 range 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated 8-byte graph6 size header")
        n, pos = 0, 8
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(data) < 4:
            raise GraphParseError("truncated 4-byte graph6 size header")
        n, pos = 0, 4
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphParseError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}"
            + (f" (byte {pos + need} is extra)" if len(body) > need else ""))
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for bpos, b in enumerate(body):
        val = b - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                if val & ((1 << (shift + 1)) - 1):
                    raise GraphParseError(f"byte {pos + bpos} has nonzero padding bits")
                break
            if val >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_adjacency(adj, check=False)


# -- edge list ---------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    n_decl = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if first and line.startswith("n="):
            first = False
            try:
                n_decl = int(line[2:])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex-count header {line!r}") from None
            if n_decl < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count")
            continue
        first = False
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphParseError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge {key}")
        if n_decl is not None and max(u, v) >= n_decl:
            raise GraphParseError(f"line {lineno}: vertex {max(u, v)} >= n={n_decl}")
        seen.add(key)
        edges.append(key)
    n = n_decl if n_decl is not None else 1 + max((v for e in edges for v in e), default=-1)
    return Graph(n, edges)


# -- dispatch ----------------------------------------------------------------


def parse_graph(text: str, format: str) -> Graph:
    """Parse ``text`` in ``format`` ('graph6' or 'edge-list')."""
    if format in ("graph6", "g6"):
        return from_graph6(text)
    if format in ("edge-list", "edges"):
        return from_edge_list(text)
    raise ValueError(f"unknown graph format {format!r}")


def format_graph(g: Graph, format: str) -> str:
    if format in ("graph6", "g6"):
        return to_graph6(g) + "\n"
    if format in ("edge-list", "edges"):
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {format!r}")


def guess_format(path: str | Path, text: str | None = None) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".txt", ".edges", ".el", ".edgelist"):
        return "edge-list"
    if text is not None:
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        if first.startswith(GRAPH6_HEADER) or (first and " " not in first and not first.startswith(("n=", "#"))):
            return "graph6"
    return "edge-list"


def read_graph(path: str | Path, format: str | None = None) -> Graph:
    text = Path(path).read_text()
    return parse_graph(text, format or guess_format(path, text))


def write_graph(g: Graph, path: str | Path, format: str | None = None) -> None:
    Path(path).write_text(format_graph(g, format or guess_format(path)))
