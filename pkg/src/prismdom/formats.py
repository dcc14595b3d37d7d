"""Text formats: edge lists, graph6, DOT export and JSON sidecars.

Edge-list layout::

    # comments and blank lines are ignored
    n m
    u v
    ...

with ``m`` lines of 0-based endpoints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .graph_core import Graph, GraphError, new_graph


class FormatError(GraphError):
    """Parse failure; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def _tokens(text: str) -> list[tuple[str, int]]:
    out = []
    col = 0
    for part in text.split():
        col = text.index(part, col)
        out.append((part, col + 1))
        col += len(part)
    return out


def _int_token(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", line, col) from None


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        if len(toks) != 2:
            col = toks[2][1] if len(toks) > 2 else toks[0][1]
            raise FormatError(f"expected two integers, found {len(toks)} tokens", lineno, col)
        a, b = (_int_token(t, lineno, c) for t, c in toks)
        if header is None:
            if a < 0 or b < 0:
                raise FormatError("negative count in header", lineno, toks[0][1])
            header = (a, b)
            continue
        n = header[0]
        for val, (_, col) in zip((a, b), toks):
            if not 0 <= val < n:
                raise FormatError(f"vertex {val} out of range for n={n}", lineno, col)
        if a == b:
            raise FormatError(f"self-loop at vertex {a}", lineno, toks[0][1])
        edges.append((a, b))
    if header is None:
        raise FormatError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges but {len(edges)} were given")
    return new_graph(n, edges)


def format_edge_list(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{u} {v}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"


# graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> bytes:
    if n < 0:
        raise GraphError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError("order too large for graph6")


def to_graph6(G: Graph, header: bool = False) -> bytes:
    """Encode ``G`` as a graph6 line (without the trailing newline)."""
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append(1 if (i, j) in G.edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) for i in range(0, len(bits), 6)
    )
    return (_G6_HEADER.encode() if header else b"") + _g6_size(G.n) + body


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER.encode()):
        data = data[len(_G6_HEADER) :]
    if not data:
        raise FormatError("empty graph6 string")
    for pos, byte in enumerate(data, 1):
        if not 63 <= byte <= 126:
            raise FormatError(f"invalid graph6 byte {byte!r}", 1, pos)
    vals = [b - 63 for b in data]
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] < 63:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    else:
        if len(vals) < 8:
            raise FormatError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise FormatError(f"graph6 body has {len(rest)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return new_graph(n, edges)


# DOT --------------------------------------------------------------------


def to_dot(G: Graph, labels: Sequence[str] | None = None, highlight: frozenset[int] = frozenset(),
           name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in G.vertices:
        attrs = []
        if labels is not None:
            attrs.append('label="{}"'.format(str(labels[v]).replace('"', '\\"')))
        if v in highlight:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightblue")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    lines.extend(f"  {u} -- {v};" for u, v in G.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


# sidecars ---------------------------------------------------------------


@dataclass(frozen=True)
class Sidecar:
    """JSON header stored next to a graph file.

    ``n`` is the base order (the prism itself has ``2n`` vertices when
    ``prism`` is true), ``labels`` are printable base-vertex labels.
    """

    n: int
    labels: tuple[str, ...] | None = None
    perm_image: tuple[int, ...] | None = None
    prism: bool = False
    family: str | None = None

    def to_json(self) -> str:
        payload: dict[str, Any] = {"n": self.n, "perm_image": list(self.perm_image) if self.perm_image else None,
                                   "labels": list(self.labels) if self.labels else None}
        if self.prism:
            payload["prism"] = True
        if self.family:
            payload["family"] = self.family
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Sidecar":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad sidecar JSON: {exc.msg}", exc.lineno, exc.colno) from None
        if "n" not in d:
            raise FormatError("sidecar lacks 'n'")
        return cls(
            n=int(d["n"]),
            labels=tuple(str(x) for x in d["labels"]) if d.get("labels") else None,
            perm_image=tuple(int(x) for x in d["perm_image"]) if d.get("perm_image") else None,
            prism=bool(d.get("prism", False)),
            family=d.get("family"),
        )


def sidecar_path(path: str | Path) -> Path:
    p = Path(path)
    return p.with_name(p.name + ".json")


def read_graph(path: str | Path) -> Graph:
    """Read an edge-list or graph6 file, chosen by the ``.g6`` suffix."""
    p = Path(path)
    if p.suffix in (".g6", ".graph6"):
        lines = p.read_bytes().split()
        return from_graph6(lines[0] if lines else b"")
    return parse_edge_list(p.read_text())


def read_sidecar(path: str | Path) -> Sidecar | None:
    sp = sidecar_path(path)
    if not sp.exists():
        return None
    return Sidecar.from_json(sp.read_text())
