"""Simple undirected graphs on up to 64 vertices, stored as bitset rows.

Vertices are labelled 0..n-1.  ``adj[i]`` is an integer whose bit ``j`` is
set iff ``(i, j)`` is an edge.  Graphs are immutable values; every
constructor validates symmetry and looplessness.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count mismatch")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError("adjacency bit outside vertex range")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for_row = self.adj[i]
            m = for_row
            while m:
                b = m & -m
                j = b.bit_length() - 1
                m ^= b
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric edge ({i}, {j})")

    # -- basic queries

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] & ~((1 << (u + 1)) - 1)
            while m:
                b = m & -m
                out.append((u, b.bit_length() - 1))
                m ^= b
        return out

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def from_edges(n: int, edges: Iterable[tuple[int, int]], max_n: int = MAX_VERTICES) -> Graph:
    if n < 1:
        raise GraphError("graph needs at least one vertex")
    if max_n is not None and n > max_n:
        raise GraphError(f"vertex count {n} exceeds {max_n}")
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency_rows(n: int, rows: Sequence[int]) -> Graph:
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# named families


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    n = sum(parts)
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds {MAX_VERTICES}")
    adj = [0] * n
    start = 0
    full = (1 << n) - 1
    for size in parts:
        part_mask = ((1 << size) - 1) << start
        for v in range(start, start + size):
            adj[v] = full & ~part_mask
        start += size
    return Graph(n, tuple(adj))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with ``leaves`` edges, i.e. K_{1,leaves}."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def threshold_graph(bit_string: Sequence[int]) -> Graph:
    """Build a threshold graph by appending isolated (0) / dominating (1) vertices."""
    n = len(bit_string) + 1
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds {MAX_VERTICES}")
    adj = [0] * n
    for idx, bit in enumerate(bit_string):
        v = idx + 1
        if bit not in (0, 1):
            raise GraphError("threshold vector bits must be 0 or 1")
        if bit:
            for u in range(v):
                adj[v] |= 1 << u
                adj[u] |= 1 << v
    return Graph(n, tuple(adj))


_NAMED_RE = re.compile(
    r"^(?:K(?P<kparts>\d+(?:,\d+)*)|Kbar(?P<kbar>\d+)|P(?P<path>\d+)"
    r"|C(?P<cycle>\d+)|star(?P<star>\d+)|thr(?P<thr>[01]+))$"
)


def parse_named(text: str) -> Graph:
    m = _NAMED_RE.match(text.strip())
    if not m:
        raise GraphError(f"unknown graph name: {text!r}")
    if m.group("kparts") is not None:
        parts = [int(p) for p in m.group("kparts").split(",")]
        if any(p < 1 for p in parts):
            raise GraphError("multipartite parts must be positive")
        if len(parts) == 1:
            if parts[0] > MAX_VERTICES:
                raise GraphError("too many vertices")
            return complete_graph(parts[0])
        return complete_multipartite(parts)
    if m.group("kbar") is not None:
        n = int(m.group("kbar"))
        if n > MAX_VERTICES:
            raise GraphError("too many vertices")
        return empty_graph(n)
    if m.group("path") is not None:
        return path_graph(int(m.group("path")))
    if m.group("cycle") is not None:
        return cycle_graph(int(m.group("cycle")))
    if m.group("star") is not None:
        return star_graph(int(m.group("star")))
    return threshold_graph([int(b) for b in m.group("thr")])


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = [ord(ch) - 63 for ch in data]
    if any(b < 0 or b > 63 for b in raw):
        raise GraphError("invalid graph6 character")
    if not raw:
        raise GraphError("empty graph6 string")
    if raw[0] < 63:
        n = raw[0]
        body = raw[1:]
    else:
        if len(raw) < 4 or raw[1] == 63:
            raise GraphError("bad graph6 size prefix")
        n = (raw[1] << 12) | (raw[2] << 6) | raw[3]
        body = raw[4:]
    if n < 1 or n > MAX_VERTICES:
        raise GraphError(f"graph6 vertex count {n} out of range")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError("graph6 body length mismatch")
    bits_stream = []
    for b in body:
        bits_stream.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits_stream[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    else:
        prefix = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    stream = []
    for j in range(1, n):
        for i in range(j):
            stream.append(1 if g.has_edge(i, j) else 0)
    while len(stream) % 6:
        stream.append(0)
    chars = []
    for k in range(0, len(stream), 6):
        val = 0
        for bit in stream[k:k + 6]:
            val = (val << 1) | bit
        chars.append(chr(val + 63))
    return prefix + "".join(chars)


# ---------------------------------------------------------------------------
# edge-list text format: "n; u v; u v; ..."


def parse_edge_list(text: str) -> Graph:
    pieces = [p.strip() for p in text.strip().split(";")]
    if not pieces or not pieces[0]:
        raise GraphError("edge list must start with the vertex count")
    try:
        n = int(pieces[0])
    except ValueError as exc:
        raise GraphError(f"bad vertex count: {pieces[0]!r}") from exc
    edges = []
    for piece in pieces[1:]:
        if not piece:
            continue
        try:
            u, v = (int(tok) for tok in piece.split())
        except ValueError as exc:
            raise GraphError(f"bad edge entry: {piece!r}") from exc
        edges.append((u, v))
    return from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    parts = [str(g.n)]
    parts.extend(f"{u} {v}" for u, v in g.edges())
    return "; ".join(parts)


def parse_graph(text: str, fmt: str) -> Graph:
    """Parse one of the supported formats: graph6, edge-list, named."""
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "named":
        return parse_named(text)
    raise GraphError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# structural operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row ^ (1 << i)) & full for i, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise GraphError("vertex out of range")
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for v in vs:
        m = g.adj[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            if u in index:
                adj[index[v]] |= 1 << index[u]
    return Graph(len(vs), tuple(adj))


def induced_subgraph_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, bits(mask))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"no edge ({u}, {v})")
    adj = list(g.adj)
    adj[u] ^= 1 << v
    adj[v] ^= 1 << u
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or g.has_edge(u, v):
        raise GraphError(f"cannot add edge ({u}, {v})")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of ``g``, adjacent iff the edges share an endpoint."""
    edges = g.edges()
    m = len(edges)
    if m > MAX_VERTICES:
        raise GraphError(f"line graph needs {m} vertices, exceeding {MAX_VERTICES}")
    if m == 0:
        raise GraphError("line graph of an edgeless graph is empty")
    adj = [0] * m
    for a in range(m):
        ua, va = edges[a]
        for b in range(a + 1, m):
            ub, vb = edges[b]
            if ua in (ub, vb) or va in (ub, vb):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(m, tuple(adj))


def graph_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError("union exceeds vertex cap")
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(n, tuple(adj))


def graph_join(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError("join exceeds vertex cap")
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << g1.n
    adj = [row | mask2 for row in g1.adj]
    adj += [(row << g1.n) | mask1 for row in g2.adj]
    return Graph(n, tuple(adj))


def graph_join_union(g1: Graph, g2: Graph, kind: str) -> Graph:
    if kind == "join":
        return graph_join(g1, g2)
    if kind == "union":
        return graph_union(g1, g2)
    raise GraphError(f"unknown kind {kind!r}")


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= g.adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= g.adj[b.bit_length() - 1]
                m ^= b
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_claw_free(g: Graph) -> bool:
    """No induced star on three leaves."""
    for v in range(g.n):
        nb = bits(g.adj[v])
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if g.has_edge(nb[i], nb[j]):
                    continue
                for k in range(j + 1, len(nb)):
                    if not g.has_edge(nb[i], nb[k]) and not g.has_edge(nb[j], nb[k]):
                        return False
    return True


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """New graph with vertex i of the result being perm[i] of the input."""
    inv = [0] * g.n
    for new, old in enumerate(perm):
        inv[old] = new
    return from_edges(g.n, [(inv[u], inv[v]) for u, v in g.edges()])


def iter_all_graphs(n: int) -> Iterator[Graph]:
    """All labelled graphs on n vertices, ordered by edge-slot bitmask."""
    slots = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(slots)):
        adj = [0] * n
        m = mask
        while m:
            b = m & -m
            i, j = slots[b.bit_length() - 1]
            m ^= b
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


def adj_from_edge_mask(n: int, mask: int, slots: Sequence[tuple[int, int]]) -> tuple:
    """Adjacency rows only; symmetric by construction, skips validation."""
    adj = [0] * n
    m = mask
    while m:
        b = m & -m
        i, j = slots[b.bit_length() - 1]
        m ^= b
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return tuple(adj)


def graph_from_edge_mask(n: int, mask: int, slots: Sequence[tuple[int, int]]) -> Graph:
    return Graph(n, adj_from_edge_mask(n, mask, slots))


def edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]
