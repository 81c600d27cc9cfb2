"""Simple undirected graphs and their distance-derived statistics.

Graphs are immutable once constructed (vertex count plus a normalized edge
set); everything derived from shortest-path distances is computed once into
a DistanceProfile. All functions here are pure, so they are safe to call
concurrently on shared inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

import numpy as np


class GraphParseError(ValueError):
    """Malformed textual graph input. Carries the byte offset when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as (u, v) tuples with u < v; no self-loops, no
    duplicates, every endpoint < n.
    """

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered endpoint pairs (normalized, deduplicated)."""
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n=n, edges=frozenset(norm))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges


@dataclass(eq=False)
class DistanceProfile:
    """All shortest-path distances of a connected graph plus derived scalars.

    dist[i, j] is the BFS distance, tr the transmissions (row sums),
    second_tr[i] = sum_j dist[i, j] * tr[j], wiener the sum of distances over
    unordered pairs, and avg_dist_deg[i] the mean transmission over the
    neighbors of vertex i.
    """

    dist: np.ndarray
    tr: np.ndarray
    second_tr: np.ndarray
    wiener: int
    diameter: int
    avg_dist_deg: np.ndarray

    @property
    def n(self) -> int:
        return len(self.tr)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source to every vertex; -1 where unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return all(d >= 0 for d in bfs_distances(g, 0))


def distance_profile(g: Graph) -> DistanceProfile:
    """Run BFS from every vertex and collect all distance statistics.

    Raises ValueError for disconnected graphs. Distances, transmissions and
    the Wiener index stay exact integers; average distance degrees are plain
    floats (denominators are small vertex degrees).
    """
    n = g.n
    dist = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        row = bfs_distances(g, v)
        if min(row) < 0:
            raise ValueError("requires connected graph")
        dist[v] = row
    tr = dist.sum(axis=1)
    wiener = int(tr.sum()) // 2
    second_tr = dist @ tr
    avg = np.zeros(n, dtype=float)
    for v in range(n):
        nbrs = g.adjacency[v]
        if nbrs:
            avg[v] = float(tr[list(nbrs)].sum()) / len(nbrs)
    return DistanceProfile(
        dist=dist,
        tr=tr,
        second_tr=second_tr,
        wiener=wiener,
        diameter=int(dist.max()),
        avg_dist_deg=avg,
    )


def is_transmission_regular(profile: DistanceProfile, tol: float = 0.0) -> Optional[int]:
    """Return the common transmission k if all vertices share it, else None.

    Transmissions are integers so the comparison is exact; tol is accepted
    for interface symmetry and ignored.
    """
    tr = profile.tr
    k = int(tr[0])
    if np.all(tr == k):
        return k
    return None


def is_bipartite(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """2-color via BFS; return the two parts (vertex 0 in the first) or None."""
    color = [-1] * g.n
    adj = g.adjacency
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    part0 = tuple(v for v in range(g.n) if color[v] == 0)
    part1 = tuple(v for v in range(g.n) if color[v] == 1)
    return part0, part1


def remove_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    u, v = edge
    if u > v:
        u, v = v, u
    if (u, v) not in g.edges:
        raise ValueError(f"edge ({u}, {v}) not present")
    return Graph(n=g.n, edges=g.edges - {(u, v)})


def complement(g: Graph) -> Graph:
    edges = frozenset(
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
    )
    return Graph(n=g.n, edges=edges)


def induced_paths(g: Graph) -> Iterator[tuple[int, int, int]]:
    """Yield every induced 3-vertex path (u, v, w): uv, vw edges, uw a non-edge."""
    for v in range(g.n):
        nbrs = g.adjacency[v]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                u, w = nbrs[i], nbrs[j]
                if not g.has_edge(u, w):
                    yield u, v, w


# --- text formats ---------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """Parse "n\\nu v\\nu v..." edge-list text (0-indexed vertices).

    Self-loops, duplicate edges and out-of-range endpoints are rejected.
    """
    tokens = text.split()
    if not tokens:
        raise GraphParseError("empty edge-list input")
    try:
        n = int(tokens[0])
    except ValueError:
        raise GraphParseError(f"vertex count {tokens[0]!r} is not an integer") from None
    if n < 1:
        raise GraphParseError(f"vertex count must be at least 1, got {n}")
    rest = tokens[1:]
    if len(rest) % 2:
        raise GraphParseError("odd number of endpoint tokens")
    seen = set()
    edges = []
    for i in range(0, len(rest), 2):
        try:
            u, v = int(rest[i]), int(rest[i + 1])
        except ValueError:
            raise GraphParseError(
                f"non-integer endpoint in pair {rest[i]!r} {rest[i + 1]!r}"
            ) from None
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range in edge {u} {v} (n={n})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 line (n <= 62) into a Graph.

    The format is the usual printable encoding: byte0 = 63 + n, then the
    upper triangle in column-major order packed 6 bits per byte (most
    significant bit first), padded with zero bits. Byte offsets in errors
    refer to the stripped line.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphParseError("empty graph6 input")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise GraphParseError("graph6 input is not ASCII") from None
    first = data[0] - 63
    if first < 0 or data[0] > 126:
        raise GraphParseError(f"character {chr(data[0])!r} outside graph6 range", offset=0)
    if first == 63:
        raise GraphParseError("long-form graph6 (n > 62) is not supported", offset=0)
    n = first
    if n == 0:
        raise GraphParseError("graph of order 0 is not supported", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) < 1 + nbytes:
        raise GraphParseError(
            f"truncated bit string: need {nbytes} data bytes, found {len(data) - 1}",
            offset=len(data),
        )
    if len(data) > 1 + nbytes:
        raise GraphParseError("trailing characters after bit string", offset=1 + nbytes)
    edges = []
    bit = 0
    for v in range(1, n):
        for u in range(v):
            byte_i = 1 + bit // 6
            val = data[byte_i] - 63
            if val < 0 or val > 63:
                raise GraphParseError(
                    f"character {chr(data[byte_i])!r} outside graph6 range", offset=byte_i
                )
            if (val >> (5 - bit % 6)) & 1:
                edges.append((u, v))
            bit += 1
    # padding bits of the last byte must be zero
    for pad in range(nbits, nbytes * 6):
        byte_i = 1 + pad // 6
        val = data[byte_i] - 63
        if val < 0 or val > 63:
            raise GraphParseError(
                f"character {chr(data[byte_i])!r} outside graph6 range", offset=byte_i
            )
        if (val >> (5 - pad % 6)) & 1:
            raise GraphParseError("nonzero padding bits", offset=byte_i)
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph (n <= 62) as a short-form graph6 string."""
    n = g.n
    if n > 62:
        raise ValueError("short-form graph6 supports at most 62 vertices")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    out = [63 + n]
    vals = [0] * nbytes
    bit = 0
    for v in range(1, n):
        for u in range(v):
            if g.has_edge(u, v):
                vals[bit // 6] |= 1 << (5 - bit % 6)
            bit += 1
    out.extend(63 + v for v in vals)
    return bytes(out).decode("ascii")
