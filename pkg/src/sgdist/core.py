"""Signed graph representation, edge-list I/O, switching and structural predicates.

A signed graph is a simple undirected graph whose edges carry a sign in
{+1, -1}.  Vertices are dense 0-based integers.  Signs are plain Python
ints; every boundary that accepts a sign validates it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "SignedGraph",
    "EdgeListError",
    "parse_edge_list",
    "serialize_edge_list",
    "switch",
    "balance_potential",
    "is_balanced",
    "cycle_sign",
    "StructuralSummary",
    "structural_predicates",
    "is_connected",
    "is_two_connected",
    "is_geodetic",
    "has_odd_cycle",
    "net_degree",
    "net_degrees",
    "is_net_regular",
]


def _check_sign(s: int) -> int:
    if s != 1 and s != -1:
        raise ValueError(f"sign must be +1 or -1, got {s!r}")
    return int(s)


@dataclass(frozen=True)
class SignedGraph:
    """Immutable simple undirected graph with +1/-1 edge signs.

    `edges` is a sorted tuple of (u, v, sign) triples with u < v.  Use
    :meth:`from_edges` to build one from unnormalized input.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        seen = set()
        for u, v, s in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            _check_sign(s)
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "SignedGraph":
        """Build a graph, normalizing each (u, v, s) so that u < v."""
        norm = []
        for u, v, s in edges:
            if u > v:
                u, v = v, u
            norm.append((int(u), int(v), int(s)))
        return cls(n, tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (neighbor, sign) pairs, sorted by neighbor."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _sign_lookup(self) -> dict[tuple[int, int], int]:
        d = {}
        for u, v, s in self.edges:
            d[(u, v)] = s
            d[(v, u)] = s
        return d

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._sign_lookup

    def sign(self, u: int, v: int) -> int:
        """Sign of the edge uv; raises if uv is not an edge."""
        try:
            return self._sign_lookup[(u, v)]
        except KeyError:
            raise ValueError(f"({u},{v}) is not an edge") from None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def with_signs(self, signs: Sequence[int]) -> "SignedGraph":
        """Same underlying graph with a new sign per edge, in `self.edges` order."""
        if len(signs) != self.m:
            raise ValueError(f"expected {self.m} signs, got {len(signs)}")
        return SignedGraph(
            self.n,
            tuple((u, v, _check_sign(s)) for (u, v, _), s in zip(self.edges, signs)),
        )


class EdgeListError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


_SIGN_TOKENS = {"+": 1, "-": -1, "+1": 1, "-1": -1}


def parse_edge_list(text: str) -> SignedGraph:
    """Parse the edge-list format into a SignedGraph.

    Format: first significant line is "n m"; then m lines "u v s" with
    0 <= u, v < n and s in {+, -, +1, -1}.  Lines starting with "#" and
    blank lines are ignored.  Errors report the 1-based line number.
    """
    n = m = None
    edges: list[tuple[int, int, int]] = []
    seen_pairs: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise EdgeListError(line_no, f"expected header 'n m', got {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError(line_no, f"non-integer header {line!r}") from None
            if n < 1:
                raise EdgeListError(line_no, f"vertex count must be >= 1, got {n}")
            if m < 0:
                raise EdgeListError(line_no, f"edge count must be >= 0, got {m}")
            continue
        if len(parts) != 3:
            raise EdgeListError(line_no, f"expected 'u v s', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(line_no, f"non-integer vertex in {line!r}") from None
        s = _SIGN_TOKENS.get(parts[2])
        if s is None:
            raise EdgeListError(line_no, f"bad sign {parts[2]!r} (use +, -, +1 or -1)")
        if u == v:
            raise EdgeListError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(line_no, f"vertex index out of range in {line!r} (n={n})")
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            raise EdgeListError(line_no, f"duplicate edge ({key[0]},{key[1]})")
        seen_pairs.add(key)
        if len(edges) == m:
            raise EdgeListError(line_no, f"more than the declared {m} edges")
        edges.append((u, v, s))
    if n is None:
        raise EdgeListError(1, "empty input, expected header 'n m'")
    if len(edges) != m:
        raise EdgeListError(1, f"header declares {m} edges, found {len(edges)}")
    return SignedGraph.from_edges(n, edges)


def serialize_edge_list(g: SignedGraph) -> str:
    """Canonical edge-list text: sorted edges, '+'/'-' signs, trailing newline."""
    lines = [f"{g.n} {g.m}"]
    for u, v, s in g.edges:
        lines.append(f"{u} {v} {'+' if s > 0 else '-'}")
    return "\n".join(lines) + "\n"


def switch(g: SignedGraph, zeta: Sequence[int]) -> SignedGraph:
    """Switch g by the vertex signing zeta: edge uv gets sign zeta[u]*s*zeta[v].

    Switching preserves the underlying graph and every cycle sign; applying
    the same zeta twice is the identity.
    """
    if len(zeta) != g.n:
        raise ValueError(f"switching function has length {len(zeta)}, graph order {g.n}")
    z = [_check_sign(s) for s in zeta]
    return SignedGraph(g.n, tuple((u, v, z[u] * s * z[v]) for u, v, s in g.edges))


def balance_potential(g: SignedGraph) -> list[int] | None:
    """Vertex signing zeta with zeta[u]*sign(uv)*zeta[v] = +1 on every edge.

    Exists iff g is balanced (every cycle positive).  Assigned by BFS per
    component; returns None when some edge contradicts the assignment.
    """
    zeta = [0] * g.n
    for root in range(g.n):
        if zeta[root]:
            continue
        zeta[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, s in g.adjacency[u]:
                if zeta[v] == 0:
                    zeta[v] = zeta[u] * s
                    queue.append(v)
                elif zeta[u] * s * zeta[v] != 1:
                    return None
    return zeta


def is_balanced(g: SignedGraph) -> bool:
    """True iff every cycle of g has positive sign."""
    return balance_potential(g) is not None


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of edge signs along a cycle given as a distinct-vertex sequence.

    Consecutive vertices, and the last-to-first pair, must be edges of g.
    """
    k = len(cycle)
    if k < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {k}")
    if len(set(cycle)) != k:
        raise ValueError("repeated vertex in cycle")
    sign = 1
    for i in range(k):
        sign *= g.sign(cycle[i], cycle[(i + 1) % k])
    return sign


def _bfs_dist(g: SignedGraph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v, _ in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: SignedGraph) -> bool:
    return all(d >= 0 for d in _bfs_dist(g, 0))


def is_two_connected(g: SignedGraph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex (checked by deletion)."""
    if g.n < 3 or not is_connected(g):
        return False
    for v in range(g.n):
        # BFS over the remaining vertices from any other start.
        start = 0 if v != 0 else 1
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w, _ in g.adjacency[u]:
                if w != v and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != g.n - 1:
            return False
    return True


def is_geodetic(g: SignedGraph) -> bool:
    """True iff every connected vertex pair has exactly one shortest path.

    Shortest paths are counted by a BFS accumulator with counts capped at 2,
    since only uniqueness matters.
    """
    for s in range(g.n):
        dist = _bfs_dist(g, s)
        order = sorted((d, v) for v, d in enumerate(dist) if d > 0)
        count = [0] * g.n
        count[s] = 1
        for _, v in order:
            c = 0
            for u, _ in g.adjacency[v]:
                if dist[u] == dist[v] - 1:
                    c += count[u]
                    if c >= 2:
                        break
            count[v] = min(c, 2)
            if c >= 2:
                return False
    return True


def has_odd_cycle(g: SignedGraph) -> bool:
    """True iff the underlying graph is non-bipartite."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in g.adjacency[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return True
    return False


@dataclass(frozen=True)
class StructuralSummary:
    is_connected: bool
    is_two_connected: bool
    is_geodetic: bool
    has_odd_cycle: bool


def structural_predicates(g: SignedGraph) -> StructuralSummary:
    """Connectivity, 2-connectivity, geodeticity and odd-cycle presence."""
    return StructuralSummary(
        is_connected=is_connected(g),
        is_two_connected=is_two_connected(g),
        is_geodetic=is_geodetic(g),
        has_odd_cycle=has_odd_cycle(g),
    )


def net_degree(g: SignedGraph, v: int) -> int:
    """Positive-incident-edge count minus negative-incident-edge count."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return sum(s for _, s in g.adjacency[v])


def net_degrees(g: SignedGraph) -> list[int]:
    return [net_degree(g, v) for v in range(g.n)]


def is_net_regular(g: SignedGraph) -> bool:
    """True iff every vertex has the same net-degree."""
    degs = net_degrees(g)
    return all(d == degs[0] for d in degs)
