"""Signed shortest-path distances, distance matrices, compatibility and witnesses.

Between two vertices u, v at hop distance d there may be several shortest
paths, each with a sign (product of its edge signs).  The two signed
distances are d_max = sigma_max * d and d_min = sigma_min * d where
sigma_max / sigma_min are the largest / smallest achievable shortest-path
signs.  A graph is (distance-)compatible when sigma_max = sigma_min for
every pair, i.e. the two distance matrices coincide.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .core import SignedGraph, is_connected

__all__ = [
    "PairDistanceSummary",
    "IncompatibilityWitness",
    "signed_bfs",
    "distance_matrix",
    "is_compatible",
    "incompatible_pairs",
    "least_incompatible_witness",
    "associated_complete",
    "brute_force_summary",
]


@dataclass(frozen=True)
class PairDistanceSummary:
    """Hop distance plus the maximum and minimum shortest-path signs."""

    d: int
    sigma_max: int
    sigma_min: int

    @property
    def d_max(self) -> int:
        return self.sigma_max * self.d

    @property
    def d_min(self) -> int:
        return self.sigma_min * self.d

    @property
    def compatible(self) -> bool:
        return self.sigma_max == self.sigma_min


def signed_bfs(g: SignedGraph, s: int) -> list[PairDistanceSummary | None]:
    """Exact distance and achievable shortest-path signs from s to every vertex.

    Works level-synchronously: distances for a BFS level are fixed first,
    then each level-(l+1) vertex unions, over all its level-l neighbors, the
    signs obtained by extending their (already final) sign sets.  Entries
    for vertices unreachable from s are None.
    """
    if not (0 <= s < g.n):
        raise ValueError(f"vertex {s} out of range for n={g.n}")
    dist = [-1] * g.n
    pos = [False] * g.n  # a positive shortest path from s exists
    neg = [False] * g.n  # a negative shortest path from s exists
    dist[s] = 0
    pos[s] = True
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for v, _ in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        for v in nxt:
            for u, sgn in g.adjacency[v]:
                if dist[u] == dist[v] - 1:
                    if sgn > 0:
                        pos[v] = pos[v] or pos[u]
                        neg[v] = neg[v] or neg[u]
                    else:
                        pos[v] = pos[v] or neg[u]
                        neg[v] = neg[v] or pos[u]
        frontier = nxt
    out: list[PairDistanceSummary | None] = []
    for v in range(g.n):
        if dist[v] < 0:
            out.append(None)
        else:
            out.append(
                PairDistanceSummary(
                    d=dist[v],
                    sigma_max=1 if pos[v] else -1,
                    sigma_min=-1 if neg[v] else 1,
                )
            )
    return out


def _require_connected(g: SignedGraph) -> None:
    if not is_connected(g):
        raise ValueError("graph is disconnected; signed distances are undefined")


def _all_pairs(g: SignedGraph) -> list[list[PairDistanceSummary]]:
    _require_connected(g)
    return [signed_bfs(g, s) for s in range(g.n)]  # type: ignore[return-value]


def _check_which(which: str) -> str:
    w = which.lower()
    if w not in ("max", "min"):
        raise ValueError(f"which must be 'max' or 'min', got {which!r}")
    return w


def distance_matrix(g: SignedGraph, which: str = "max") -> np.ndarray:
    """The signed distance matrix D^max or D^min as an int64 array.

    Entry (u, v) is sigma_max(u,v)*d(u,v) or sigma_min(u,v)*d(u,v); the
    diagonal is zero.  Requires a connected graph.
    """
    w = _check_which(which)
    rows = _all_pairs(g)
    d = np.zeros((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        for v in range(g.n):
            summ = rows[u][v]
            d[u, v] = summ.d_max if w == "max" else summ.d_min
    return d


def incompatible_pairs(g: SignedGraph) -> list[tuple[int, int]]:
    """Vertex pairs with shortest paths of both signs, sorted by (distance, u, v)."""
    rows = _all_pairs(g)
    found = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            summ = rows[u][v]
            if not summ.compatible:
                found.append((summ.d, u, v))
    found.sort()
    return [(u, v) for _, u, v in found]


def is_compatible(g: SignedGraph) -> bool:
    """True iff every vertex pair has all its shortest paths of one sign."""
    return not incompatible_pairs(g)


@dataclass(frozen=True)
class IncompatibilityWitness:
    """Two internally disjoint opposite-sign shortest paths and their cycle.

    `pair` is an incompatible pair at the minimum incompatible distance k;
    `path_pos` / `path_neg` are shortest paths between them of sign +1 / -1
    sharing only their endpoints, and `cycle` is their union: a negative
    even cycle of length 2k with the pair diametrically opposite.
    """

    pair: tuple[int, int]
    path_pos: tuple[int, ...]
    path_neg: tuple[int, ...]
    cycle: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.path_pos) - 1


def _reconstruct_path(g: SignedGraph, summaries, s: int, v: int, target: int) -> list[int]:
    """One shortest s-v path of the given sign, walked back through the BFS DAG.

    At each step pick the smallest predecessor through which the remaining
    sign is achievable; existence is guaranteed by the summaries.
    """
    path = [v]
    need = target
    cur = v
    while cur != s:
        d = summaries[cur].d
        for u, sgn in g.adjacency[cur]:
            su = summaries[u]
            if su is None or su.d != d - 1:
                continue
            rem = need * sgn
            if (rem > 0 and su.sigma_max == 1) or (rem < 0 and su.sigma_min == -1):
                path.append(u)
                cur = u
                need = rem
                break
        else:
            raise AssertionError("sign-annotated BFS is inconsistent")
    path.reverse()
    return path


def _disjoint_opposite_paths(g: SignedGraph, u: int, v: int) -> tuple[list[int], list[int], int, int]:
    """Internally disjoint opposite-sign shortest u-v paths.

    For a minimum-distance incompatible pair any positive and negative
    shortest paths are already internally disjoint: a shared internal
    vertex would split them into equal-length segments, one segment pair
    of which is an incompatible pair at smaller distance.  If the
    recovered paths do intersect we recurse on that closer pair.
    """
    summaries = signed_bfs(g, u)
    p_pos = _reconstruct_path(g, summaries, u, v, 1)
    p_neg = _reconstruct_path(g, summaries, u, v, -1)
    if not (set(p_pos[1:-1]) & set(p_neg[1:-1])):
        return p_pos, p_neg, u, v
    # Defensive reroute: locate an equal-length opposite-sign segment pair
    # between consecutive common vertices and recurse on its endpoints.
    common = sorted(({u, v} | (set(p_pos) & set(p_neg))), key=lambda w: summaries[w].d)
    for a, b in zip(common, common[1:]):
        seg_sum = signed_bfs(g, a)[b]
        if seg_sum is not None and not seg_sum.compatible:
            return _disjoint_opposite_paths(g, a, b)
    raise AssertionError("intersecting opposite-sign paths with no closer incompatible pair")


def least_incompatible_witness(g: SignedGraph) -> IncompatibilityWitness | None:
    """Witness for the incompatible pair at least distance, or None if compatible.

    The union of the two returned paths is an even negative cycle of length
    2k whose diametrically opposite vertices are the returned pair, and no
    incompatible pair exists at distance below k.
    """
    pairs = incompatible_pairs(g)
    if not pairs:
        return None
    u, v = pairs[0]
    p_pos, p_neg, wu, wv = _disjoint_opposite_paths(g, u, v)
    cycle = tuple(p_pos + p_neg[-2:0:-1])
    return IncompatibilityWitness(
        pair=(wu, wv),
        path_pos=tuple(p_pos),
        path_neg=tuple(p_neg),
        cycle=cycle,
    )


def associated_complete(g: SignedGraph, which: str = "max") -> SignedGraph:
    """Complete signed graph: existing edges keep their sign, the rest get
    the shortest-path sign (sigma_max or sigma_min).

    When g is compatible the two variants agree and the result is the
    associated signed complete graph of g.
    """
    w = _check_which(which)
    if g.n < 2:
        raise ValueError("associated complete graph needs at least 2 vertices")
    rows = _all_pairs(g)
    edges = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                edges.append((u, v, g.sign(u, v)))
            else:
                summ = rows[u][v]
                edges.append((u, v, summ.sigma_max if w == "max" else summ.sigma_min))
    return SignedGraph(g.n, tuple(edges))


def brute_force_summary(g: SignedGraph, u: int, v: int, max_n: int = 12) -> PairDistanceSummary:
    """Test oracle: enumerate every shortest u-v path and summarize its signs.

    Walks the BFS DAG from u by depth-limited DFS along distance-decreasing
    edges, multiplying signs path by path.  Kept independent of signed_bfs;
    bounded to small graphs because enumeration is exhaustive.
    """
    if g.n > max_n:
        raise ValueError(f"oracle bound exceeded: n={g.n} > {max_n}")
    _require_connected(g)
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y, _ in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    signs: set[int] = set()

    def walk_back(x: int, acc: int) -> None:
        if x == u:
            signs.add(acc)
            return
        for y, sgn in g.adjacency[x]:
            if dist[y] == dist[x] - 1:
                walk_back(y, acc * sgn)

    walk_back(v, 1)
    return PairDistanceSummary(
        d=dist[v],
        sigma_max=max(signs),
        sigma_min=min(signs),
    )
