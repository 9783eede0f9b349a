"""Cartesian, lexicographic and tensor products of signed graphs.

Product vertices (i, k) are flattened row-major to i*n2 + k so that the
Kronecker-block distance formulas line up with the vertex order.  Also
here: odd/even walk distances, the tensor distance formula, executable
checks of the product compatibility theorems, and a randomized search for
tensor-product counterexamples.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .core import SignedGraph, has_odd_cycle, is_connected
from .distance import brute_force_summary, incompatible_pairs, is_compatible

__all__ = [
    "pair_index",
    "index_pair",
    "cartesian",
    "lexicographic",
    "tensor",
    "tensor_is_connected",
    "OddEvenDistance",
    "odd_even_distance",
    "tensor_distance",
    "uniform_sign",
    "check_product_compatibility_theorems",
    "random_signed_gnp",
    "ConjectureCandidate",
    "conjecture_search",
]


def pair_index(i: int, k: int, n2: int) -> int:
    """Flat index of product vertex (i, k), row-major."""
    return i * n2 + k


def index_pair(idx: int, n2: int) -> tuple[int, int]:
    """Inverse of pair_index."""
    return divmod(idx, n2)


def cartesian(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """(i,j) ~ (k,l) iff one coordinate is fixed and the other moves along an
    edge; the product edge copies that edge's sign."""
    n2 = g2.n
    edges = []
    for i, k, s in g1.edges:
        for j in range(n2):
            edges.append((pair_index(i, j, n2), pair_index(k, j, n2), s))
    for j, l, s in g2.edges:
        for i in range(g1.n):
            edges.append((pair_index(i, j, n2), pair_index(i, l, n2), s))
    return SignedGraph.from_edges(g1.n * n2, edges)


def lexicographic(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """(i,j) ~ (k,l) iff i ~ k, or i = k and j ~ l; the sign comes from the
    first coordinate when it moves, from the second otherwise."""
    n2 = g2.n
    edges = []
    for i, k, s in g1.edges:
        for j in range(n2):
            for l in range(n2):
                edges.append((pair_index(i, j, n2), pair_index(k, l, n2), s))
    for i in range(g1.n):
        for j, l, s in g2.edges:
            edges.append((pair_index(i, j, n2), pair_index(i, l, n2), s))
    return SignedGraph.from_edges(g1.n * n2, edges)


def tensor(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """(i,j) ~ (k,l) iff both coordinates move along edges; the sign is the
    product of the two factor edge signs.  May be disconnected."""
    n2 = g2.n
    edges = []
    for i, k, s1 in g1.edges:
        for j, l, s2 in g2.edges:
            edges.append((pair_index(i, j, n2), pair_index(k, l, n2), s1 * s2))
            edges.append((pair_index(i, l, n2), pair_index(k, j, n2), s1 * s2))
    return SignedGraph.from_edges(g1.n * n2, edges)


def tensor_is_connected(g1: SignedGraph, g2: SignedGraph) -> bool:
    """Connectivity criterion for tensor products of connected factors:
    connected iff at least one factor has an odd cycle."""
    if not is_connected(g1) or not is_connected(g2):
        raise ValueError("tensor connectivity criterion needs connected factors")
    return has_odd_cycle(g1) or has_odd_cycle(g2)


@dataclass(frozen=True)
class OddEvenDistance:
    """Lengths of the shortest odd and even walks between a vertex pair.

    math.inf marks that no walk of that parity exists (bipartite
    obstructions); od is odd and ed even whenever finite.
    """

    od: int | float
    ed: int | float


def odd_even_distance(g: SignedGraph, u: int, v: int) -> OddEvenDistance:
    """Shortest odd/even walk lengths via BFS on (vertex, parity) states."""
    if not is_connected(g):
        raise ValueError("odd/even distances need a connected graph")
    dist = [[-1, -1] for _ in range(g.n)]
    dist[u][0] = 0
    frontier = [(u, 0)]
    while frontier:
        nxt = []
        for x, p in frontier:
            for y, _ in g.adjacency[x]:
                q = 1 - p
                if dist[y][q] < 0:
                    dist[y][q] = dist[x][p] + 1
                    nxt.append((y, q))
        frontier = nxt
    ed = dist[v][0] if dist[v][0] >= 0 else math.inf
    od = dist[v][1] if dist[v][1] >= 0 else math.inf
    return OddEvenDistance(od=od, ed=ed)


def tensor_distance(
    g1: SignedGraph,
    g2: SignedGraph,
    uv1: tuple[int, int],
    uv2: tuple[int, int],
) -> int:
    """Distance in the tensor product from coordinate odd/even distances:
    min of max(od1, od2) and max(ed1, ed2)."""
    if not tensor_is_connected(g1, g2):
        raise ValueError("tensor product disconnected: neither factor has an odd cycle")
    u1, u2 = uv1
    v1, v2 = uv2
    a = odd_even_distance(g1, u1, v1)
    b = odd_even_distance(g2, u2, v2)
    d = min(max(a.od, b.od), max(a.ed, b.ed))
    assert d != math.inf
    return int(d)


def uniform_sign(g: SignedGraph) -> bool:
    """True iff all edges share one sign (vacuously true without edges)."""
    return len({s for _, _, s in g.edges}) <= 1


def check_product_compatibility_theorems(g1: SignedGraph, g2: SignedGraph) -> dict:
    """Evaluate the product compatibility laws by direct computation.

    Cartesian: product compatible iff both factors are (an equivalence;
    `agrees=False` indicates an implementation bug).  Lexicographic: a
    compatible g1 with uniformly signed g2 forces a compatible product
    (`sufficiency_holds=False` indicates a bug); the converse is NOT a law,
    complete products such as K2[K3] are compatible for any signs, so
    `iff_agrees` is informational only.  Tensor (when the product is
    connected): a compatible product forces compatible factors
    (`only_if_holds=False` indicates a bug); the converse fails in general,
    see conjecture_search.
    """
    if not is_connected(g1) or not is_connected(g2):
        raise ValueError("theorem checks need connected factors")
    c1 = is_compatible(g1)
    c2 = is_compatible(g2)
    report: dict = {"factor_compatible": (c1, c2)}

    cart = is_compatible(cartesian(g1, g2))
    report["cartesian"] = {
        "product_compatible": cart,
        "expected": c1 and c2,
        "agrees": cart == (c1 and c2),
    }

    lex = is_compatible(lexicographic(g1, g2))
    hypothesis = c1 and uniform_sign(g2)
    report["lexicographic"] = {
        "product_compatible": lex,
        "sufficient_hypothesis": hypothesis,
        "sufficiency_holds": (not hypothesis) or lex,
        "iff_agrees": lex == hypothesis,
    }

    if tensor_is_connected(g1, g2):
        tens = is_compatible(tensor(g1, g2))
        report["tensor"] = {
            "product_compatible": tens,
            "only_if_holds": (not tens) or (c1 and c2),
        }
    else:
        report["tensor"] = {"skipped": "product disconnected"}
    return report


def random_signed_gnp(n: int, p: float, rng: random.Random) -> SignedGraph:
    """Erdos-Renyi underlying graph with independent uniform edge signs."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.choice((1, -1))))
    return SignedGraph(n, tuple(edges))


def _random_connected_compatible(rng: random.Random, max_n: int, attempts: int = 300) -> SignedGraph | None:
    """Rejection-sample a connected compatible signed graph of order 2..max_n.

    Half the draws reuse a balanced signing (vertex potential), which is
    always compatible, so the accepted pool is not dominated by tiny or
    nearly all-positive graphs.
    """
    for _ in range(attempts):
        n = rng.randint(2, max_n)
        p = rng.uniform(0.35, 0.9)
        g = random_signed_gnp(n, p, rng)
        if not is_connected(g):
            continue
        if rng.random() < 0.5:
            zeta = [rng.choice((1, -1)) for _ in range(n)]
            g = g.with_signs([zeta[u] * zeta[v] for u, v, _ in g.edges])
        if is_compatible(g):
            return g
    return None


@dataclass(frozen=True)
class ConjectureCandidate:
    """A compatible factor pair whose connected tensor product came out
    incompatible, with the offending pairs re-verified by the oracle."""

    trial: int
    g1: SignedGraph
    g2: SignedGraph
    product_pairs: tuple[tuple[int, int], ...]


def conjecture_search(
    trials: int,
    max_n: int = 7,
    seed: int = 0,
) -> list[ConjectureCandidate]:
    """Randomized search for compatible factor pairs with an incompatible
    connected tensor product.

    Samples pairs of connected compatible signed graphs with at least one
    non-bipartite factor and returns every pair whose tensor product is
    incompatible.  Such pairs exist: compatibility is NOT preserved by the
    tensor product (smallest example: all-positive K2 with K4 carrying one
    negative edge, where same-fiber product paths ride length-2 walks of
    the second factor that its compatibility does not constrain).  Each
    reported incompatible pair is re-verified with the brute-force path
    oracle before being returned.  Deterministic for a fixed seed: trial t
    uses its own RNG stream seeded by (seed, t), so results do not depend
    on scheduling.
    """
    out = []
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        g1 = _random_connected_compatible(rng, max_n)
        g2 = _random_connected_compatible(rng, max_n)
        if g1 is None or g2 is None:
            continue
        if not (has_odd_cycle(g1) or has_odd_cycle(g2)):
            continue
        prod = tensor(g1, g2)
        bad = incompatible_pairs(prod)
        if not bad:
            continue
        if prod.n <= 60:
            confirmed = tuple(
                (u, v)
                for u, v in bad
                if not brute_force_summary(prod, u, v, max_n=prod.n).compatible
            )
        else:
            confirmed = tuple(bad)
        if confirmed:
            out.append(ConjectureCandidate(trial=t, g1=g1, g2=g2, product_pairs=confirmed))
    out.sort(key=lambda c: c.trial)
    return out
