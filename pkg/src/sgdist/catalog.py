"""Named signed graph generators and the signed Petersen census.

The Petersen graph uses the canonical numbering: outer 5-cycle 0..4, inner
pentagram 5..9 (5+i adjacent to 5+((i+2) mod 5)), spokes i to i+5.  Sign
vectors for Petersen signings follow PETERSEN_EDGES order: the five outer
edges, then the five inner edges, then the five spokes.

Every signing of the Petersen graph is geodetic, hence compatible, so each
one has a single distance matrix D.  Grouping all 2^15 signings by the
characteristic polynomial of D recovers exactly six classes, one per
switching isomorphism type of minimal signed Petersen graph.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import SignedGraph
from .spectra import IntPolynomial, char_poly_batch

__all__ = [
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "petersen_graph",
    "petersen_signing",
    "PETERSEN_EDGES",
    "PETERSEN_CLASS_POLYNOMIALS",
    "generate",
    "PetersenClass",
    "PetersenClassTable",
    "enumerate_petersen_signings",
]


def _check_pattern(signs: Sequence[int], expected: int, what: str) -> tuple[int, ...]:
    if len(signs) != expected:
        raise ValueError(f"{what} needs {expected} signs, got {len(signs)}")
    return tuple(int(s) for s in signs)


def path_graph(n: int, signs: Sequence[int]) -> SignedGraph:
    """Path 0-1-...-(n-1) with one sign per edge."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    pat = _check_pattern(signs, n - 1, f"path on {n} vertices")
    return SignedGraph(n, tuple((i, i + 1, s) for i, s in enumerate(pat)))


def cycle_graph(n: int, signs: Sequence[int]) -> SignedGraph:
    """Cycle 0-1-...-(n-1)-0; signs[i] labels the edge (i, i+1 mod n)."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    pat = _check_pattern(signs, n, f"cycle on {n} vertices")
    return SignedGraph.from_edges(n, [(i, (i + 1) % n, pat[i]) for i in range(n)])


def complete_graph(n: int, sign: int = 1) -> SignedGraph:
    """Complete graph with one uniform sign."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return SignedGraph(n, tuple((u, v, sign) for u in range(n) for v in range(u + 1, n)))


# Canonical edge order for Petersen sign vectors: outer, inner, spokes.
PETERSEN_EDGES: tuple[tuple[int, int], ...] = tuple(
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
)


def petersen_signing(signs: Sequence[int]) -> SignedGraph:
    """Signed Petersen graph from 15 signs in PETERSEN_EDGES order."""
    pat = _check_pattern(signs, 15, "Petersen signing")
    return SignedGraph.from_edges(10, [(u, v, s) for (u, v), s in zip(PETERSEN_EDGES, pat)])


def petersen_graph(sign: int = 1) -> SignedGraph:
    """Petersen graph with one uniform sign."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return petersen_signing([sign] * 15)


def generate(kind: str, params: Sequence[str]) -> SignedGraph:
    """Build a named graph from string parameters (the CLI `gen` surface).

    path N PATTERN / cycle N PATTERN / complete N SIGN / petersen SIGN,
    where PATTERN is a string over '+'/'-' and SIGN is '+' or '-'.
    """
    def parse_sign(tok: str) -> int:
        if tok in ("+", "+1"):
            return 1
        if tok in ("-", "-1"):
            return -1
        raise ValueError(f"bad sign {tok!r} (use + or -)")

    def parse_pattern(tok: str) -> list[int]:
        return [parse_sign(ch) for ch in tok]

    if kind == "path":
        if len(params) != 2:
            raise ValueError("usage: gen path N PATTERN")
        return path_graph(int(params[0]), parse_pattern(params[1]))
    if kind == "cycle":
        if len(params) != 2:
            raise ValueError("usage: gen cycle N PATTERN")
        return cycle_graph(int(params[0]), parse_pattern(params[1]))
    if kind == "complete":
        if len(params) != 2:
            raise ValueError("usage: gen complete N SIGN")
        return complete_graph(int(params[0]), parse_sign(params[1]))
    if kind == "petersen":
        if len(params) != 1:
            raise ValueError("usage: gen petersen SIGN")
        return petersen_graph(parse_sign(params[0]))
    raise ValueError(f"unknown kind {kind!r} (use path, cycle, complete or petersen)")


# Distance characteristic polynomials of the six minimal signed Petersen
# types, keyed by type label.  The census below must reproduce exactly this
# set; anything else is a hard failure.
PETERSEN_CLASS_POLYNOMIALS: dict[str, tuple[int, ...]] = {
    "+P": (1, 0, -135, -1080, -3645, -5832, -3645, 0, 0, 0, 0),
    "P1": (1, 0, -135, -504, 2851, 15688, -5229, -122256, -157680, 0, 0),
    "P2,2": (1, 0, -135, -216, 5587, 13648, -77957, -220888, 243912, 645984, -308880),
    "P2,3": (1, 0, -135, -184, 6211, 13720, -111981, -295840, 690800, 1968000, 0),
    "P3,2": (1, 0, -135, 40, 6675, -4848, -140725, 195240, 986040, -2613600, 1724976),
    "P3,3": (1, 0, -135, -120, 6435, 6696, -145725, -126000, 1620000, 800000, -7200000),
}

_CLASS_ORDER = ("+P", "P1", "P2,2", "P2,3", "P3,2", "P3,3")


@dataclass(frozen=True)
class PetersenClass:
    label: str
    representative: SignedGraph
    char_poly: IntPolynomial
    size: int


@dataclass(frozen=True)
class PetersenClassTable:
    """The six signing classes, in label order, covering all 2^15 signings."""

    classes: tuple[PetersenClass, ...]

    def by_label(self, label: str) -> PetersenClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(label)

    @property
    def total(self) -> int:
        return sum(c.size for c in self.classes)


def _petersen_midpoints() -> list[tuple[int, int, int, int]]:
    """(u, v, e1, e2) for each non-adjacent pair: e1, e2 index the two edges
    of the unique 2-path u-w-v in PETERSEN_EDGES order."""
    edge_idx = {}
    for i, (u, v) in enumerate(PETERSEN_EDGES):
        edge_idx[(u, v)] = i
        edge_idx[(v, u)] = i
    adj: list[set[int]] = [set() for _ in range(10)]
    for u, v in PETERSEN_EDGES:
        adj[u].add(v)
        adj[v].add(u)
    out = []
    for u in range(10):
        for v in range(u + 1, 10):
            if v in adj[u]:
                continue
            mids = sorted(adj[u] & adj[v])
            if len(mids) != 1:
                raise AssertionError("Petersen must be geodetic with diameter 2")
            w = mids[0]
            out.append((u, v, edge_idx[(u, w)], edge_idx[(w, v)]))
    return out


_MIDPOINTS = _petersen_midpoints()


def _signs_for_codes(codes: np.ndarray) -> np.ndarray:
    """(len(codes), 15) sign array; bit b set in a code makes edge b negative."""
    bits = (codes[:, None] >> np.arange(15)) & 1
    return (1 - 2 * bits).astype(np.int64)


def _distance_matrices_for_codes(codes: np.ndarray) -> np.ndarray:
    """Stack of distance matrices, one per signing code.

    Adjacent pairs carry the edge sign; each non-adjacent pair carries twice
    the sign of its unique 2-path.  Valid because every Petersen signing is
    geodetic with diameter 2.
    """
    signs = _signs_for_codes(codes)
    d = np.zeros((len(codes), 10, 10), dtype=np.int64)
    for i, (u, v) in enumerate(PETERSEN_EDGES):
        d[:, u, v] = signs[:, i]
        d[:, v, u] = signs[:, i]
    for u, v, e1, e2 in _MIDPOINTS:
        val = 2 * signs[:, e1] * signs[:, e2]
        d[:, u, v] = val
        d[:, v, u] = val
    return d


def _census_chunk(bounds: tuple[int, int]) -> dict[tuple[int, ...], tuple[int, tuple[int, tuple[int, ...]]]]:
    """Polynomial -> (count, best representative key) over a code range.

    The representative key is (negative edge count, sign tuple); smaller is
    better, making the census result independent of chunking.
    """
    start, stop = bounds
    codes = np.arange(start, stop, dtype=np.int64)
    polys = char_poly_batch(_distance_matrices_for_codes(codes))
    signs = _signs_for_codes(codes)
    acc: dict[tuple[int, ...], tuple[int, tuple[int, tuple[int, ...]]]] = {}
    for row, poly in zip(signs, polys):
        key = poly.coeffs
        sign_tuple = tuple(int(s) for s in row)
        rep_key = (sum(1 for s in sign_tuple if s < 0), sign_tuple)
        if key in acc:
            count, best = acc[key]
            acc[key] = (count + 1, min(best, rep_key))
        else:
            acc[key] = (1, rep_key)
    return acc


def enumerate_petersen_signings(workers: int | None = None) -> PetersenClassTable:
    """Census of all 2^15 Petersen signings by distance characteristic
    polynomial.

    Returns the six classes with sizes and a canonical representative per
    class (fewest negative edges, then lexicographically smallest sign
    vector).  Raises RuntimeError if the census does not produce exactly
    the six known polynomials.  `workers` > 1 splits the code range over a
    process pool; the merged result is identical for any worker count.
    """
    total = 1 << 15
    if workers and workers > 1:
        chunk = 1 << 12
        bounds = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
        with multiprocessing.Pool(workers) as pool:
            partials = pool.map(_census_chunk, bounds)
    else:
        partials = [_census_chunk((0, total))]

    merged: dict[tuple[int, ...], tuple[int, tuple[int, tuple[int, ...]]]] = {}
    for part in partials:
        for key, (count, best) in part.items():
            if key in merged:
                c0, b0 = merged[key]
                merged[key] = (c0 + count, min(b0, best))
            else:
                merged[key] = (count, best)

    expected = {poly: label for label, poly in PETERSEN_CLASS_POLYNOMIALS.items()}
    if len(merged) != 6 or set(merged) != set(expected):
        raise RuntimeError(
            f"Petersen census produced {len(merged)} polynomial classes; "
            "expected the six known ones"
        )
    # Anchor signings pin three labels independently of the polynomial table:
    # all-positive is +P, a single negative edge lands in P1, all-negative in P3,3.
    anchor_polys = char_poly_batch(
        _distance_matrices_for_codes(np.array([0, 1, total - 1], dtype=np.int64))
    )
    for poly, label in zip(anchor_polys, ("+P", "P1", "P3,3")):
        if poly.coeffs != PETERSEN_CLASS_POLYNOMIALS[label]:
            raise RuntimeError(f"anchor signing for {label} has an unexpected polynomial")
    classes = []
    for label in _CLASS_ORDER:
        poly = PETERSEN_CLASS_POLYNOMIALS[label]
        count, (_, sign_tuple) = merged[poly]
        classes.append(
            PetersenClass(
                label=label,
                representative=petersen_signing(sign_tuple),
                char_poly=IntPolynomial(poly),
                size=count,
            )
        )
    table = PetersenClassTable(classes=tuple(classes))
    if table.total != total:
        raise RuntimeError(f"class sizes sum to {table.total}, expected {total}")
    return table
