"""Pure simplicial complexes, their ridges and dual graphs.

A pure complex is a list of d-element vertex sets (facets) over the ambient
vertex set ``[0, n)``.  Two facets are adjacent in the dual graph when they
share a ridge, i.e. d - 1 vertices.
"""

from __future__ import annotations

import enum
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import NamedTuple

from .errors import (
    BadHeader,
    Disconnected,
    DuplicateFacet,
    EmptyComplex,
    FacetSizeMismatch,
    MalformedFacet,
    TooLarge,
    VertexOutOfRange,
)
from .primpoly import INT_LIMIT

NORMALITY_LIMIT = 2000

Facet = tuple[int, ...]


@dataclass(frozen=True)
class PureComplex:
    d: int
    n: int
    facets: tuple[Facet, ...]
    comments: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"facet size must be >= 1, got {self.d}")
        facets = tuple(tuple(sorted(int(v) for v in f)) for f in self.facets)
        seen = set()
        for f in facets:
            if len(f) != self.d or len(set(f)) != self.d:
                raise FacetSizeMismatch(f"facet {f} does not have {self.d} distinct vertices")
            if f[0] < 0 or f[-1] >= self.n:
                raise VertexOutOfRange(f"facet {f} has a vertex outside [0, {self.n})")
            if f in seen:
                raise DuplicateFacet(f"facet {f} listed twice")
            seen.add(f)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "comments", tuple(self.comments))

    def __len__(self):
        return len(self.facets)

    def facet_set(self) -> frozenset[Facet]:
        return frozenset(self.facets)

    def used_vertices(self) -> set[int]:
        return {v for f in self.facets for v in f}


class RidgeIndex(dict):
    """Maps each ridge (sorted (d-1)-tuple) to the sorted facet indices containing it."""

    def multiplicities(self):
        return {r: len(fs) for r, fs in self.items()}


def ridges_of(f: Facet):
    return combinations(f, len(f) - 1)


def ridge_index(C: PureComplex) -> RidgeIndex:
    idx = RidgeIndex()
    for i, f in enumerate(C.facets):
        for r in ridges_of(f):
            idx.setdefault(r, []).append(i)
    return idx


@dataclass(frozen=True)
class DualGraph:
    adjacency: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.adjacency)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def edges(self):
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j]


def dual_graph(C: PureComplex, ridges: RidgeIndex | None = None) -> DualGraph:
    if ridges is None:
        ridges = ridge_index(C)
    adj = [set() for _ in C.facets]
    for fs in ridges.values():
        for i, j in combinations(fs, 2):
            adj[i].add(j)
            adj[j].add(i)
    return DualGraph(tuple(tuple(sorted(s)) for s in adj))


def bfs_distances(G: DualGraph, source: int) -> list[int]:
    """Hop distances from source; -1 marks unreachable nodes."""
    dist = [-1] * len(G)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _components(G: DualGraph, nodes=None) -> list[list[int]]:
    allowed = set(range(len(G))) if nodes is None else set(nodes)
    comps, seen = [], set()
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


class DualShape(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    OTHER_CONNECTED = "other"
    DISCONNECTED = "disconnected"


class Classification(NamedTuple):
    shape: DualShape
    order: tuple[int, ...]  # facet indices along the path/cycle; empty otherwise


def _walk(G: DualGraph, start: int) -> list[int]:
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in G.adjacency[cur] if w != prev]
        if not nxt or nxt[0] == start:
            return order
        prev, cur = cur, min(nxt)
        order.append(cur)


def classify_dual(C: PureComplex, G: DualGraph | None = None) -> Classification:
    """Classify the dual graph as a path, a cycle, something else, or disconnected.

    Paths are listed from their lower-indexed end; cycles start at facet 0 and
    go first to its lower-indexed neighbour.
    """
    if not C.facets:
        raise EmptyComplex("complex has no facets")
    if G is None:
        G = dual_graph(C)
    m = len(G)
    if len(_components(G)) > 1:
        return Classification(DualShape.DISCONNECTED, ())
    degrees = [G.degree(i) for i in range(m)]
    n_edges = sum(degrees) // 2
    if max(degrees) <= 2 and n_edges == m - 1:
        start = min(i for i in range(m) if degrees[i] <= 1)
        return Classification(DualShape.PATH, tuple(_walk(G, start)))
    if all(x == 2 for x in degrees):
        return Classification(DualShape.CYCLE, tuple(_walk(G, 0)))
    return Classification(DualShape.OTHER_CONNECTED, ())


def is_induced_path(facets) -> bool:
    """Whether consecutive facets share d-1 vertices and no other pair does.

    This is the snake condition in the Johnson graph J(n, d), checked by
    direct intersection counts.
    """
    facets = [frozenset(f) for f in facets]
    if not facets:
        return False
    d = len(facets[0])
    for i, j in combinations(range(len(facets)), 2):
        shared = len(facets[i] & facets[j]) == d - 1
        if shared != (j == i + 1):
            return False
    return True


def is_strongly_connected(C: PureComplex, G: DualGraph | None = None) -> bool:
    if not C.facets:
        return False
    if G is None:
        G = dual_graph(C)
    return len(_components(G)) == 1


def is_pseudo_manifold(C: PureComplex) -> bool:
    """Strongly connected and every ridge lies in exactly two facets (no boundary)."""
    ridges = ridge_index(C)
    if any(len(fs) != 2 for fs in ridges.values()):
        return False
    return is_strongly_connected(C, dual_graph(C, ridges))


def is_semi_duoid(C: PureComplex) -> bool:
    return all(len(fs) % 2 == 0 for fs in ridge_index(C).values())


def boundary_ridges(C: PureComplex) -> list[Facet]:
    return sorted(r for r, fs in ridge_index(C).items() if len(fs) == 1)


def is_normal(C: PureComplex) -> bool:
    """Every facet pair is joined by a dual path inside the star of their intersection."""
    m = len(C.facets)
    if m > NORMALITY_LIMIT:
        raise TooLarge(f"{m} facets exceeds the normality guard of {NORMALITY_LIMIT}")
    G = dual_graph(C)
    sets = [frozenset(f) for f in C.facets]
    label_cache: dict[frozenset, dict[int, int]] = {}
    for i, j in combinations(range(m), 2):
        common = sets[i] & sets[j]
        labels = label_cache.get(common)
        if labels is None:
            star = [k for k in range(m) if common <= sets[k]]
            labels = {}
            for c, comp in enumerate(_components(G, star)):
                for k in comp:
                    labels[k] = c
            label_cache[common] = labels
        if labels[i] != labels[j]:
            return False
    return True


def eccentricities(C: PureComplex, threads: int = 1, G: DualGraph | None = None) -> list[int]:
    """BFS eccentricity of every facet; raises Disconnected if any node is unreachable."""
    if not C.facets:
        raise EmptyComplex("complex has no facets")
    if G is None:
        G = dual_graph(C)

    def ecc(s):
        dist = bfs_distances(G, s)
        if min(dist) < 0:
            raise Disconnected("dual graph is disconnected")
        return max(dist)

    sources = range(len(G))
    if threads <= 1:
        return [ecc(s) for s in sources]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(ecc, sources))


def diameter(C: PureComplex, threads: int = 1) -> int:
    return max(eccentricities(C, threads))


def hirsch_upper_bound(n: int, d: int) -> int:
    """floor(C(n, d-1) / (d-1)), the ridge-counting bound on the diameter."""
    if not n >= d >= 2:
        raise ValueError(f"need n >= d >= 2, got n={n}, d={d}")
    bound = comb(n, d - 1) // (d - 1)
    if bound > INT_LIMIT:
        raise OverflowError(f"bound for n={n}, d={d} exceeds the supported integer width")
    return bound


# --- scx v1 text format ---

HEADER_PREFIX = "# scx v1"


def serialize_complex(C: PureComplex) -> str:
    lines = [f"{HEADER_PREFIX} d={C.d} n={C.n}"]
    lines += [c if c.startswith("#") else "# " + c for c in C.comments]
    lines += [" ".join(map(str, f)) for f in C.facets]
    return "\n".join(lines) + "\n"


def _parse_header(line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 5 or parts[:3] != HEADER_PREFIX.split():
        raise BadHeader(f"bad header line: {line!r}")
    vals = {}
    for token, key in zip(parts[3:], ("d", "n")):
        name, _, value = token.partition("=")
        if name != key or not value.isdigit():
            raise BadHeader(f"bad header line: {line!r}")
        vals[key] = int(value)
    if vals["d"] < 1:
        raise BadHeader(f"facet size must be >= 1: {line!r}")
    return vals["d"], vals["n"]


def parse_complex(text: str) -> PureComplex:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise BadHeader("empty input")
    d, n = _parse_header(lines[0])
    comments, facets, seen = [], [], set()
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("#"):
            comments.append(line)
            continue
        if not line.strip():
            continue
        try:
            f = tuple(int(t) for t in line.split())
        except ValueError:
            raise MalformedFacet(f"line {lineno}: not a list of integers: {line!r}") from None
        if len(f) != d:
            raise FacetSizeMismatch(f"line {lineno}: expected {d} vertices, got {len(f)}")
        if any(v < 0 or v >= n for v in f):
            raise VertexOutOfRange(f"line {lineno}: vertex outside [0, {n})")
        if any(a >= b for a, b in zip(f, f[1:])):
            raise MalformedFacet(f"line {lineno}: vertices not strictly increasing")
        if f in seen:
            raise DuplicateFacet(f"line {lineno}: duplicate facet {f}")
        seen.add(f)
        facets.append(f)
    return PureComplex(d, n, tuple(facets), tuple(comments))


def read_complex(path) -> PureComplex:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_complex(fh.read())


def write_complex(C: PureComplex, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_complex(C))
