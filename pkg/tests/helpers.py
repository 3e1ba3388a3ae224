"""Independent oracles shared by the test modules."""

import random
from itertools import combinations

import numpy as np

from scxkit.complex import PureComplex


def adjacency_by_intersection(facets):
    m = len(facets)
    sets = [set(f) for f in facets]
    d = len(facets[0]) if facets else 0
    A = np.zeros((m, m), dtype=bool)
    for i, j in combinations(range(m), 2):
        if len(sets[i] & sets[j]) == d - 1:
            A[i, j] = A[j, i] = True
    return A


def apsp_diameter(facets):
    """Floyd-Warshall over the intersection-defined dual graph; None if disconnected."""
    A = adjacency_by_intersection(facets)
    m = len(facets)
    dist = np.where(A, 1.0, np.inf)
    np.fill_diagonal(dist, 0.0)
    for k in range(m):
        dist = np.minimum(dist, dist[:, k : k + 1] + dist[k : k + 1, :])
    if np.isinf(dist).any():
        return None
    return int(dist.max())


def ridge_counts_brute(facets):
    counts = {}
    for f in facets:
        for r in combinations(sorted(f), len(f) - 1):
            counts[r] = counts.get(r, 0) + 1
    return counts


def random_complex(rng: random.Random) -> PureComplex:
    d = rng.randint(2, 4)
    n = rng.randint(d, d + 4)
    pool = list(combinations(range(n), d))
    k = rng.randint(1, min(len(pool), 14))
    return PureComplex(d, n, tuple(rng.sample(pool, k)))

