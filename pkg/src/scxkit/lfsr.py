"""Linear recurrence sequences over GF(q).

For ``f = x^D + a_1 x^{D-1} + ... + a_D`` the sequence obeys
``u[n+D] = -(a_1 u[n+D-1] + ... + a_D u[n])``.  Terms are canonical field
indices; indexing starts at 0.
"""

from __future__ import annotations

from collections import Counter
from itertools import product

from .errors import NotPeriodic, NotPrimitive, TooLarge, ZeroSeed
from .field import FieldElement, canonical_index
from .primpoly import ENUMERATION_LIMIT, Polynomial, is_primitive


def default_seed(D: int) -> tuple[int, ...]:
    return (1,) + (0,) * (D - 1)


def _normalize_seed(poly: Polynomial, seed) -> tuple[int, ...]:
    if seed is None:
        return default_seed(poly.degree)
    seed = tuple(canonical_index(s) if isinstance(s, FieldElement) else int(s) for s in seed)
    if len(seed) != poly.degree:
        raise ValueError(f"seed has length {len(seed)}, expected {poly.degree}")
    if any(not 0 <= s < poly.field.q for s in seed):
        raise ValueError(f"seed {seed} has entries outside GF({poly.field.q})")
    if not any(seed):
        raise ZeroSeed("seed must be a nonzero vector")
    return seed


def _step(poly: Polynomial, window) -> int:
    # window = (u[n], ..., u[n+D-1]); a_j pairs with u[n+D-j]
    F = poly.field
    acc = 0
    D = poly.degree
    for j, a in enumerate(poly.coeffs, start=1):
        if a:
            acc = F.add(acc, F.mul(a, window[D - j]))
    return F.neg(acc)


def lfsr_generate(poly: Polynomial, seed=None, count: int = 0) -> list[int]:
    """Return u_0, ..., u_{count-1}; the seed supplies the first D terms."""
    seed = _normalize_seed(poly, seed)
    if count < 0:
        raise ValueError("count must be >= 0")
    D = poly.degree
    terms = list(seed[:count])
    while len(terms) < count:
        terms.append(_step(poly, terms[-D:]))
    return terms


def lfsr_period(poly: Polynomial, seed=None) -> int:
    """Smallest P > 0 with u[i+P] = u[i] for all i.

    Found by running the state vector until the initial state recurs.
    Raises NotPeriodic when the run falls into a cycle that avoids the
    initial state (only possible when a_D = 0).
    """
    state = _normalize_seed(poly, seed)
    start = state
    seen = {state}
    steps = 0
    while True:
        state = state[1:] + (_step(poly, state),)
        steps += 1
        if state == start:
            return steps
        if state in seen:
            raise NotPeriodic(f"sequence from seed {start} is not purely periodic")
        seen.add(state)


def windows(terms, D: int, count: int) -> list[tuple[int, ...]]:
    return [tuple(terms[i : i + D]) for i in range(count)]


def window_coverage(poly: Polynomial) -> bool:
    """True iff one period's length-D windows hit every nonzero vector exactly once."""
    F, D = poly.field, poly.degree
    total = F.q**D
    if total > ENUMERATION_LIMIT:
        raise TooLarge(f"q^D = {total} exceeds {ENUMERATION_LIMIT}")
    if not is_primitive(poly):
        raise NotPrimitive(f"{poly} is not primitive over {F}")
    period = total - 1
    terms = lfsr_generate(poly, None, period + D - 1)
    counts = Counter(windows(terms, D, period))
    nonzero = [v for v in product(range(F.q), repeat=D) if any(v)]
    return len(counts) == len(nonzero) and all(counts[v] == 1 for v in nonzero)


def lfsr_reverse(poly: Polynomial, tail, count: int) -> list[int]:
    """Run the recurrence backwards from the last D terms ``tail``.

    Returns ``count`` terms ending with ``tail``.  Needs a_D != 0.
    """
    F, D = poly.field, poly.degree
    a_D = poly.coeffs[-1]
    if a_D == 0:
        raise ValueError("backward stepping needs a nonzero constant coefficient")
    inv_aD = F.inv(a_D)
    terms = list(tail)
    while len(terms) < count:
        # a_D u[n] = -(u[n+D] + a_1 u[n+D-1] + ... + a_{D-1} u[n+1])
        acc = terms[D - 1]
        for j, a in enumerate(poly.coeffs[:-1], start=1):
            if a:
                acc = F.add(acc, F.mul(a, terms[D - 1 - j]))
        terms.insert(0, F.mul(F.neg(acc), inv_aD))
    return terms[len(terms) - count :]
