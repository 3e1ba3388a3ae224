"""Long-diameter corridors from LFSR sequences, and their doubling into pseudo-manifolds.

Vertex encodings (normative, also written into file comments):

* colored LFSR vertex ``(u, c)`` with ``u`` in GF(q), ``c`` in ``[0, d+2)``
  gets id ``index(u) + q * c``;
* copy ``j`` in ``{1, 2}`` of vertex ``v`` gets id ``2 * v + (j - 1)``.

Every builder checks its own output and raises ConstructionCheckFailed
rather than return something unverified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .complex import (
    DualShape,
    PureComplex,
    classify_dual,
    diameter,
    is_pseudo_manifold,
    ridge_index,
)
from .errors import (
    ConstructionCheckFailed,
    EmptyComplex,
    IndexOutOfRange,
    NoPolynomial,
    NotACorridor,
    NotAClosedCorridor,
    NotFound,
    NoValidGlueChoice,
    NotPrimitive,
    TooSmall,
    UnusedVertices,
)
from .field import make_field
from .lfsr import default_seed, lfsr_generate
from .primpoly import Polynomial, find_primitive_all_nonzero, is_primitive


def colored_id(u: int, c: int, q: int) -> int:
    return u + q * c


def doubled_id(v: int, copy: int) -> int:
    return 2 * v + (copy - 1)


def undouble(vid: int) -> tuple[int, int]:
    v, r = divmod(vid, 2)
    return v, r + 1


def lfsr_period_length(q: int, d: int) -> int:
    """Number of facets of the LFSR complex: lcm(q^(d-1) - 1, d + 2)."""
    return lcm(q ** (d - 1) - 1, d + 2)


def build_lfsr_complex(q: int, d: int, poly: Polynomial | None = None, seed=None) -> PureComplex:
    """Closed corridor of facet size d on (d+2)q colored vertices.

    The LFSR sequence of a degree d-1 primitive polynomial with no zero
    coefficient is colored cyclically mod d+2; the facets are its windows of
    length d over one full period of the colored sequence.  Ridges that skip
    an interior window position belong to one facet only, so for d >= 3 the
    result has boundary.
    """
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    F = make_field(q)
    if poly is None:
        try:
            poly = find_primitive_all_nonzero(F, d - 1)
        except NotFound as exc:
            raise NoPolynomial(f"no all-nonzero primitive polynomial of degree {d - 1} over GF({q})") from exc
    else:
        if poly.field != F or poly.degree != d - 1:
            raise ValueError(f"polynomial must have degree {d - 1} over GF({q})")
        if not poly.all_nonzero():
            raise ValueError(f"polynomial {poly} has a zero coefficient")
        if not is_primitive(poly):
            raise NotPrimitive(f"{poly} is not primitive over GF({q})")
    if seed is None:
        seed = default_seed(d - 1)
    colors = d + 2
    P = lfsr_period_length(q, d)
    u = lfsr_generate(poly, seed, P + d - 1)
    v = [colored_id(u[i], i % colors, q) for i in range(P + d - 1)]
    facets = [tuple(v[i : i + d]) for i in range(P)]
    seed_txt = ",".join(str(s) for s in lfsr_generate(poly, seed, d - 1))
    if len(set(facets)) != P:
        raise ConstructionCheckFailed("LFSR facets are not pairwise distinct")
    C = PureComplex(
        d,
        colors * q,
        tuple(facets),
        (
            f"# encoding lfsr q={q} d={d} vertex=(u,c)->index(u)+{q}*c",
            f"# poly {','.join(map(str, poly.coeffs))} seed {seed_txt}",
        ),
    )
    cls = classify_dual(C)
    if cls.shape is not DualShape.CYCLE or len(cls.order) != P:
        raise ConstructionCheckFailed(f"dual graph is {cls.shape.value}, expected a {P}-cycle")
    _verify_window_ridges(C, [tuple(v[i : i + d]) for i in range(P)])
    return C


def _verify_window_ridges(C: PureComplex, windows) -> None:
    # dropping an end of window i leaves a ridge shared only with window i-1 or i+1;
    # dropping an interior vertex leaves a ridge of window i alone
    ridges = ridge_index(C)
    P = len(windows)
    for i, w in enumerate(windows):
        for pos in range(len(w)):
            r = tuple(sorted(w[:pos] + w[pos + 1 :]))
            if pos == 0:
                expected = {i, (i + 1) % P}
            elif pos == len(w) - 1:
                expected = {i, (i - 1) % P}
            else:
                expected = {i}
            if set(ridges[r]) != expected:
                raise ConstructionCheckFailed(
                    f"ridge {r} of window {i} lies in facets {ridges[r]}, expected {sorted(expected)}"
                )


def drop_facet(C: PureComplex, index: int) -> PureComplex:
    if not 0 <= index < len(C.facets):
        raise IndexOutOfRange(f"facet index {index} not in [0, {len(C.facets)})")
    if len(C.facets) < 2:
        raise EmptyComplex("dropping the only facet would leave an empty complex")
    facets = C.facets[:index] + C.facets[index + 1 :]
    return PureComplex(C.d, C.n, facets, C.comments + (f"# dropped facet {index}",))


@dataclass(frozen=True)
class CorridorFrame:
    """Facets of a corridor in path order with their exit vertices.

    ``a[i]`` is the vertex of ``F_i`` not in ``F_{i+1}`` and ``b[i]`` the
    vertex of ``F_i`` not in ``F_{i-1}``.  The end markers ``b[0]`` and
    ``a[-1]`` have no neighbour to define them and are picked as the smallest
    vertex different from the other marker.
    """

    facets: tuple[tuple[int, ...], ...]
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.facets) - 1


def _only(s: set) -> int:
    if len(s) != 1:
        raise ConstructionCheckFailed(f"expected a single exit vertex, got {sorted(s)}")
    return next(iter(s))


def corridor_frame(C: PureComplex) -> CorridorFrame:
    if len(C.facets) < 2:
        raise TooSmall("a corridor frame needs at least two facets")
    cls = classify_dual(C)
    if cls.shape is not DualShape.PATH:
        raise NotACorridor(f"dual graph is a {cls.shape.value}, not a path")
    facets = [C.facets[i] for i in cls.order]
    sets = [set(f) for f in facets]
    last = len(facets) - 1
    a = [0] * len(facets)
    b = [0] * len(facets)
    for i in range(last):
        a[i] = _only(sets[i] - sets[i + 1])
    for i in range(1, last + 1):
        b[i] = _only(sets[i] - sets[i - 1])
    b[0] = min(sets[0] - {a[0]})
    a[last] = min(sets[last] - {b[last]})
    return CorridorFrame(tuple(facets), tuple(a), tuple(b))


def _tied_colorings(facet, a: int, b: int):
    """All two-colorings of facet in which a and b get the same copy index."""
    for copies in product((1, 2), repeat=len(facet)):
        col = dict(zip(facet, copies))
        if col[a] == col[b]:
            yield tuple(sorted(doubled_id(v, col[v]) for v in facet))


def _cone_ball(ridge, apex: int):
    """Colorings of ridge minus apex, joined to both copies of apex."""
    rest = [v for v in ridge if v != apex]
    for copies in product((1, 2), repeat=len(rest)):
        yield tuple(sorted([doubled_id(apex, 1), doubled_id(apex, 2)] + [doubled_id(v, j) for v, j in zip(rest, copies)]))


def _verify_pm(D: PureComplex, expected_facets: int) -> None:
    if len(D.facets) != expected_facets:
        raise ConstructionCheckFailed(f"expected {expected_facets} facets, built {len(D.facets)}")
    bad = [r for r, fs in ridge_index(D).items() if len(fs) != 2]
    if bad:
        raise ConstructionCheckFailed(f"{len(bad)} ridges not in exactly two facets, e.g. {bad[0]}")
    if not is_pseudo_manifold(D):
        raise ConstructionCheckFailed("doubled complex is not strongly connected")


def double_corridor(C: PureComplex) -> PureComplex:
    """Pseudo-manifold without boundary on 2n vertices from a corridor on n vertices.

    Each facet F_i contributes its copies in which a_i and b_i share a color;
    the two leftover cross-polytope spheres at the ends are capped with cones.
    """
    if C.d < 2:
        raise ValueError("facets must have at least two vertices")
    frame = corridor_frame(C)
    unused = set(range(C.n)) - C.used_vertices()
    if unused:
        raise UnusedVertices(f"{len(unused)} ambient vertices unused, e.g. {min(unused)}")
    facets = []
    for f, a, b in zip(frame.facets, frame.a, frame.b):
        facets.extend(_tied_colorings(f, a, b))
    first, last = frame.facets[0], frame.facets[-1]
    r1 = sorted(set(first) - {frame.b[0]})
    r2 = sorted(set(last) - {frame.a[-1]})
    apex1 = r1[0]
    rest2 = [v for v in r2 if v != apex1]
    if not rest2:
        if len(r1) < 2:
            raise NoValidGlueChoice("both end ridges are the same single vertex")
        apex1 = r1[1]
        rest2 = r2
    apex2 = min(rest2)
    facets.extend(_cone_ball(r1, apex1))
    facets.extend(_cone_ball(r2, apex2))
    delta = frame.length
    D = PureComplex(
        C.d,
        2 * C.n,
        tuple(facets),
        (f"# encoding double v^j->2v+(j-1) from n={C.n} corridor length={delta}",),
    )
    _verify_pm(D, (delta + 2) * 2 ** (C.d - 1))
    diam = diameter(D)
    if diam < delta + 2:
        raise ConstructionCheckFailed(f"diameter {diam} below corridor length + 2 = {delta + 2}")
    return D


def double_closed_corridor(C: PureComplex) -> PureComplex:
    """Doubling of a closed corridor; no caps are needed."""
    if C.d < 2:
        raise ValueError("facets must have at least two vertices")
    cls = classify_dual(C)
    if cls.shape is not DualShape.CYCLE:
        raise NotAClosedCorridor(f"dual graph is a {cls.shape.value}, not a cycle")
    ring = [set(C.facets[i]) for i in cls.order]
    P = len(ring)
    facets = []
    for i, f in enumerate(ring):
        a = _only(f - ring[(i + 1) % P])
        b = _only(f - ring[i - 1])
        facets.extend(_tied_colorings(sorted(f), a, b))
    D = PureComplex(
        C.d,
        2 * C.n,
        tuple(facets),
        (f"# encoding double v^j->2v+(j-1) from n={C.n} closed corridor length={P}",),
    )
    _verify_pm(D, P * 2 ** (C.d - 1))
    return D


def project_facet(facet) -> tuple[int, ...]:
    """Forget copy indices; a facet of a doubled complex maps to a vertex multiset."""
    return tuple(sorted(undouble(v)[0] for v in facet))


def lfsr_lower_bound(n: int, d: int):
    """Corridor bound n^(d-1) / (d+2)^(d-1) - 3 (exact rational)."""
    return Fraction(n ** (d - 1), (d + 2) ** (d - 1)) - 3


def pm_lower_bound(n: int, d: int):
    """Pseudo-manifold bound n^(d-1) / (2(d+2))^(d-1) - 1 (exact rational)."""
    return Fraction(n ** (d - 1), (2 * (d + 2)) ** (d - 1)) - 1

