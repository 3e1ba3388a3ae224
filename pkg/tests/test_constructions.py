from math import lcm

import pytest

from helpers import apsp_diameter, ridge_counts_brute
from scxkit.complex import (
    DualShape,
    PureComplex,
    classify_dual,
    diameter,
    dual_graph,
    hirsch_upper_bound,
    is_induced_path,
    is_pseudo_manifold,
    is_semi_duoid,
    ridge_index,
)
from scxkit.constructions import (
    build_lfsr_complex,
    corridor_frame,
    double_closed_corridor,
    double_corridor,
    drop_facet,
    lfsr_lower_bound,
    pm_lower_bound,
    project_facet,
    undouble,
)
from scxkit.errors import (
    ConstructionCheckFailed,
    EmptyComplex,
    IndexOutOfRange,
    NoPolynomial,
    NotACorridor,
    NotAClosedCorridor,
    NotPrimitive,
    TooSmall,
    UnusedVertices,
)
from scxkit.primpoly import Polynomial

INSTANCES = [(2, 3), (3, 3), (3, 4), (5, 3), (4, 4)]


@pytest.fixture(scope="module")
def lfsr23():
    return build_lfsr_complex(2, 3)


def test_lfsr_q2_d3(lfsr23):
    C = lfsr23
    assert (C.d, C.n, len(C.facets)) == (3, 10, 15)
    # sequence 1,0,1 colored 0,1,2 -> ids 1+0, 0+2, 1+4
    assert C.facets[0] == (1, 2, 5)
    cls = classify_dual(C)
    assert cls.shape is DualShape.CYCLE and cls.order == tuple(range(15))
    assert diameter(C) == 7


def test_lfsr_explicit_poly_and_seed():
    C = build_lfsr_complex(2, 3, Polynomial.from_indices(2, (1, 1)), (1, 0))
    assert C == build_lfsr_complex(2, 3)
    shifted = build_lfsr_complex(2, 3, seed=(0, 1))
    assert classify_dual(shifted).shape is DualShape.CYCLE
    assert len(shifted.facets) == 15


def test_lfsr_q3_d3():
    C = build_lfsr_complex(3, 3)
    assert (C.n, len(C.facets)) == (15, 40)
    assert classify_dual(C).shape is DualShape.CYCLE


def test_lfsr_no_polynomial():
    with pytest.raises(NoPolynomial):
        build_lfsr_complex(2, 4)


def test_lfsr_rejects_bad_polynomials():
    with pytest.raises(NotPrimitive):
        build_lfsr_complex(5, 3, Polynomial.from_indices(5, (1, 1)))
    with pytest.raises(ValueError):
        build_lfsr_complex(3, 3, Polynomial.from_indices(3, (0, 1)))
    with pytest.raises(ValueError):
        build_lfsr_complex(3, 3, Polynomial.from_indices(3, (1,)))
    with pytest.raises(ValueError):
        build_lfsr_complex(3, 1)


@pytest.mark.parametrize("q, d", INSTANCES + [(5, 2), (7, 2), (4, 3)])
def test_lfsr_structure(q, d):
    C = build_lfsr_complex(q, d)
    P = lcm(q ** (d - 1) - 1, d + 2)
    assert len(C.facets) == P
    assert P >= q ** (d - 1) - 1 == C.n ** (d - 1) // (d + 2) ** (d - 1) - 1
    G = dual_graph(C)
    assert all(G.degree(i) == 2 for i in range(P))
    assert classify_dual(C).shape is DualShape.CYCLE
    for f in C.facets:
        assert len({v // q for v in f}) == d  # colors distinct
    counts = ridge_counts_brute(C.facets)
    # consecutive windows share a ridge; ridges skipping an interior position are boundary
    assert sorted(counts.values()).count(2) == P
    assert sorted(counts.values()).count(1) == P * (d - 2)
    assert is_pseudo_manifold(C) == (d == 2)
    assert diameter(C) == P // 2 <= hirsch_upper_bound(C.n, d)


def test_used_vertices_not_always_full():
    # q = 4, d = 3: the period 15 is a multiple of the 5 colors, so some colored vertices never occur
    C = build_lfsr_complex(4, 3)
    assert len(C.used_vertices()) == 13 < C.n == 20


def test_drop_facet_examples(lfsr23):
    D = drop_facet(lfsr23, 0)
    assert len(D.facets) == 14
    assert classify_dual(D).shape is DualShape.PATH
    assert diameter(D) == 13 >= lfsr_lower_bound(10, 3) == 1
    single = drop_facet(PureComplex(2, 4, ((1, 2), (2, 3))), 1)
    assert single.facets == ((1, 2),)
    assert classify_dual(single).shape is DualShape.PATH and diameter(single) == 0
    with pytest.raises(IndexOutOfRange):
        drop_facet(PureComplex(2, 4, ((1, 2), (2, 3))), 99)
    with pytest.raises(EmptyComplex):
        drop_facet(single, 0)


@pytest.mark.parametrize("q, d", INSTANCES)
def test_drop_facet_bound(q, d):
    C = build_lfsr_complex(q, d)
    P = len(C.facets)
    for i in (0, P // 2, P - 1):
        D = drop_facet(C, i)
        cls = classify_dual(D)
        assert cls.shape is DualShape.PATH
        assert is_induced_path([D.facets[j] for j in cls.order])
        assert diameter(D) == P - 2 >= lfsr_lower_bound(C.n, d)
        assert diameter(D) <= hirsch_upper_bound(C.n, d)


def test_corridor_frame_examples():
    fr = corridor_frame(PureComplex(2, 5, ((1, 2), (2, 3), (3, 4))))
    assert fr.a[:2] == (1, 2) and fr.b[1:] == (3, 4)
    assert fr.b[0] == 2 and fr.a[2] == 3
    fr = corridor_frame(PureComplex(3, 5, ((1, 2, 3), (2, 3, 4))))
    assert (fr.a[0], fr.b[1], fr.b[0], fr.a[1]) == (1, 4, 2, 2)
    with pytest.raises(NotACorridor):
        corridor_frame(PureComplex(2, 4, ((1, 2), (2, 3), (1, 3))))
    with pytest.raises(TooSmall):
        corridor_frame(PureComplex(2, 4, ((1, 2),)))


def test_corridor_frame_markers_distinct(lfsr23):
    fr = corridor_frame(drop_facet(lfsr23, 3))
    assert all(a != b for a, b in zip(fr.a, fr.b))


def _doubled(spec_facets, mapping):
    return {tuple(sorted(2 * mapping[v] + j - 1 for v, j in f)) for f in spec_facets}


def test_double_hand_instance():
    # {1,2},{2,3} relabelled 1,2,3 -> 0,1,2 so that every ambient vertex is used
    C = PureComplex(2, 3, ((0, 1), (1, 2)))
    D = double_corridor(C)
    m = {1: 0, 2: 1, 3: 2}
    expected = _doubled(
        [((1, 1), (2, 1)), ((1, 2), (2, 2)), ((2, 1), (3, 1)), ((2, 2), (3, 2)), ((1, 1), (1, 2)), ((3, 1), (3, 2))], m
    )
    assert D.facet_set() == expected
    assert D.n == 6
    assert classify_dual(D).shape is DualShape.CYCLE
    assert is_pseudo_manifold(D)
    assert diameter(D) == 3 == apsp_diameter(D.facets)


def test_double_requires_corridor(lfsr23):
    with pytest.raises(NotACorridor):
        double_corridor(lfsr23)
    with pytest.raises(UnusedVertices):
        double_corridor(PureComplex(2, 4, ((1, 2), (2, 3))))


@pytest.mark.parametrize("q, d", INSTANCES)
def test_double_corridor_invariants(q, d):
    C = drop_facet(build_lfsr_complex(q, d), 0)
    delta = len(C.facets) - 1
    D = double_corridor(C)
    assert D.n == 2 * C.n
    assert len(D.facets) == (delta + 2) * 2 ** (d - 1)
    assert set(ridge_index(D).multiplicities().values()) == {2}
    assert is_pseudo_manifold(D) and is_semi_duoid(D)
    assert D.used_vertices() == set(range(D.n))
    diam = diameter(D)
    assert diam >= delta + 2
    assert diam >= pm_lower_bound(D.n, d)
    assert diam <= hirsch_upper_bound(D.n, d)
    # projection: all but the 2^(d-1) cap facets land on facets of C
    originals = C.facet_set()
    off = [f for f in D.facets if project_facet(f) not in originals]
    assert len(off) == 2 * 2 ** (d - 2)
    for f in off:
        base = [undouble(v)[0] for v in f]
        assert len(set(base)) == d - 1  # the cone apex appears in both copies


def test_double_q2_d3_values(lfsr23):
    D = double_corridor(drop_facet(lfsr23, 0))
    assert (D.n, len(D.facets)) == (20, 60)
    assert diameter(D) >= 15
    assert pm_lower_bound(20, 3) == 3


def test_double_closed_lfsr(lfsr23):
    D = double_closed_corridor(lfsr23)
    assert len(D.facets) == 60
    assert is_pseudo_manifold(D)
    assert all(project_facet(f) in lfsr23.facet_set() for f in D.facets)


@pytest.mark.parametrize("q, d", [(3, 3), (3, 4), (4, 3)])
def test_double_closed_invariants(q, d):
    C = build_lfsr_complex(q, d)
    D = double_closed_corridor(C)
    assert len(D.facets) == len(C.facets) * 2 ** (d - 1)
    assert is_pseudo_manifold(D)


def test_double_closed_triangle_splits_into_two_triangles():
    # with d = 2 every tied coloring is monochromatic, so the two copies never meet
    C = PureComplex(2, 3, ((0, 1), (1, 2), (0, 2)))
    with pytest.raises(ConstructionCheckFailed, match="not strongly connected"):
        double_closed_corridor(C)


def test_double_closed_requires_cycle():
    with pytest.raises(NotAClosedCorridor):
        double_closed_corridor(PureComplex(2, 3, ((0, 1), (1, 2))))
