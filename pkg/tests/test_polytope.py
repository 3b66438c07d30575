"""Unit tests for the polytope kernel: conversions, incidence, faces."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hompoly.errors import (
    InfeasibleError,
    LowerDimensionalError,
    OutsideHullError,
    UnboundedError,
)
from hompoly.linalg import vec
from hompoly.polytope import (
    HRep,
    Inequality,
    Polytope,
    VRep,
    canonicalize_vertices,
    chart_project,
    contains_point,
    face_lattice,
    f_vector,
    hrep_to_vrep,
    is_simple_vertex,
    polytope_dim,
    vrep_to_hrep,
)


def ineq(normal, offset) -> Inequality:
    return Inequality(vec(*normal), Fraction(offset))


def square_hrep() -> list[Inequality]:
    return [
        ineq((1, 0), 1),
        ineq((-1, 0), 1),
        ineq((0, 1), 1),
        ineq((0, -1), 1),
    ]


def test_square_vertices_from_inequalities():
    p = Polytope.from_inequalities(square_hrep(), 2)
    assert p.vertices == (
        vec(-1, -1),
        vec(-1, 1),
        vec(1, -1),
        vec(1, 1),
    )
    assert p.dim == 2


def test_square_facets_from_vertices():
    p = Polytope.from_vertices([vec(1, 1), vec(1, -1), vec(-1, 1), vec(-1, -1)])
    assert p.n_facets == 4
    for iq in p.inequalities:
        assert iq.offset == 1
        assert sorted(abs(e) for e in iq.normal) == [0, 1]


def test_roundtrip_conversions_match():
    v = VRep(2, (vec(0, 0), vec(2, 0), vec(0, 2)))
    h = vrep_to_hrep(v)
    assert len(h.inequalities) == 3
    back = hrep_to_vrep(h)
    assert back.points == (vec(0, 0), vec(0, 2), vec(2, 0))


def test_cube_roundtrip_3d():
    pts = [vec(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    p = Polytope.from_vertices(pts)
    assert p.n_facets == 6
    again = hrep_to_vrep(p.hrep)
    assert set(again.points) == set(pts)


def test_redundant_inequality_dropped():
    rows = square_hrep() + [ineq((1, 1), 5), ineq((2, 0), 2)]
    p = Polytope.from_inequalities(rows, 2)
    assert p.n_vertices == 4
    # (1,1).x <= 5 is slack everywhere; (2,0).x <= 2 duplicates the first row
    assert p.inequalities == tuple(square_hrep())


def test_trusted_inequalities_kept_verbatim():
    rows = square_hrep()
    p = Polytope.from_inequalities(rows, 2, assume_irredundant=True)
    _ = p.vertices
    assert p.inequalities == tuple(rows)


def test_redundant_points_dropped():
    pts = [
        vec(0, 0),
        vec(2, 0),
        vec(0, 2),
        vec(1, 1),       # edge midpoint
        vec("1/2", "1/2"),  # interior
        vec(2, 0),       # duplicate
    ]
    p = Polytope.from_points(pts)
    assert p.vertices == (vec(0, 0), vec(0, 2), vec(2, 0))


def test_canonicalize_vertices_sorts_and_filters():
    pts = (vec(1, 1), vec(0, 0), vec(2, 2), vec(0, 2), vec(2, 0))
    assert canonicalize_vertices(pts) == (
        vec(0, 0),
        vec(0, 2),
        vec(2, 0),
        vec(2, 2),
    )


def test_unbounded_system_raises():
    with pytest.raises(UnboundedError):
        Polytope.from_inequalities([ineq((1, 0), 1), ineq((0, 1), 1)], 2).vertices


def test_halfplane_raises_unbounded():
    with pytest.raises(UnboundedError):
        Polytope.from_inequalities([ineq((1, 0), 1)], 2).vertices


def test_infeasible_system_raises():
    with pytest.raises(InfeasibleError):
        Polytope.from_inequalities(
            [ineq((1, 0), 0), ineq((-1, 0), -1)], 1
        ).vertices


def test_point_system_is_lower_dimensional():
    rows = [ineq((1, 0), 0), ineq((0, 1), 0), ineq((-1, -1), 0)]
    with pytest.raises(LowerDimensionalError) as err:
        Polytope.from_inequalities(rows, 2).vertices
    assert err.value.hull_dim == 0


def test_lower_dimensional_points_rejected_by_conversion():
    with pytest.raises(LowerDimensionalError) as err:
        vrep_to_hrep(VRep(3, (vec(0, 0, 0), vec(1, 1, 1))))
    assert err.value.hull_dim == 1
    assert err.value.ambient_dim == 3


def test_contains_point_cases():
    p = Polytope.from_inequalities(square_hrep(), 2)
    assert contains_point(p, vec(0, 0)).kind == "interior"
    hit = contains_point(p, vec(1, 0))
    assert hit.kind == "boundary"
    assert hit.active == {0}
    corner = contains_point(p, vec(1, 1))
    assert corner.kind == "boundary"
    assert corner.active == {0, 2}
    assert contains_point(p, vec(2, 0)).kind == "outside"


def test_incidence_masks_are_consistent():
    p = Polytope.from_inequalities(square_hrep(), 2)
    for j, iq in enumerate(p.inequalities):
        for v_index in p.facet_vertex_indices(j):
            assert iq.tight(p.vertices[v_index])
    for v_index, vertex in enumerate(p.vertices):
        tight = {j for j, iq in enumerate(p.inequalities) if iq.tight(vertex)}
        assert set(p.vertex_facet_indices(v_index)) == tight


def test_triangle_face_lattice():
    p = Polytope.from_vertices([vec(0, 0), vec(1, 0), vec(0, 1)])
    faces = face_lattice(p)
    assert f_vector(p) == (3, 3, 1)
    dims = sorted(face.dim for face in faces)
    assert dims == [-1, 0, 0, 0, 1, 1, 1, 2]
    empty = faces[0]
    assert empty.dim == -1 and empty.vertices == frozenset()
    assert empty.facets == frozenset(range(3))
    top = faces[-1]
    assert top.dim == 2 and top.facets == frozenset()


def test_octahedron_counts():
    pts = [vec(*p) for p in [
        (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)
    ]]
    p = Polytope.from_vertices(pts)
    assert p.n_facets == 8
    assert f_vector(p) == (6, 12, 8, 1)


def test_simple_vertices():
    square = Polytope.from_inequalities(square_hrep(), 2)
    assert all(is_simple_vertex(square, v) for v in range(4))
    # square pyramid: the apex meets four facets in dimension three
    pyramid = Polytope.from_vertices([
        vec(1, 1, 0), vec(1, -1, 0), vec(-1, 1, 0), vec(-1, -1, 0), vec(0, 0, 1)
    ])
    apex = pyramid.vertices.index(vec(0, 0, 1))
    assert not is_simple_vertex(pyramid, apex)
    base = pyramid.vertices.index(vec(1, 1, 0))
    assert is_simple_vertex(pyramid, base)
    assert not is_simple_vertex(pyramid, vec(0, 0, 1))


def test_chart_project_roundtrip():
    pts = (vec(0, 0, 0), vec(1, 1, 1), vec(2, 0, 0))
    projected, chart = chart_project(pts)
    assert chart.dim == 2
    assert projected[0] == vec(0, 0)
    for original, coords in zip(pts, projected):
        assert chart.lift(coords) == original


def test_chart_rejects_points_off_hull():
    pts = (vec(0, 0, 0), vec(1, 1, 1))
    _, chart = chart_project(pts)
    with pytest.raises(OutsideHullError):
        chart.project(vec(1, 0, 0))


def test_polytope_dim_variants():
    assert polytope_dim(Polytope.from_vertices([vec(3, 4)])) == 0
    assert polytope_dim(Polytope.from_vertices([vec(0, 0), vec(1, 2)])) == 1
    assert polytope_dim(Polytope.from_inequalities(square_hrep(), 2)) == 2


def test_dim_via_interior_witness_skips_enumeration():
    p = Polytope.from_inequalities(
        square_hrep(), 2, assume_irredundant=True, interior_point=vec(0, 0)
    )
    assert p.dim == 2
    assert p._vertices is None


coordinate = st.integers(min_value=-4, max_value=4)


@given(
    st.lists(
        st.tuples(coordinate, coordinate),
        min_size=3,
        max_size=8,
    )
)
@settings(max_examples=40, deadline=None)
def test_hull_contains_all_input_points(raw):
    pts = tuple(vec(*p) for p in raw)
    p = Polytope.from_points(pts)
    try:
        _ = p.vertices
    except LowerDimensionalError:
        return
    for x in pts:
        assert contains_point(p, x).kind != "outside"
    for v in p.vertices:
        assert contains_point(p, v).kind == "boundary"
