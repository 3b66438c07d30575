"""Bounded rational polytopes with exact dual representations.

A :class:`Polytope` carries a vertex description, an inequality
description, or both, and completes the missing side on first use via
the double description engine.  Vertex/facet incidence is recorded as
bitmasks (facet mask bit v set means vertex v lies on that facet), which
is the form the face lattice, simplicity tests, and the map
classification layers consume.

Representations are stored as given.  The constructors that accept
unchecked input (:meth:`Polytope.from_points`,
:meth:`Polytope.from_inequalities` without ``assume_irredundant``)
normalize on first completion: redundant points are dropped and
non-facet-defining or duplicate inequalities are filtered out, keeping
the original order of what survives.  The trusted constructors
(:meth:`Polytope.from_vertices`, ``assume_irredundant=True``) keep the
caller's data verbatim, which matters when inequality order encodes
labels.

Conversions require full-dimensional input.  Lower-dimensional point
sets must go through :func:`chart_project` first; the error says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from . import dd
from .errors import (
    GeometryError,
    InfeasibleError,
    LowerDimensionalError,
    OutsideHullError,
)
from .linalg import (
    Vector,
    canonical_inequality,
    mat_inverse,
    mat_rank,
    solve_affine_hull,
    vec_dot,
    vec_sub,
)


@dataclass(frozen=True)
class Inequality:
    """One linear constraint ``normal . x <= offset``."""

    normal: Vector
    offset: Fraction

    def value(self, x: Vector) -> Fraction:
        return vec_dot(self.normal, x)

    def holds(self, x: Vector) -> bool:
        return self.value(x) <= self.offset

    def tight(self, x: Vector) -> bool:
        return self.value(x) == self.offset

    def canonical(self) -> "Inequality":
        normal, offset = canonical_inequality(self.normal, self.offset)
        return Inequality(normal, offset)


@dataclass(frozen=True)
class VRep:
    ambient_dim: int
    points: tuple[Vector, ...]


@dataclass(frozen=True)
class HRep:
    ambient_dim: int
    inequalities: tuple[Inequality, ...]


@dataclass(frozen=True)
class Face:
    """A face of the lattice: its dimension and incident index sets."""

    dim: int
    vertices: frozenset[int]
    facets: frozenset[int]


@dataclass(frozen=True)
class Containment:
    """Result of a point query: where the point sits and which facets are tight."""

    kind: Literal["interior", "boundary", "outside"]
    active: frozenset[int]


class AffineChart:
    """Exact coordinates on an affine subspace.

    Built from a basepoint and an independent set of direction vectors.
    ``project`` solves for the coordinates of an ambient point (raising
    :class:`OutsideHullError` when the point is not in the subspace) and
    ``lift`` maps chart coordinates back; the two are exact inverses.
    """

    def __init__(self, base: Vector, directions: tuple[Vector, ...]):
        self.base = base
        self.directions = directions
        self.ambient_dim = len(base)
        self.dim = len(directions)
        # pick self.dim independent coordinate rows of the direction
        # matrix (directions as columns) and invert that square block,
        # so projection is one matrix-vector product plus a lift check
        cols = directions
        picked: list[int] = []
        reduced: list[tuple[int, list[Fraction]]] = []
        for r in range(self.ambient_dim):
            row = [cols[j][r] for j in range(self.dim)]
            work = list(row)
            for pc, rr in reduced:
                if work[pc] != 0:
                    factor = work[pc] / rr[pc]
                    for c in range(pc, self.dim):
                        work[c] -= factor * rr[c]
            pc = next((c for c, e in enumerate(work) if e != 0), None)
            if pc is None:
                continue
            picked.append(r)
            reduced.append((pc, work))
            reduced.sort(key=lambda item: item[0])
            if len(picked) == self.dim:
                break
        if len(picked) < self.dim:
            raise ValueError("chart directions are linearly dependent")
        self._rows = tuple(picked)
        block = tuple(
            tuple(cols[j][r] for j in range(self.dim)) for r in picked
        )
        self._inverse = mat_inverse(block) if self.dim else ()

    def project(self, x: Vector) -> Vector:
        diff = vec_sub(x, self.base)
        coords = tuple(
            sum(
                (self._inverse[i][k] * diff[self._rows[k]] for k in range(self.dim)),
                Fraction(0),
            )
            for i in range(self.dim)
        )
        if self.lift(coords) != x:
            raise OutsideHullError(
                "point does not lie in the chart's affine subspace"
            )
        return coords

    def lift(self, coords: Vector) -> Vector:
        out = list(self.base)
        for c, direction in zip(coords, self.directions, strict=True):
            if c:
                for i, e in enumerate(direction):
                    out[i] += c * e
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AffineChart)
            and self.base == other.base
            and self.directions == other.directions
        )

    def __repr__(self) -> str:
        return f"AffineChart(base={self.base!r}, dim={self.dim})"


def _affine_rank(points: Iterable[Vector]) -> int:
    pts = tuple(points)
    if not pts:
        return -1
    _, basis = solve_affine_hull(pts)
    return len(basis)


def barycenter(points: tuple[Vector, ...]) -> Vector:
    """Coordinate-wise average of a nonempty point tuple."""
    n = len(points)
    return tuple(
        sum((p[i] for p in points), Fraction(0)) / n
        for i in range(len(points[0]))
    )


def _vertices_of_system(
    inequalities: tuple[Inequality, ...], ambient_dim: int
) -> list[tuple[Vector, int]]:
    """Sorted vertices with activity masks over the given inequality order.

    Requires the feasible set to be a full-dimensional polytope; bounded
    lower-dimensional sets raise :class:`LowerDimensionalError`.
    """
    if ambient_dim == 0:
        # the only candidate point is the empty tuple; constraints reduce
        # to their offsets
        if any(iq.offset < 0 for iq in inequalities):
            raise InfeasibleError()
        mask = 0
        for j, iq in enumerate(inequalities):
            if iq.offset == 0:
                mask |= 1 << j
        return [((), mask)]
    normals = [iq.normal for iq in inequalities]
    offsets = [iq.offset for iq in inequalities]
    found = dd.enumerate_vertices(normals, offsets)
    found.sort(key=lambda item: item[0])
    rank = _affine_rank(p for p, _ in found)
    if rank < ambient_dim:
        raise LowerDimensionalError(rank, ambient_dim)
    return found


def _facets_of_hull(
    points: tuple[Vector, ...], ambient_dim: int
) -> list[tuple[Inequality, int]]:
    """Sorted facet inequalities of conv(points) with point-activity masks.

    Facet normals come out primitive integer via polarity around the
    point average, which is interior because the hull is required to be
    full-dimensional.  Mask bit i refers to input point i, so redundant
    input points are handled and reported faithfully.
    """
    if ambient_dim == 0:
        return []
    rank = _affine_rank(points)
    if rank < ambient_dim:
        raise LowerDimensionalError(rank, ambient_dim)
    center = barycenter(points)
    dual_normals = [vec_sub(p, center) for p in points]
    dual_offsets = [Fraction(1)] * len(points)
    # a repeated input point yields a zero dual normal only if it equals
    # the center, which cannot happen for a full-dimensional hull unless
    # every point coincides, excluded by the rank check above; but an
    # input point EQUAL to the center is possible and imposes nothing
    rows: list[tuple[Vector, Fraction]] = []
    row_origin: list[int] = []
    for i, n in enumerate(dual_normals):
        if all(e == 0 for e in n):
            continue
        rows.append((n, dual_offsets[i]))
        row_origin.append(i)
    dual_vertices = dd.enumerate_vertices(
        [r[0] for r in rows], [r[1] for r in rows]
    )
    results: list[tuple[Inequality, int]] = []
    for y, mask in dual_vertices:
        normal, offset = canonical_inequality(y, 1 + vec_dot(y, center))
        full_mask = 0
        for bit, origin in enumerate(row_origin):
            if mask >> bit & 1:
                full_mask |= 1 << origin
        results.append((Inequality(normal, offset), full_mask))
    results.sort(key=lambda item: (item[0].normal, item[0].offset))
    return results


def vrep_to_hrep(v: VRep) -> HRep:
    """Facet description of the convex hull of a full-dimensional point set."""
    facets = _facets_of_hull(v.points, v.ambient_dim)
    return HRep(v.ambient_dim, tuple(iq for iq, _ in facets))


def hrep_to_vrep(h: HRep) -> VRep:
    """Vertex description of a bounded full-dimensional inequality system."""
    found = _vertices_of_system(h.inequalities, h.ambient_dim)
    return VRep(h.ambient_dim, tuple(p for p, _ in found))


class Polytope:
    """A bounded convex polytope over the rationals.

    Instances are immutable in intent: nothing mutates geometry after
    construction, missing data is only filled in and cached.  Use the
    ``from_*`` constructors; the bare initializer is for internal
    assembly where all invariants are already established.
    """

    def __init__(
        self,
        ambient_dim: int,
        *,
        vertices: tuple[Vector, ...] | None = None,
        inequalities: tuple[Inequality, ...] | None = None,
        facet_masks: tuple[int, ...] | None = None,
        hrep_irredundant: bool = False,
        interior_point: Vector | None = None,
        chart: AffineChart | None = None,
        raw_points: tuple[Vector, ...] | None = None,
    ):
        self.ambient_dim = ambient_dim
        self.chart = chart
        self._vertices = vertices
        self._inequalities = inequalities
        self._facet_masks = facet_masks
        self._hrep_irredundant = hrep_irredundant
        self._interior_point = interior_point
        self._raw_points = raw_points
        self._dim: int | None = None
        self._vertex_masks: tuple[int, ...] | None = None
        self._faces: tuple[Face, ...] | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_vertices(cls, points: Iterable[Vector], *, chart: AffineChart | None = None) -> "Polytope":
        """Polytope from points the caller asserts are exactly its vertices.

        Order is preserved verbatim.  Use :meth:`from_points` when the
        set may contain redundant points.
        """
        pts = tuple(tuple(Fraction(e) for e in p) for p in points)
        if not pts:
            raise GeometryError("a polytope needs at least one point")
        return cls(len(pts[0]), vertices=pts, chart=chart)

    @classmethod
    def from_points(cls, points: Iterable[Vector], *, chart: AffineChart | None = None) -> "Polytope":
        """Polytope from an arbitrary finite point set.

        Redundant points are dropped on first completion; the stored
        vertex order is lexicographic.
        """
        pts = tuple(tuple(Fraction(e) for e in p) for p in points)
        if not pts:
            raise GeometryError("a polytope needs at least one point")
        return cls(len(pts[0]), raw_points=pts, chart=chart)

    @classmethod
    def from_inequalities(
        cls,
        inequalities: Iterable[Inequality],
        ambient_dim: int,
        *,
        assume_irredundant: bool = False,
        interior_point: Vector | None = None,
    ) -> "Polytope":
        """Polytope from a linear inequality system.

        With ``assume_irredundant`` the rows are trusted to be exactly
        the facets and are kept verbatim (callers that label rows rely
        on this); otherwise non-facet-defining and duplicate rows are
        dropped on first completion, keeping original order.
        """
        ineqs = tuple(inequalities)
        return cls(
            ambient_dim,
            inequalities=ineqs,
            hrep_irredundant=assume_irredundant,
            interior_point=interior_point,
        )

    # -- completion ---------------------------------------------------

    def _complete_from_hrep(self) -> None:
        assert self._inequalities is not None
        found = _vertices_of_system(self._inequalities, self.ambient_dim)
        points = tuple(p for p, _ in found)
        masks = [m for _, m in found]
        keep = list(range(len(self._inequalities)))
        if not self._hrep_irredundant:
            flags = dd.facet_defining_mask_filter(
                masks, len(self._inequalities), list(points), self.ambient_dim
            )
            seen: set[tuple[Vector, Fraction]] = set()
            keep = []
            for j, iq in enumerate(self._inequalities):
                if not flags[j]:
                    continue
                key_n, key_o = canonical_inequality(iq.normal, iq.offset)
                if (key_n, key_o) in seen:
                    continue
                seen.add((key_n, key_o))
                keep.append(j)
            self._inequalities = tuple(self._inequalities[j] for j in keep)
            self._hrep_irredundant = True
        facet_masks = []
        for pos, j in enumerate(keep):
            fm = 0
            for v, m in enumerate(masks):
                if m >> j & 1:
                    fm |= 1 << v
            facet_masks.append(fm)
        self._vertices = points
        self._facet_masks = tuple(facet_masks)

    def _complete_from_points(self) -> None:
        source = self._vertices if self._vertices is not None else self._raw_points
        assert source is not None
        facets = _facets_of_hull(source, self.ambient_dim)
        if self._vertices is None:
            # raw points: keep only extreme ones, deduplicated, sorted
            assert self._raw_points is not None
            n = len(source)
            point_masks = [0] * n
            for j, (_, mask) in enumerate(facets):
                for i in range(n):
                    if mask >> i & 1:
                        point_masks[i] |= 1 << j
            extreme: dict[Vector, int] = {}
            for i, p in enumerate(source):
                if p in extreme:
                    continue
                active = [facets[j][0].normal for j in range(len(facets)) if point_masks[i] >> j & 1]
                if len(active) >= self.ambient_dim and _rank_of(active) == self.ambient_dim:
                    extreme[p] = i
            ordered = sorted(extreme)
            index_of = {extreme[p]: v for v, p in enumerate(ordered)}
            remapped = []
            for _, mask in facets:
                fm = 0
                for i in range(n):
                    if mask >> i & 1 and source[i] in extreme:
                        fm |= 1 << index_of[extreme[source[i]]]
                remapped.append(fm)
            self._vertices = tuple(ordered)
            self._facet_masks = tuple(remapped)
        else:
            self._facet_masks = tuple(mask for _, mask in facets)
        self._inequalities = tuple(iq for iq, _ in facets)
        self._hrep_irredundant = True

    # -- core accessors -----------------------------------------------

    @property
    def vertices(self) -> tuple[Vector, ...]:
        if self._vertices is None:
            if self._inequalities is not None:
                self._complete_from_hrep()
            else:
                self._complete_from_points()
        assert self._vertices is not None
        return self._vertices

    @property
    def inequalities(self) -> tuple[Inequality, ...]:
        if self._inequalities is None or (
            not self._hrep_irredundant and self._facet_masks is None
        ):
            if self._inequalities is None:
                _ = self.vertices
                if self._inequalities is None:
                    self._complete_from_points()
            else:
                self._complete_from_hrep()
        assert self._inequalities is not None
        return self._inequalities

    @property
    def facet_masks(self) -> tuple[int, ...]:
        """Per-facet vertex incidence bitmasks (bit v = vertex v on facet)."""
        if self._facet_masks is None:
            _ = self.vertices
            if self._facet_masks is None:
                self._complete_from_points()
        assert self._facet_masks is not None
        return self._facet_masks

    @property
    def vertex_masks(self) -> tuple[int, ...]:
        """Per-vertex facet incidence bitmasks (bit j = facet j at vertex)."""
        if self._vertex_masks is None:
            fm = self.facet_masks
            n = len(self.vertices)
            vm = [0] * n
            for j, mask in enumerate(fm):
                for v in range(n):
                    if mask >> v & 1:
                        vm[v] |= 1 << j
            self._vertex_masks = tuple(vm)
        return self._vertex_masks

    @property
    def dim(self) -> int:
        """Dimension of the affine hull.

        When only an inequality description is known and a strictly
        interior point was provided at construction, the dimension is
        the ambient dimension without any vertex enumeration; that check
        is exact and cheap, and the hom builder relies on it.
        """
        if self._dim is None:
            if self._vertices is not None:
                self._dim = _affine_rank(self._vertices)
            elif self._raw_points is not None:
                self._dim = _affine_rank(self._raw_points)
            elif (
                self._interior_point is not None
                and self._inequalities is not None
                and all(
                    iq.value(self._interior_point) < iq.offset
                    for iq in self._inequalities
                )
            ):
                self._dim = self.ambient_dim
            else:
                self._dim = _affine_rank(self.vertices)
        return self._dim

    @property
    def vrep(self) -> VRep:
        return VRep(self.ambient_dim, self.vertices)

    @property
    def hrep(self) -> HRep:
        return HRep(self.ambient_dim, self.inequalities)

    @property
    def interior_point(self) -> Vector:
        """A strictly interior point (the vertex average unless preset)."""
        if self._interior_point is None:
            self._interior_point = barycenter(self.vertices)
        return self._interior_point

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.inequalities)

    # -- derived structure ---------------------------------------------

    @property
    def faces(self) -> tuple[Face, ...]:
        if self._faces is None:
            self._faces = _face_lattice(self)
        return self._faces

    @property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for face in self.faces:
            if face.dim >= 0:
                counts[face.dim] += 1
        return tuple(counts)

    def facet_vertex_indices(self, j: int) -> tuple[int, ...]:
        mask = self.facet_masks[j]
        return tuple(v for v in range(len(self.vertices)) if mask >> v & 1)

    def vertex_facet_indices(self, v: int) -> tuple[int, ...]:
        mask = self.vertex_masks[v]
        return tuple(j for j in range(len(self.inequalities)) if mask >> j & 1)

    def __repr__(self) -> str:
        parts = [f"ambient_dim={self.ambient_dim}"]
        if self._vertices is not None:
            parts.append(f"n_vertices={len(self._vertices)}")
        if self._inequalities is not None:
            parts.append(f"n_inequalities={len(self._inequalities)}")
        return "Polytope(" + ", ".join(parts) + ")"


def _rank_of(vectors: list[Vector]) -> int:
    return mat_rank(tuple(vectors))


def polytope_dim(p: Polytope) -> int:
    """Dimension of the affine hull of the polytope."""
    return p.dim


def contains_point(p: Polytope, x: Vector) -> Containment:
    """Locate a point relative to the polytope: interior, boundary, outside.

    ``active`` lists the tight facet indices for boundary points and is
    empty otherwise.
    """
    point = tuple(Fraction(e) for e in x)
    tight: list[int] = []
    for j, iq in enumerate(p.inequalities):
        value = iq.value(point)
        if value > iq.offset:
            return Containment("outside", frozenset())
        if value == iq.offset:
            tight.append(j)
    if tight:
        return Containment("boundary", frozenset(tight))
    return Containment("interior", frozenset())


def is_simple_vertex(p: Polytope, vertex: int | Vector) -> bool:
    """Whether exactly ``dim`` facets meet at the vertex."""
    if isinstance(vertex, int):
        index = vertex
    else:
        target = tuple(Fraction(e) for e in vertex)
        index = p.vertices.index(target)
    return len(p.vertex_facet_indices(index)) == p.dim


def _face_lattice(p: Polytope) -> tuple[Face, ...]:
    """All faces by intersection closure of facet vertex sets.

    Every face is an intersection of facets with the whole polytope, so
    closing the full vertex set under intersection with facet masks
    enumerates exactly the nonempty faces; the empty face is appended
    explicitly with dimension -1 and every facet incident.
    """
    masks = p.facet_masks
    n = len(p.vertices)
    full = (1 << n) - 1
    n_facets = len(masks)
    seen: set[int] = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for face in frontier:
            for fm in masks:
                sub = face & fm
                if sub and sub not in seen:
                    seen.add(sub)
                    nxt.append(sub)
        frontier = nxt
    faces: list[Face] = []
    for mask in seen:
        verts = [v for v in range(n) if mask >> v & 1]
        dim = _affine_rank(p.vertices[v] for v in verts)
        incident = frozenset(
            j for j in range(n_facets) if masks[j] & mask == mask
        )
        faces.append(Face(dim, frozenset(verts), incident))
    faces.append(
        Face(-1, frozenset(), frozenset(range(n_facets)))
    )
    faces.sort(key=lambda f: (f.dim, sorted(f.vertices)))
    return tuple(faces)


def face_lattice(p: Polytope) -> tuple[Face, ...]:
    """Graded tuple of all faces, from the empty face to the polytope."""
    return p.faces


def f_vector(p: Polytope) -> tuple[int, ...]:
    """Face counts by dimension, from vertices up to the polytope itself."""
    return p.f_vector


def chart_project(
    points: tuple[Vector, ...]
) -> tuple[tuple[Vector, ...], AffineChart]:
    """Project points onto exact coordinates of their affine hull.

    The chart basepoint is the first point and the basis is the greedy
    difference-vector basis, so the projection is deterministic and the
    first point maps to the origin.  Lifting the projected points through
    the returned chart reproduces the input exactly.
    """
    pts = tuple(tuple(Fraction(e) for e in p) for p in points)
    if not pts:
        raise GeometryError("cannot build a chart from no points")
    base, basis = solve_affine_hull(pts)
    chart = AffineChart(base, basis)
    return tuple(chart.project(p) for p in pts), chart


def canonicalize_vertices(points: tuple[Vector, ...]) -> tuple[Vector, ...]:
    """Extreme points of conv(points), sorted lexicographically."""
    return Polytope.from_points(points).vertices
