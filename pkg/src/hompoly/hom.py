"""The polytope of affine maps between two polytopes.

An affine map f(x) = Lx + t sends P into Q exactly when every vertex v
of P lands inside every facet inequality (a, b) of Q, and each such pair
contributes the linear constraint a . (Lv + t) <= b on the entries of
(L, t).  Those constraints, one per (vertex of P, facet of Q) pair, are
all facet-defining and pairwise distinct, so the construction here
attaches them as a trusted irredundant description; nothing is ever
filtered, and row order doubles as the facet labeling.

Coordinates on the space of maps are the entries of L in row-major
order followed by the entries of t.

The constant map at an interior point of Q is strictly interior to the
hom-polytope, which gives the dimension formula dim P * dim Q + dim Q
without any vertex enumeration; ``build_hom`` wires that witness in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructions import bipyramid, cross_polytope, cube, product, simplex
from .errors import GeometryError
from .linalg import Matrix, Vector, mat_rank, mat_vec, vec_add, zero_vector
from .polytope import Inequality, Polytope


@dataclass(frozen=True)
class AffineMap:
    """An affine map x -> linear @ x + translation."""

    linear: Matrix
    translation: Vector

    @property
    def source_dim(self) -> int:
        return len(self.linear[0]) if self.linear else 0

    @property
    def target_dim(self) -> int:
        return len(self.translation)

    def apply(self, x: Vector) -> Vector:
        return vec_add(mat_vec(self.linear, x), self.translation)

    def to_point(self) -> Vector:
        """Hom coordinates: linear entries row-major, then translation."""
        flat = tuple(e for row in self.linear for e in row)
        return flat + self.translation

    @classmethod
    def from_point(cls, point: Vector, source_dim: int, target_dim: int) -> "AffineMap":
        if len(point) != source_dim * target_dim + target_dim:
            raise ValueError(
                f"hom point of length {len(point)} does not match "
                f"map shape {target_dim}x{source_dim}"
            )
        linear = tuple(
            tuple(point[i * source_dim + j] for j in range(source_dim))
            for i in range(target_dim)
        )
        return cls(linear, tuple(point[source_dim * target_dim:]))

    @classmethod
    def constant(cls, source_dim: int, value: Vector) -> "AffineMap":
        zero_row = zero_vector(source_dim)
        return cls(tuple(zero_row for _ in value), value)


@dataclass(frozen=True)
class FacetLabel:
    """Which (vertex of the source, facet of the target) pair cut a hom facet."""

    vertex_index: int
    facet_index: int


@dataclass(frozen=True)
class HomPolytope:
    """The polytope of affine maps sending ``source`` into ``target``."""

    source: Polytope
    target: Polytope
    polytope: Polytope
    labels: tuple[FacetLabel, ...]

    @property
    def dim(self) -> int:
        return self.polytope.dim

    @property
    def ambient_dim(self) -> int:
        return self.polytope.ambient_dim

    def map_at_vertex(self, index: int) -> AffineMap:
        return AffineMap.from_point(
            self.polytope.vertices[index],
            self.source.ambient_dim,
            self.target.ambient_dim,
        )


def build_hom(p: Polytope, q: Polytope) -> HomPolytope:
    """Assemble the polytope of affine maps sending p into q.

    Both arguments must be full-dimensional in their ambient spaces
    (project lower-dimensional input onto a chart first); otherwise the
    space of maps is degenerate in these coordinates and none of the
    facet structure survives.
    """
    if p.dim < p.ambient_dim:
        raise GeometryError(
            "source polytope is not full-dimensional; project it onto a "
            "chart of its affine hull first"
        )
    if q.dim < q.ambient_dim:
        raise GeometryError(
            "target polytope is not full-dimensional; project it onto a "
            "chart of its affine hull first"
        )
    dp, dq = p.ambient_dim, q.ambient_dim
    hom_dim = dp * dq + dq
    inequalities: list[Inequality] = []
    labels: list[FacetLabel] = []
    for v_index, v in enumerate(p.vertices):
        for f_index, facet in enumerate(q.inequalities):
            a, b = facet.normal, facet.offset
            coeffs = [Fraction(0)] * hom_dim
            for i in range(dq):
                if a[i] == 0:
                    continue
                for j in range(dp):
                    coeffs[i * dp + j] = a[i] * v[j]
                coeffs[dp * dq + i] = a[i]
            inequalities.append(Inequality(tuple(coeffs), b))
            labels.append(FacetLabel(v_index, f_index))
    witness = AffineMap.constant(dp, q.interior_point).to_point()
    hom = Polytope.from_inequalities(
        inequalities,
        hom_dim,
        assume_irredundant=True,
        interior_point=witness,
    )
    return HomPolytope(p, q, hom, tuple(labels))


def enumerate_vertex_maps(
    h: HomPolytope,
) -> list[tuple[AffineMap, frozenset[FacetLabel]]]:
    """All vertices of the hom-polytope as maps with their tight labels.

    Order follows the lexicographic order of the underlying hom points.
    """
    dp = h.source.ambient_dim
    dq = h.target.ambient_dim
    out: list[tuple[AffineMap, frozenset[FacetLabel]]] = []
    for index, point in enumerate(h.polytope.vertices):
        mask = h.polytope.vertex_masks[index]
        tight = frozenset(
            h.labels[j] for j in range(len(h.labels)) if mask >> j & 1
        )
        out.append((AffineMap.from_point(point, dp, dq), tight))
    return out


def is_vertex_map(f: AffineMap, h: HomPolytope) -> bool:
    """Whether the map is a vertex of the hom-polytope.

    The exact criterion: the map lies in the polytope and the normals of
    its tight constraints span the whole hom space.  Maps outside the
    polytope are rejected with an error rather than a False, since that
    is always a caller bug.
    """
    point = f.to_point()
    tight_normals = []
    for iq in h.polytope.inequalities:
        value = iq.value(point)
        if value > iq.offset:
            raise GeometryError("map does not send the source into the target")
        if value == iq.offset:
            tight_normals.append(iq.normal)
    if len(tight_normals) < h.polytope.ambient_dim:
        return False
    return mat_rank(tuple(tight_normals)) == h.polytope.ambient_dim


@dataclass(frozen=True)
class IdentityCheckReport:
    """Outcome of one structural identity comparison."""

    kind: str
    lhs_description: str
    rhs_description: str
    lhs_f_vector: tuple[int, ...]
    rhs_f_vector: tuple[int, ...]

    @property
    def match(self) -> bool:
        return self.lhs_f_vector == self.rhs_f_vector


_IDENTITY_DIM_LIMIT = 8


def _guard_hom_dim(dim: int, description: str) -> None:
    if dim > _IDENTITY_DIM_LIMIT:
        raise ValueError(
            f"{description} lives in hom dimension {dim}, above the "
            f"enumeration limit of {_IDENTITY_DIM_LIMIT}; refusing"
        )


def hom_identity_check(
    kind: str,
    *,
    n: int | None = None,
    m: int | None = None,
    p: Polytope | None = None,
) -> IdentityCheckReport:
    """Check one of the known structural identities by comparing f-vectors.

    ``simplex_power``: maps from the n-simplex are free choices of n+1
    image points, so the hom-polytope against target p is the (n+1)-fold
    product of p.

    ``cube_bipyramid``: maps from the m-cube to the n-cube split across
    the target coordinates, and each coordinate factor is the bipyramid
    over the m-dimensional cross-polytope.

    ``cube_cross_swap``: for m = n, maps from the m-cube to the n-cross-
    polytope match maps from the (m-1)-cube to the (n+1)-cross-polytope.

    Each side must stay within hom dimension 8; larger requests are
    refused with the exceeded dimension in the message.
    """
    if kind == "simplex_power":
        if n is None or p is None:
            raise ValueError("simplex_power needs n and a target polytope p")
        lhs_dim = n * p.dim + p.dim
        _guard_hom_dim(lhs_dim, f"hom(simplex({n}), target)")
        lhs = build_hom(simplex(n), p).polytope
        rhs = p
        for _ in range(n):
            rhs = product(rhs, p)
        return IdentityCheckReport(
            kind,
            f"maps from the {n}-simplex into the target",
            f"{n + 1}-fold product of the target",
            lhs.f_vector,
            rhs.f_vector,
        )
    if kind == "cube_bipyramid":
        if m is None or n is None:
            raise ValueError("cube_bipyramid needs source dim m and target dim n")
        lhs_dim = m * n + n
        _guard_hom_dim(lhs_dim, f"hom(cube({m}), cube({n}))")
        lhs = build_hom(cube(m), cube(n)).polytope
        factor = bipyramid(cross_polytope(m))
        rhs = factor
        for _ in range(n - 1):
            rhs = product(rhs, factor)
        return IdentityCheckReport(
            kind,
            f"maps from the {m}-cube into the {n}-cube",
            f"{n}-fold product of the bipyramid over the {m}-cross-polytope",
            lhs.f_vector,
            rhs.f_vector,
        )
    if kind == "cube_cross_swap":
        if m is None or n is None:
            raise ValueError("cube_cross_swap needs source dim m and target dim n")
        lhs_dim = m * n + n
        rhs_dim = (m - 1) * (n + 1) + (n + 1)
        _guard_hom_dim(lhs_dim, f"hom(cube({m}), crosspolytope({n}))")
        _guard_hom_dim(rhs_dim, f"hom(cube({m - 1}), crosspolytope({n + 1}))")
        if m < 2:
            raise ValueError("cube_cross_swap needs source dimension at least 2")
        lhs = build_hom(cube(m), cross_polytope(n)).polytope
        rhs = build_hom(cube(m - 1), cross_polytope(n + 1)).polytope
        return IdentityCheckReport(
            kind,
            f"maps from the {m}-cube into the {n}-cross-polytope",
            f"maps from the {m - 1}-cube into the {n + 1}-cross-polytope",
            lhs.f_vector,
            rhs.f_vector,
        )
    raise ValueError(f"unknown identity kind {kind!r}")
