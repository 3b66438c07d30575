"""Stock polytopes and combinators.

Builders that know their own combinatorics (cube, cross-polytope,
product, dual) hand the kernel both representations plus incidence, so
nothing is enumerated twice.  Builders whose facet structure is the
interesting part (join, tensor, rounded regular polygons) provide
vertices only and let the kernel complete them on demand.

Regular n-gons are the one place exactness meets rounding: vertex
coordinates are computed with mpmath at generous precision and rounded
half-away-from-zero to a fixed number of decimal digits.  Rounding that
way is odd-symmetric, so antipodal vertex pairs stay exactly antipodal
and even-gons keep exactly parallel opposite edges, which the counting
layers depend on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import GeometryError
from .linalg import Vector, vec_dot, vec_sub, zero_vector
from .polytope import Inequality, Polytope, barycenter


@dataclass(frozen=True)
class RegularPolygonSpec:
    """Number of sides and decimal rounding precision for a regular polygon."""

    n: int
    digits: int = 6


def simplex(n: int) -> Polytope:
    """Standard n-simplex: the origin and the n coordinate unit points."""
    if n < 0:
        raise ValueError("simplex dimension must be nonnegative")
    points = [zero_vector(n)]
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        points.append(tuple(e))
    return Polytope.from_vertices(points)


def cube(n: int) -> Polytope:
    """The cube [-1, 1]^n with both representations attached."""
    if n < 1:
        raise ValueError("cube dimension must be positive")
    vertices = tuple(
        tuple(Fraction(s) for s in signs)
        for signs in itertools.product((-1, 1), repeat=n)
    )
    inequalities = []
    masks = []
    for i in range(n):
        for sign in (1, -1):
            normal = [Fraction(0)] * n
            normal[i] = Fraction(sign)
            inequalities.append(Inequality(tuple(normal), Fraction(1)))
            mask = 0
            for v, vertex in enumerate(vertices):
                if vertex[i] == sign:
                    mask |= 1 << v
            masks.append(mask)
    return Polytope(
        n,
        vertices=vertices,
        inequalities=tuple(inequalities),
        facet_masks=tuple(masks),
        hrep_irredundant=True,
    )


def cross_polytope(n: int) -> Polytope:
    """Convex hull of the positive and negative coordinate unit vectors."""
    if n < 1:
        raise ValueError("cross-polytope dimension must be positive")
    vertices = []
    for i in range(n):
        for sign in (1, -1):
            e = [Fraction(0)] * n
            e[i] = Fraction(sign)
            vertices.append(tuple(e))
    inequalities = []
    masks = []
    for signs in itertools.product((1, -1), repeat=n):
        normal = tuple(Fraction(s) for s in signs)
        inequalities.append(Inequality(normal, Fraction(1)))
        mask = 0
        for v, vertex in enumerate(vertices):
            if vec_dot(normal, vertex) == 1:
                mask |= 1 << v
        masks.append(mask)
    return Polytope(
        n,
        vertices=tuple(vertices),
        inequalities=tuple(inequalities),
        facet_masks=tuple(masks),
        hrep_irredundant=True,
    )


def _round_decimal(value: mpmath.mpf, digits: int) -> Fraction:
    """Round to ``digits`` decimals, half away from zero, exactly.

    A guard rejects values suspiciously close to a rounding tie, where
    the result would depend on working precision.  The exactly rational
    trigonometric values (0, half, one) sit safely away from ties on any
    decimal grid, so the guard never fires on legitimate input.
    """
    if value < 0:
        return -_round_decimal(-value, digits)
    scale = 10 ** digits
    scaled = value * scale
    nearest = mpmath.floor(scaled + mpmath.mpf("0.5"))
    frac = scaled + mpmath.mpf("0.5") - nearest
    tol = mpmath.mpf("1e-12")
    if frac < tol or frac > 1 - tol:
        raise GeometryError(
            "coordinate falls on a rounding tie at this precision; "
            "use a different digit count"
        )
    return Fraction(int(nearest), scale)


def regular_ngon(n: int, digits: int = 6) -> Polytope:
    """Regular n-gon on the unit circle, coordinates rounded to ``digits``.

    Vertices are listed counterclockwise starting at angle zero.  After
    rounding, strict convex position is verified exactly; failure (which
    needs n far larger than the digit budget) raises with a pointer to
    raise ``digits``.
    """
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    if digits < 1:
        raise ValueError("digits must be positive")
    points: list[Vector] = []
    with mpmath.workdps(digits + 30):
        for k in range(n):
            x = mpmath.cospi(mpmath.mpf(2 * k) / n)
            y = mpmath.sinpi(mpmath.mpf(2 * k) / n)
            points.append((_round_decimal(x, digits), _round_decimal(y, digits)))
    for k in range(n):
        a = points[k]
        b = points[(k + 1) % n]
        c = points[(k + 2) % n]
        u = vec_sub(b, a)
        w = vec_sub(c, b)
        if u[0] * w[1] - u[1] * w[0] <= 0:
            raise GeometryError(
                f"rounded {n}-gon is not strictly convex at {digits} digits; "
                "increase digits"
            )
    return Polytope.from_vertices(points)


def from_regular_polygon_spec(spec: RegularPolygonSpec) -> Polytope:
    return regular_ngon(spec.n, spec.digits)


def join(p: Polytope, q: Polytope) -> Polytope:
    """Join of two polytopes placed in skew affine subspaces.

    P sits at height 0, Q at height 1 of a fresh coordinate, with
    disjoint coordinate blocks, so every segment from P to Q is as free
    as possible; the vertex set of the join is the union of the embedded
    vertex sets.
    """
    dp, dq = p.ambient_dim, q.ambient_dim
    points = [v + (Fraction(0),) + zero_vector(dq) for v in p.vertices]
    points += [zero_vector(dp) + (Fraction(1),) + w for w in q.vertices]
    return Polytope.from_vertices(points)


def product(p: Polytope, q: Polytope) -> Polytope:
    """Cartesian product; vertices are the pair grid, facets lift from factors."""
    dp, dq = p.ambient_dim, q.ambient_dim
    vertices = tuple(
        v + w for v in p.vertices for w in q.vertices
    )
    if p.dim < dp or q.dim < dq:
        return Polytope.from_vertices(vertices)
    nq = len(q.vertices)
    inequalities = []
    masks = []
    for j, iq in enumerate(p.inequalities):
        inequalities.append(Inequality(iq.normal + zero_vector(dq), iq.offset))
        mask = 0
        pmask = p.facet_masks[j]
        for vi in range(len(p.vertices)):
            if pmask >> vi & 1:
                mask |= ((1 << nq) - 1) << (vi * nq)
        masks.append(mask)
    for j, iq in enumerate(q.inequalities):
        inequalities.append(Inequality(zero_vector(dp) + iq.normal, iq.offset))
        mask = 0
        qmask = q.facet_masks[j]
        for vi in range(len(p.vertices)):
            mask |= qmask << (vi * nq)
        masks.append(mask)
    return Polytope(
        dp + dq,
        vertices=vertices,
        inequalities=tuple(inequalities),
        facet_masks=tuple(masks),
        hrep_irredundant=True,
    )


def tensor(p: Polytope, q: Polytope) -> Polytope:
    """Convex hull of ``(v (x) w, v, w)`` over vertex pairs.

    The outer product block is row-major in v's coordinates.  Every
    listed point is a vertex (a functional supported on the linear
    coordinates isolates each pair), so the vertex set is exact; facets
    are computed on demand and can be expensive, which is the point of
    studying this construction.
    """
    dp, dq = p.ambient_dim, q.ambient_dim
    points = []
    for v in p.vertices:
        for w in q.vertices:
            outer = tuple(v[i] * w[j] for i in range(dp) for j in range(dq))
            points.append(outer + v + w)
    return Polytope.from_vertices(points)


def dual(p: Polytope) -> Polytope:
    """Polar dual, requiring the origin strictly inside.

    Facets of P become vertices of the dual and vice versa; the
    incidence matrix is carried over transposed, so no enumeration runs.
    """
    bad = [iq for iq in p.inequalities if iq.offset <= 0]
    if bad:
        raise GeometryError(
            "polar dual needs the origin strictly interior; translate the "
            "polytope (for instance by its vertex barycenter) first"
        )
    vertices = tuple(
        tuple(e / iq.offset for e in iq.normal) for iq in p.inequalities
    )
    inequalities = tuple(
        Inequality(v, Fraction(1)) for v in p.vertices
    )
    # dual facet j corresponds to primal vertex j, and its incident dual
    # vertices are the primal facets through that vertex, so the dual
    # facet masks are exactly the primal vertex masks
    return Polytope(
        p.ambient_dim,
        vertices=vertices,
        inequalities=inequalities,
        facet_masks=p.vertex_masks,
        hrep_irredundant=True,
    )


def bipyramid(p: Polytope) -> Polytope:
    """Bipyramid over P: two apexes over and under the vertex barycenter."""
    c = barycenter(p.vertices)
    if p.dim == 0:
        # the base point is the midpoint of the resulting segment
        return Polytope.from_vertices([c + (Fraction(1),), c + (Fraction(-1),)])
    points = [v + (Fraction(0),) for v in p.vertices]
    points.append(c + (Fraction(1),))
    points.append(c + (Fraction(-1),))
    return Polytope.from_vertices(points)


def standard(kind: str, n: int | None = None, digits: int = 6) -> Polytope:
    """Dispatch to a stock construction by name.

    Recognized kinds: ``simplex``, ``cube``, ``crosspolytope``,
    ``regular_ngon``.  ``n`` is the dimension (or vertex count for the
    polygon); ``digits`` only applies to ``regular_ngon``.
    """
    if n is None:
        raise ValueError("standard constructions need a size parameter")
    if kind == "simplex":
        return simplex(n)
    if kind == "cube":
        return cube(n)
    if kind == "crosspolytope":
        return cross_polytope(n)
    if kind == "regular_ngon":
        return regular_ngon(n, digits)
    raise ValueError(f"unknown construction kind {kind!r}")
