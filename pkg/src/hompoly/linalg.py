"""Exact linear algebra over the rationals.

Everything downstream (vertex enumeration, face lattices, map
classification) depends on exact rank and kernel computations, so this
module works with ``fractions.Fraction`` throughout.  Vectors are plain
tuples and matrices are tuples of row tuples: immutable, hashable, and
cheap to compare, which is what the geometric layers need for use as
dict keys and set members.

Pivoting is deterministic everywhere: the first usable (nonzero) entry
wins, scanning rows top to bottom and columns left to right.  That makes
every derived object (affine-hull bases, kernel bases, chart choices)
reproducible run to run, which the table and CLI layers rely on for
byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Scalar = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def scal(x: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or string like ``"2/3"`` to a Fraction."""
    return Fraction(x)


def vec(*entries: int | str | Fraction) -> Vector:
    """Build a vector, coercing each entry with :func:`scal`."""
    return tuple(Fraction(e) for e in entries)


def mat(*rows) -> Matrix:
    """Build a matrix from row iterables, coercing entries with :func:`scal`."""
    return tuple(tuple(Fraction(e) for e in row) for row in rows)


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c: Fraction | int, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def vec_dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def mat_vec(m: Matrix, x: Vector) -> Vector:
    return tuple(vec_dot(row, x) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b, strict=True))
    return tuple(tuple(vec_dot(row, col) for col in cols) for row in a)


def mat_transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m, strict=True))


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def mat_rank(m: Matrix) -> int:
    """Rank by fraction-free-ish Gaussian elimination on a working copy."""
    if not m or not m[0]:
        return 0
    work = [list(row) for row in m]
    rows, cols = len(work), len(work[0])
    rank = 0
    for col in range(cols):
        pivot = next(
            (r for r in range(rank, rows) if work[r][col] != 0), None
        )
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        for r in range(rank + 1, rows):
            if work[r][col] == 0:
                continue
            factor = work[r][col] * inv
            for c in range(col, cols):
                work[r][c] -= factor * work[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank


def _integer_rows(m: Matrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; return rows and the product of scales."""
    rows: list[list[int]] = []
    scale = Fraction(1)
    for row in m:
        mult = lcm(*(e.denominator for e in row)) if row else 1
        scale *= mult
        rows.append([int(e * mult) for e in row])
    return rows, scale


def mat_det(m: Matrix) -> Fraction:
    """Determinant via Bareiss elimination on an integer-scaled copy.

    Bareiss keeps every intermediate an integer with exact divisions,
    which avoids the denominator blow-up plain fraction elimination
    suffers on the large incidence systems produced upstream.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError(f"determinant requires a square matrix, got {len(m)} rows")
    if n == 0:
        return Fraction(1)
    work, scale = _integer_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if work[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return Fraction(sign * work[n - 1][n - 1]) / scale


def solve_affine_hull(points: tuple[Vector, ...]) -> tuple[Vector, tuple[Vector, ...]]:
    """Basepoint and a basis of direction vectors for the affine hull.

    The basepoint is the first input point and the basis is the greedy
    selection, in input order, of difference vectors that raise the rank.
    Keeping the original (unreduced) vectors in the basis makes charts
    built on top of this readable in examples and stable under reordering
    of later points.
    """
    if not points:
        raise ValueError("affine hull of an empty point set is undefined")
    base = points[0]
    basis: list[Vector] = []
    reduced: list[tuple[int, list[Fraction]]] = []  # (pivot column, reduced row)
    for p in points[1:]:
        row = list(vec_sub(p, base))
        for pc, rr in reduced:
            if row[pc] != 0:
                factor = row[pc] / rr[pc]
                for c in range(pc, len(row)):
                    row[c] -= factor * rr[c]
        pc = next((c for c, e in enumerate(row) if e != 0), None)
        if pc is None:
            continue
        basis.append(vec_sub(p, base))
        reduced.append((pc, row))
        reduced.sort(key=lambda item: item[0])
    return base, tuple(basis)


def _rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    work = [list(row) for row in m]
    rows = len(work)
    cols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][col]
        work[r] = [e * inv for e in work[r]]
        for i in range(rows):
            if i != r and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    return work, pivots


def nullspace_basis(m: Matrix) -> tuple[Vector, ...]:
    """Basis of the right kernel, one vector per free column.

    Vectors are emitted in ascending free-column order with the free
    coordinate set to 1, so the basis is canonical for a given input.
    An empty tuple means the matrix has full column rank.
    """
    if not m or not m[0]:
        cols = len(m[0]) if m else 0
        return tuple(
            tuple(Fraction(1) if i == j else Fraction(0) for i in range(cols))
            for j in range(cols)
        )
    work, pivots = _rref(m)
    cols = len(m[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -work[r][f]
        basis.append(tuple(v))
    return tuple(basis)


def solve_square(m: Matrix, rhs: Vector) -> Vector:
    """Unique solution of ``m @ x == rhs`` for invertible square ``m``."""
    n = len(m)
    work = [list(row) + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [e * inv for e in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return tuple(work[r][n] for r in range(n))


def mat_inverse(m: Matrix) -> Matrix:
    """Inverse of a square invertible matrix by Gauss-Jordan elimination."""
    n = len(m)
    work = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [e * inv for e in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return tuple(tuple(work[r][n:]) for r in range(n))


def integer_direction(v: Vector) -> tuple[int, ...]:
    """Primitive integer vector that is a positive multiple of ``v``.

    The zero vector is rejected: callers use this to canonicalize ray
    directions and facet normals, where zero is always a logic error.
    """
    if all(e == 0 for e in v):
        raise ValueError("zero vector has no direction")
    mult = lcm(*(e.denominator for e in v))
    ints = [int(e * mult) for e in v]
    g = gcd(*ints)
    return tuple(e // g for e in ints)


def canonical_inequality(normal: Vector, offset: Fraction) -> tuple[Vector, Fraction]:
    """Scale an inequality ``normal . x <= offset`` to a primitive integer normal.

    The scaling factor is positive, so the inequality direction is kept.
    The offset scales along and may remain a non-integer rational.
    """
    if all(e == 0 for e in normal):
        raise ValueError("inequality has a zero normal")
    mult = lcm(*(e.denominator for e in normal))
    ints = [int(e * mult) for e in normal]
    g = gcd(*ints)
    factor = Fraction(mult, g)
    return tuple(Fraction(e // g) for e in ints), offset * factor
