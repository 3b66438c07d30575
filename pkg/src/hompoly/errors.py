"""Shared exception types for the geometric layers.

Everything derives from :class:`GeometryError` so callers that only
care about "the input was not a bounded full-dimensional polytope" can
catch one type, while tests and the CLI can branch on the specific
failure and report the attached witness data.
"""

from __future__ import annotations

from fractions import Fraction


class GeometryError(ValueError):
    """Base class for geometric input failures."""


class UnboundedError(GeometryError):
    """The inequality system admits an unbounded feasible direction."""

    def __init__(self, direction: tuple[Fraction, ...]):
        super().__init__(
            "polytope is unbounded in direction ("
            + ", ".join(str(e) for e in direction)
            + ")"
        )
        self.direction = direction


class InfeasibleError(GeometryError):
    """The inequality system has no solution."""

    def __init__(self, message: str = "inequality system is infeasible"):
        super().__init__(message)


class LowerDimensionalError(GeometryError):
    """The feasible set or point set is not full-dimensional.

    Carries the dimension of the affine hull; the usual fix is to
    project onto a chart of the hull first.
    """

    def __init__(self, hull_dim: int, ambient_dim: int):
        super().__init__(
            f"set spans a {hull_dim}-dimensional affine hull in "
            f"{ambient_dim}-dimensional space; project onto a chart of the "
            "hull (chart_project) before converting"
        )
        self.hull_dim = hull_dim
        self.ambient_dim = ambient_dim


class OutsideHullError(GeometryError):
    """A point handed to a chart does not lie in the chart's affine hull."""
