"""Vertex deletion, the minimality criterion, and the exceptional triangle
conv{(0,0),(1,d),(d,1)} with its detector.

A polygon is minimal when removing any single vertex (from its full set of
lattice points) strictly decreases the lattice width.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    NotAVertex,
    OutOfRange,
    Polygon,
    Vec,
    convex_hull,
    lattice_points,
    sub,
)
from .width import (
    _corner_difference_vectors,
    _segment_normal,
    iter_region_directions,
    lattice_width,
    width_in_direction,
)


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of the vertex-deletion criterion."""

    is_minimal: bool
    offending_vertex: Optional[Vec]
    width: int


def drop_vertex(p: Polygon, vertex: Vec) -> Polygon:
    """Hull of all lattice points of p except the given vertex."""
    if vertex not in p.vertices:
        raise NotAVertex(f"{vertex} is not a vertex of the polygon")
    remaining = lattice_points(p) - {vertex}
    return convex_hull(remaining)


def is_minimal(p: Polygon) -> MinimalityReport:
    """Vertex criterion: minimal iff every vertex deletion loses width.

    Points are minimal (width 0); segments never are (deleting an endpoint
    keeps width 0).  When several vertices offend, the lexicographically
    smallest is reported.
    """
    if p.dimension == 0:
        return MinimalityReport(True, None, 0)
    if p.dimension == 1:
        return MinimalityReport(False, p.vertices[0], 0)
    d = lattice_width(p).width
    offenders = [
        v for v in p.vertices if lattice_width(drop_vertex(p, v)).width >= d
    ]
    if offenders:
        return MinimalityReport(False, min(offenders), d)
    return MinimalityReport(True, None, d)


def upsilon(d: int) -> Polygon:
    """The triangle conv{(0,0),(1,d),(d,1)} of lattice width d, for d >= 2.

    At d = 1 the formula collapses to a segment, so it is rejected.
    """
    if d < 2:
        raise OutOfRange("the triangle degenerates for d < 2")
    return convex_hull([(0, 0), (1, d), (d, 1)])


def upsilon_lemma_witness(p: Polygon) -> Optional[tuple[Vec, Vec]]:
    """A pair (vertex P, direction v) with the deleted polygon narrower than
    d in direction v and narrower than p by more than one, if one exists.

    Any polygon admitting such a pair is equivalent to upsilon(d); this is
    the detector for that exceptional case.  Vertices are scanned in cycle
    order and directions in the fixed region order, so the first hit is
    deterministic.
    """
    d = lattice_width(p).width
    if d <= 0:
        raise OutOfRange("defined for polygons of positive lattice width")
    for vertex in p.vertices:
        remainder = drop_vertex(p, vertex)
        if remainder.dimension == 0:
            continue
        if remainder.dimension == 1:
            candidates = iter((_segment_normal(remainder),))
        else:
            u1, u2 = _corner_difference_vectors(remainder)
            candidates = iter_region_directions(u1, u2, d - 1)
        for v in candidates:
            narrowed = width_in_direction(remainder, v)
            if narrowed < d and narrowed < width_in_direction(p, v) - 1:
                return vertex, v
    return None
