"""Canonical forms under unimodular equivalence, and equivalence testing.

Every equivalence class gets one distinguished vertex sequence: for each
vertex, each incident edge, and each orientation of the polygon, there is a
unique orientation-preserving lattice map that sends the vertex to the
origin, the edge direction to (1, 0), and the polygon into the upper half
plane, with the leftover shear pinned by reducing the other edge direction
at that vertex.  The canonical form is the lexicographically smallest of the
resulting vertex sequences, so it is the same for every polygon in the
class and doubles as a dictionary key.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .core import (
    IDENTITY_MAP,
    Polygon,
    UnimodularMap,
    Vec,
    apply_map,
    compose_maps,
    cross,
    invert_map,
    make_primitive,
    sub,
)

_MIRROR = UnimodularMap(1, 0, 0, -1)


@dataclass(frozen=True)
class CanonicalForm:
    """Distinguished representative of an equivalence class, starting at (0,0)."""

    vertices: tuple[Vec, ...]

    @property
    def byte_key(self) -> str:
        return ",".join(str(c) for v in self.vertices for c in v)

    def polygon(self) -> Polygon:
        from .core import convex_hull

        return convex_hull(self.vertices)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _matrix_sending_to_x_axis(e: Vec) -> UnimodularMap:
    # determinant +1 matrix with A e = (1, 0); rows (s, t) and (-ey, ex)
    g, s, t = _xgcd(e[0], e[1])
    assert abs(g) == 1
    if g < 0:
        s, t = -s, -t
    return UnimodularMap(s, t, -e[1], e[0])


def _normalizing_map(q: Polygon, i: int, outgoing: bool) -> UnimodularMap:
    """The unique det +1 map for vertex i of q and one incident edge: vertex to
    (0,0), edge direction to (1,0), shear reduced against the other edge."""
    vs = q.vertices
    n = len(vs)
    v = vs[i]
    if outgoing:
        e = make_primitive(sub(vs[(i + 1) % n], v))
        f = make_primitive(sub(vs[(i - 1) % n], v))
    else:
        e = make_primitive(sub(v, vs[(i - 1) % n]))
        f = make_primitive(sub(vs[(i + 1) % n], v))
    base = _matrix_sending_to_x_axis(e)
    a0, b0 = base.apply(f)
    assert b0 > 0, "convex counterclockwise corner maps above the x-axis"
    t = a0 // b0
    shear = UnimodularMap(1, -t, 0, 1)
    m = compose_maps(shear, base)
    ix, iy = m.apply(v)
    return UnimodularMap(m.a11, m.a12, m.a21, m.a22, -ix, -iy)


def _candidate_forms(p: Polygon) -> list[tuple[tuple[Vec, ...], UnimodularMap]]:
    """All 4 * vertex-count candidate (vertex sequence, map) pairs for a
    2-dimensional polygon."""
    out = []
    for mirrored in (False, True):
        if mirrored:
            q = apply_map(_MIRROR, p)
            pre = _MIRROR
        else:
            q = p
            pre = IDENTITY_MAP
        n = len(q.vertices)
        for i in range(n):
            for outgoing in (True, False):
                m = _normalizing_map(q, i, outgoing)
                seq = tuple(m.apply(q.vertices[(i + j) % n]) for j in range(n))
                out.append((seq, compose_maps(m, pre)))
    return out


def _canonical_with_map(p: Polygon) -> tuple[CanonicalForm, UnimodularMap]:
    if p.dimension == 0:
        x, y = p.vertices[0]
        return CanonicalForm(((0, 0),)), UnimodularMap(1, 0, 0, 1, -x, -y)
    if p.dimension == 1:
        a, b = p.vertices
        seg = sub(b, a)
        length = gcd(abs(seg[0]), abs(seg[1]))
        m = _matrix_sending_to_x_axis(make_primitive(seg))
        ix, iy = m.apply(a)
        full = UnimodularMap(m.a11, m.a12, m.a21, m.a22, -ix, -iy)
        return CanonicalForm(((0, 0), (length, 0))), full

    def flat(seq):
        return tuple(c for v in seq for c in v)

    best_seq, best_map = None, None
    for seq, m in _candidate_forms(p):
        if best_seq is None or flat(seq) < flat(best_seq):
            best_seq, best_map = seq, m
    return CanonicalForm(best_seq), best_map


def canonical_form(p: Polygon) -> CanonicalForm:
    """The class-invariant vertex sequence for p."""
    return _canonical_with_map(p)[0]


def are_equivalent(p: Polygon, q: Polygon) -> Optional[UnimodularMap]:
    """A unimodular map taking p onto q, or None when no such map exists."""
    fp, mp = _canonical_with_map(p)
    fq, mq = _canonical_with_map(q)
    if fp.vertices != fq.vertices:
        return None
    witness = compose_maps(invert_map(mq), mp)
    assert apply_map(witness, p) == q
    return witness
