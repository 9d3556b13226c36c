"""Shared generators and independent oracles for the test suite."""

import random

import numpy as np
import pytest

from latwidth import Polygon, UnimodularMap, compose_maps, convex_hull


def random_polygon(rng: random.Random, span: int = 8, points: int = 6) -> Polygon:
    """Hull of a handful of random lattice points; always 2-dimensional."""
    while True:
        pts = [(rng.randint(-span, span), rng.randint(-span, span)) for _ in range(points)]
        p = convex_hull(pts)
        if p.dimension == 2:
            return p


_SHEAR_UP = lambda k: UnimodularMap(1, k, 0, 1)
_SHEAR_LO = lambda k: UnimodularMap(1, 0, k, 1)
_SWAP = UnimodularMap(0, 1, 1, 0)
_FLIP = UnimodularMap(1, 0, 0, -1)


def random_unimodular(rng: random.Random, magnitude: int = 10) -> UnimodularMap:
    """Random short product of shears, swaps and flips with all matrix entries
    bounded by the magnitude, plus a random translation."""
    while True:
        m = UnimodularMap(1, 0, 0, 1)
        for _ in range(rng.randint(1, 4)):
            kind = rng.randrange(4)
            if kind == 0:
                m = compose_maps(_SHEAR_UP(rng.randint(-3, 3)), m)
            elif kind == 1:
                m = compose_maps(_SHEAR_LO(rng.randint(-3, 3)), m)
            elif kind == 2:
                m = compose_maps(_SWAP, m)
            else:
                m = compose_maps(_FLIP, m)
        entries = (m.a11, m.a12, m.a21, m.a22)
        if all(abs(e) <= magnitude for e in entries):
            return UnimodularMap(
                m.a11, m.a12, m.a21, m.a22,
                rng.randint(-magnitude, magnitude), rng.randint(-magnitude, magnitude),
            )


def naive_lattice_width(p: Polygon, factor: int = 4):
    """Vectorized exhaustive scan over every primitive direction with both
    coordinates bounded by factor * max(axis widths); independent of the
    library's bounded-region argument."""
    verts = np.array(p.vertices, dtype=np.int64)
    wx = int(verts[:, 0].max() - verts[:, 0].min())
    wy = int(verts[:, 1].max() - verts[:, 1].min())
    bound = factor * max(wx, wy)
    ax = np.arange(-bound, bound + 1, dtype=np.int64)
    vx, vy = np.meshgrid(ax, ax, indexing="ij")
    vx, vy = vx.ravel(), vy.ravel()
    keep = (np.gcd(np.abs(vx), np.abs(vy)) == 1) & ((vx > 0) | ((vx == 0) & (vy > 0)))
    vx, vy = vx[keep], vy[keep]
    dots = np.outer(vx, verts[:, 0]) + np.outer(vy, verts[:, 1])
    widths = dots.max(axis=1) - dots.min(axis=1)
    best = int(widths.min())
    idx = np.nonzero(widths == best)[0]
    return best, {(int(vx[i]), int(vy[i])) for i in idx}


@pytest.fixture
def rng():
    return random.Random(0x1A77)
