import json
import math

import pytest
from hypothesis import given, strategies as st

from latwidth import (
    EmptyInput,
    NotUnimodular,
    Polygon,
    UnimodularMap,
    ZeroVector,
    apply_map,
    boundary_point_count,
    compose_maps,
    convex_hull,
    doubled_area,
    invert_map,
    lattice_points,
    make_primitive,
    polygon_from_json,
    polygon_to_json,
)
from conftest import random_polygon, random_unimodular

coord = st.integers(min_value=-50, max_value=50)


def test_make_primitive_examples():
    assert make_primitive((4, 6)) == (2, 3)
    assert make_primitive((0, 5)) == (0, 1)
    assert make_primitive((-3, 0)) == (-1, 0)


def test_make_primitive_zero():
    with pytest.raises(ZeroVector):
        make_primitive((0, 0))


@given(coord, coord)
def test_make_primitive_is_primitive_and_proportional(x, y):
    if (x, y) == (0, 0):
        return
    px, py = make_primitive((x, y))
    assert math.gcd(abs(px), abs(py)) == 1
    # positively proportional: same cross product and same sign pattern
    assert px * y == py * x
    assert px * x + py * y > 0


def test_convex_hull_examples():
    assert convex_hull([(0, 0)]).vertices == ((0, 0),)
    assert convex_hull([(0, 0), (1, 0), (2, 0)]).vertices == ((0, 0), (2, 0))
    hull = convex_hull([(0, 0), (2, 0), (0, 2), (1, 1)])
    assert hull.vertices == ((0, 0), (2, 0), (0, 2))
    assert hull.dimension == 2


def test_convex_hull_empty():
    with pytest.raises(EmptyInput):
        convex_hull([])


def test_hull_starts_at_lexicographic_minimum(rng):
    for _ in range(200):
        p = random_polygon(rng)
        assert p.vertices[0] == min(p.vertices)


def test_hull_idempotence(rng):
    for _ in range(200):
        p = random_polygon(rng, span=6)
        again = convex_hull(lattice_points(p))
        assert again.vertices == p.vertices


def test_lattice_points_examples():
    simplex2 = convex_hull([(0, 0), (2, 0), (0, 2)])
    assert len(lattice_points(simplex2)) == 6  # (d+1)(d+2)/2 at d=2
    assert lattice_points(convex_hull([(3, 5)])) == {(3, 5)}
    skew = convex_hull([(0, 0), (1, 2), (2, 1)])
    assert lattice_points(skew) == {(0, 0), (1, 1), (1, 2), (2, 1)}


def test_doubled_area_examples():
    assert doubled_area(convex_hull([(0, 0), (4, 2), (2, 4)])) == 12
    assert doubled_area(convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])) == 2
    assert doubled_area(convex_hull([(0, 0), (3, 3)])) == 0
    assert doubled_area(convex_hull([(7, 7)])) == 0


def test_pick_consistency(rng):
    # interior + boundary bookkeeping: 2*points = doubled_area + boundary + 2
    for _ in range(1000):
        p = random_polygon(rng, span=7, points=5)
        total = len(lattice_points(p))
        assert 2 * total == doubled_area(p) + boundary_point_count(p) + 2


def test_apply_map_examples():
    tri = convex_hull([(0, 0), (1, 4), (3, 4)])
    sheared = apply_map(UnimodularMap(1, 0, -1, 1), tri)  # (x, y) -> (x, y - x)
    assert sheared.vertices == convex_hull([(0, 0), (1, 3), (3, 1)]).vertices

    p = convex_hull([(0, 0), (2, 0), (0, 2)])
    assert apply_map(UnimodularMap(1, 0, 0, 1), p) == p
    flipped = apply_map(UnimodularMap(1, 0, 0, -1), p)  # (x, y) -> (x, -y)
    assert set(flipped.vertices) == {(0, 0), (2, 0), (0, -2)}


def test_apply_map_rejects_singular():
    with pytest.raises(NotUnimodular):
        apply_map(UnimodularMap(2, 0, 0, 1), convex_hull([(0, 0)]))


def test_apply_map_preserves_lattice_invariants(rng):
    for _ in range(300):
        p = random_polygon(rng, span=6)
        m = random_unimodular(rng)
        q = apply_map(m, p)
        assert doubled_area(q) == doubled_area(p)
        assert len(lattice_points(q)) == len(lattice_points(p))


def test_invert_map_examples():
    ident = UnimodularMap(1, 0, 0, 1)
    assert invert_map(ident) == ident
    shear = UnimodularMap(1, 1, 0, 1)
    assert invert_map(shear) == UnimodularMap(1, -1, 0, 1)
    swap = UnimodularMap(0, 1, 1, 0, 2, 3)
    assert invert_map(swap) == UnimodularMap(0, 1, 1, 0, -3, -2)


def test_invert_then_apply_is_identity(rng):
    for _ in range(1000):
        p = random_polygon(rng, span=6, points=4)
        m = random_unimodular(rng)
        assert apply_map(invert_map(m), apply_map(m, p)) == p


def test_compose_maps(rng):
    for _ in range(200):
        m1 = random_unimodular(rng)
        m2 = random_unimodular(rng)
        q = (rng.randint(-9, 9), rng.randint(-9, 9))
        assert compose_maps(m2, m1).apply(q) == m2.apply(m1.apply(q))


def test_polygon_json_roundtrip():
    p = convex_hull([(0, 0), (1, 2), (2, 1)])
    assert polygon_from_json(polygon_to_json(p)) == p
    # the reader hulls arbitrary point lists
    q = polygon_from_json(json.dumps({"vertices": [[0, 0], [1, 1], [2, 0], [1, 0]]}))
    assert q.vertices == ((0, 0), (2, 0), (1, 1))


@pytest.mark.parametrize(
    "text",
    [
        "[]",
        '{"vertices": []}',
        '{"vertices": [[0]]}',
        '{"vertices": [[0, 0.5]]}',
        '{"points": [[0, 0]]}',
    ],
)
def test_polygon_json_rejects_malformed(text):
    with pytest.raises(ValueError):
        polygon_from_json(text)
