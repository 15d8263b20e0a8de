import math

import pytest
from hypothesis import given, settings

from box_strategies import boxes, box_pairs
from rotbox.domain.rotated_box import RotatedBox, normalize_angle
from rotbox.errors import GeometryError, NotARectangle
from rotbox.service import sampling
from rotbox.service.geom_core import EPS_RECT, box_from_corners, box_polygon, convex_hull, corners_from_box, \
    intersect_convex, min_enclosing_aabb, point_in_polygon, polygon_area, sort_corners

SQUARE = RotatedBox.create(0, 0, 2, 2, 0)
SHIFTED_SQUARE = RotatedBox.create(1, 0, 2, 2, 0)
ROTATED_SQUARE = RotatedBox.create(0, 0, 2, 2, math.pi / 4)
OCTAGON_AREA = 8 * (math.sqrt(2) - 1)


def rounded(points):
    return sorted((round(x, 9) + 0.0, round(y, 9) + 0.0) for x, y in points)


def test_corners_of_axis_aligned_square():
    assert [tuple(p) for p in corners_from_box(SQUARE)] == [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def test_square_corner_set_is_invariant_under_quarter_turn():
    turned = RotatedBox.create(0, 0, 2, 2, math.pi / 2)
    assert rounded(corners_from_box(turned)) == rounded(corners_from_box(SQUARE))


@pytest.mark.parametrize('box', [
    RotatedBox.create(1, 2, 4, 2, math.pi / 6),
    RotatedBox.create(-3.5, 7.25, 10, 3, -1.2),
    RotatedBox.create(100, 40, 6, 5, 0.3),
])
def test_box_from_corners_round_trip(box):
    recovered = box_from_corners(corners_from_box(box))
    assert recovered == pytest.approx(box, abs=1e-9)


def test_box_from_corners_round_trip_on_random_boxes():
    rng = sampling.generator(40)
    for _ in range(10000):
        w = float(rng.uniform(0.5, 60.0))
        box = RotatedBox.create(float(rng.uniform(-500.0, 500.0)), float(rng.uniform(-500.0, 500.0)), w,
                                w * float(rng.uniform(0.1, 2.0)), float(rng.uniform(-math.pi / 2, math.pi / 2)))
        recovered = box_from_corners(corners_from_box(box))
        for corner in corners_from_box(box):
            assert min(math.hypot(corner[0] - x, corner[1] - y) for x, y in corners_from_box(recovered)) < 1e-8
        assert recovered.w >= recovered.h * (1 - 1e-5)
        assert sorted([recovered.w, recovered.h]) == pytest.approx(sorted([box.w, box.h]), rel=1e-9)
        assert -math.pi / 2 <= recovered.theta < math.pi / 2


def test_box_from_corners_of_square():
    assert box_from_corners([(-1, -1), (-1, 1), (1, -1), (1, 1)]) == pytest.approx((0, 0, 2, 2, 0), abs=1e-12)


def test_box_from_corners_rejects_non_rectangle():
    with pytest.raises(NotARectangle) as e:
        box_from_corners([(-1, -1), (-1, 1), (1, -1), (1 + 10 * EPS_RECT, 1)])
    assert e.value.residual > EPS_RECT


def test_box_from_corners_puts_long_edge_in_w():
    box = box_from_corners(corners_from_box(RotatedBox.create(0, 0, 2, 6, 0.2)))
    assert box.w == pytest.approx(6)
    assert box.h == pytest.approx(2)


@pytest.mark.parametrize('points,expected', [
    ([(1, 1), (-1, -1), (1, -1), (-1, 1)], [(-1, -1), (-1, 1), (1, -1), (1, 1)]),
    ([(-1, -1), (-1, 1), (1, -1), (1, 1)], [(-1, -1), (-1, 1), (1, -1), (1, 1)]),
    ([(0, 5), (0, -5), (3, 0), (-3, 0)], [(-3, 0), (0, -5), (0, 5), (3, 0)]),
])
def test_sort_corners(points, expected):
    assert list(sort_corners(points)) == expected


def test_sort_corners_needs_four_points():
    with pytest.raises(GeometryError):
        sort_corners([(0, 0), (1, 0), (1, 1)])


def test_intersection_with_itself():
    assert polygon_area(intersect_convex(box_polygon(SQUARE), box_polygon(SQUARE))) == pytest.approx(4.0)


def test_intersection_with_shifted_square():
    assert polygon_area(intersect_convex(box_polygon(SQUARE), box_polygon(SHIFTED_SQUARE))) == pytest.approx(2.0)


def test_intersection_with_rotated_square_is_octagon():
    polygon = intersect_convex(box_polygon(SQUARE), box_polygon(ROTATED_SQUARE))
    assert len(polygon) == 8
    assert polygon_area(polygon) == pytest.approx(OCTAGON_AREA, abs=1e-9)


def test_disjoint_intersection_is_empty():
    assert intersect_convex(box_polygon(SQUARE), box_polygon(RotatedBox.create(4, 0, 2, 2, 0))) == []


@pytest.mark.parametrize('polygon,expected', [
    ([], 0.0),
    ([(0, 0), (1, 0), (1, 1), (0, 1)], 1.0),
    ([(0, 0), (0, 1), (1, 1), (1, 0)], 1.0),
])
def test_polygon_area(polygon, expected):
    assert polygon_area(polygon) == expected


def test_hull_of_square_corners():
    hull = convex_hull(box_polygon(SQUARE))
    assert rounded(hull) == rounded(box_polygon(SQUARE))
    assert polygon_area(hull) == pytest.approx(4.0)


def test_hull_of_two_disjoint_squares_contains_every_corner():
    points = box_polygon(SQUARE) + box_polygon(RotatedBox.create(5, 3, 2, 2, 0.4))
    hull = convex_hull(points)
    assert 4 <= len(hull) <= 8
    assert all(point_in_polygon(point, hull) for point in points)


def test_hull_of_collinear_points_is_degenerate():
    assert polygon_area(convex_hull([(0, 0), (1, 1), (2, 2), (3, 3)])) == 0.0


@pytest.mark.parametrize('a,b,expected', [
    (SQUARE, SQUARE, (2, 2)),
    (SQUARE, RotatedBox.create(3, 0, 2, 2, 0), (5, 2)),
    (SQUARE, ROTATED_SQUARE, (2 * math.sqrt(2), 2 * math.sqrt(2))),
])
def test_min_enclosing_aabb(a, b, expected):
    assert min_enclosing_aabb(box_polygon(a), box_polygon(b)) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize('theta,expected', [
    (0.0, 0.0),
    (math.pi / 2, -math.pi / 2),
    (math.pi, 0.0),
    (-3 * math.pi / 4, math.pi / 4),
])
def test_normalize_angle(theta, expected):
    assert normalize_angle(theta) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize('fields', [
    (0, 0, 0, 1, 0),
    (0, 0, 1, -1, 0),
    (float('nan'), 0, 1, 1, 0),
    (0, 0, 1, 1, float('inf')),
])
def test_invalid_boxes_are_rejected(fields):
    with pytest.raises(GeometryError):
        RotatedBox.create(*fields)


@settings(max_examples=200, deadline=None)
@given(box_pairs())
def test_intersection_area_is_symmetric_and_bounded(pair):
    a, b = pair
    ab = polygon_area(intersect_convex(box_polygon(a), box_polygon(b)))
    ba = polygon_area(intersect_convex(box_polygon(b), box_polygon(a)))
    scale = max(1.0, a.area(), b.area())
    assert ab == pytest.approx(ba, abs=1e-9 * scale)
    assert ab <= min(a.area(), b.area()) + 1e-9 * scale


@settings(max_examples=200, deadline=None)
@given(boxes())
def test_corners_enclose_box_area(box):
    assert polygon_area(box_polygon(box)) == pytest.approx(box.w * box.h, rel=1e-9)
