import math

import numpy as np
import pytest

from rotbox.domain.rotated_box import RotatedBox
from rotbox.errors import ConfigError
from rotbox.service import sampling
from rotbox.service.geom_core import box_polygon, intersect_convex, polygon_area
from rotbox.service.iou_metrics import rotated_iou
from rotbox.service.oracle import contains, dense_pixel_iou, joint_aabb, mc_intersection_area

SQUARE = RotatedBox.create(0, 0, 2, 2, 0)
SHIFTED_SQUARE = RotatedBox.create(1, 0, 2, 2, 0)
ROTATED_SQUARE = RotatedBox.create(0, 0, 2, 2, math.pi / 4)


def exact_intersection(a, b):
    return polygon_area(intersect_convex(box_polygon(a), box_polygon(b)))


def test_mc_area_of_identical_squares():
    estimate = mc_intersection_area(SQUARE, SQUARE, 10 ** 6, seed=1)
    # Every sample of the joint box lands in both squares.
    assert estimate.mean == pytest.approx(4.0)
    assert estimate.n_samples == 10 ** 6
    assert estimate.seed == 1


def test_mc_area_of_octagon():
    estimate = mc_intersection_area(SQUARE, ROTATED_SQUARE, 10 ** 6, seed=2)
    assert abs(estimate.mean - 8 * (math.sqrt(2) - 1)) <= 4 * estimate.std_err


def test_mc_area_of_disjoint_squares():
    estimate = mc_intersection_area(SQUARE, RotatedBox.create(4, 0, 2, 2, 0), 10 ** 5, seed=3)
    assert estimate.mean == 0.0
    assert estimate.hits == 0


def test_mc_estimate_is_reproducible_and_independent_of_workers():
    single = mc_intersection_area(SQUARE, SHIFTED_SQUARE, 100000, seed=42)
    again = mc_intersection_area(SQUARE, SHIFTED_SQUARE, 100000, seed=42)
    threaded = mc_intersection_area(SQUARE, SHIFTED_SQUARE, 100000, seed=42, max_workers=4)
    assert single.hits == again.hits == threaded.hits
    assert single.mean == threaded.mean


def test_mc_needs_enough_samples():
    with pytest.raises(ConfigError):
        mc_intersection_area(SQUARE, SQUARE, 9999, seed=0)


def test_mc_agrees_with_clipping_on_random_pairs():
    n = 10 ** 5
    misses = 0
    for index in range(200):
        a, b = sampling.overlapping_pair(sampling.generator(17, index))
        x0, y0, x1, y1 = joint_aabb(a, b)
        estimate = mc_intersection_area(a, b, n, seed=index)
        exact = exact_intersection(a, b)
        if abs(estimate.mean - exact) > 4 * estimate.std_err + (x1 - x0) * (y1 - y0) / n:
            misses += 1
    # Four sigma: a miss in 200 pairs is already unlikely.
    assert misses <= 1


def test_dense_iou_of_identical_boxes():
    box = RotatedBox.create(3, 2, 5, 3, 0.4)
    assert dense_pixel_iou(box, box, 0.05) == 1.0


def test_dense_iou_of_shifted_square():
    assert dense_pixel_iou(SQUARE, SHIFTED_SQUARE, 0.005) == pytest.approx(1.0 / 3.0, abs=0.01)


def test_dense_iou_of_thin_sliver():
    a = RotatedBox.create(0, 0, 10, 1, 0.05)
    b = RotatedBox.create(0, 0.8, 10, 1, -0.05)
    step = 0.01
    perimeter = 2 * (a.w + a.h)
    exact = rotated_iou(a, b)
    assert abs(dense_pixel_iou(a, b, step) - exact) <= 3 * step * perimeter / a.area()


def test_dense_iou_converges_as_the_step_shrinks():
    pairs = [sampling.overlapping_pair(sampling.generator(23, index), size_range=(4.0, 8.0)) for index in range(8)]
    exact = [rotated_iou(a, b) for a, b in pairs]
    errors = []
    for step in [0.4, 0.2, 0.1, 0.05, 0.025]:
        errors.append(np.mean([abs(dense_pixel_iou(a, b, step) - value) for (a, b), value in zip(pairs, exact)]))
    inversions = sum(1 for coarse, fine in zip(errors, errors[1:]) if fine > coarse)
    assert inversions <= 1
    assert errors[-1] < errors[0]


def test_dense_iou_rejects_bad_step():
    with pytest.raises(ConfigError):
        dense_pixel_iou(SQUARE, SQUARE, 0)


def test_contains_counts_boundary_as_inside():
    inside = contains(SQUARE, np.array([0.0, 1.0, 1.5]), np.array([0.0, 1.0, 0.0]))
    assert inside.tolist() == [True, True, False]
