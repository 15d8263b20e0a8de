import math

import numpy as np
import pytest

from rotbox.domain.piou_config import PiouConfig
from rotbox.domain.rotated_box import RotatedBox
from rotbox.errors import ConfigError, EmptySupport
from rotbox.service import sampling
from rotbox.service.iou_metrics import rotated_iou
from rotbox.service.oracle import contains
from rotbox.service.piou_metric import Lattice, build_lattice, hard_inside, hard_inside_grid, membership, piou, \
    soft_membership

BOX = RotatedBox.create(0, 0, 4, 2, math.pi / 6)
SHARP = PiouConfig.create(k=50, grid_step=0.01)
SHARP_COARSE = PiouConfig.create(k=50, grid_step=0.02)


def in_box_frame(box, u, v):
    cos_t = math.cos(box.theta)
    sin_t = math.sin(box.theta)
    return box.cx + u * cos_t - v * sin_t, box.cy + u * sin_t + v * cos_t


def test_center_is_inside():
    assert hard_inside((BOX.cx, BOX.cy), BOX) == 1


def test_point_far_along_the_long_axis_is_outside():
    assert hard_inside(in_box_frame(BOX, 2 * BOX.w, 0.0), BOX) == 0


@pytest.mark.parametrize('u,expected', [(1.9, 1), (2.1, 0), (-1.9, 1), (-2.1, 0)])
def test_hard_inside_along_the_long_axis(u, expected):
    assert hard_inside(in_box_frame(BOX, u, 0.0), BOX) == expected


@pytest.mark.parametrize('v,expected', [(0.9, 1), (1.1, 0), (-0.9, 1), (-1.1, 0)])
def test_hard_inside_along_the_short_axis(v, expected):
    assert hard_inside(in_box_frame(BOX, 0.0, v), BOX) == expected


def test_hard_inside_agrees_with_box_frame_containment():
    rng = sampling.generator(11)
    for _ in range(50):
        box = sampling.random_box(rng, center_range=(-10.0, 10.0))
        xs = rng.uniform(-30.0, 30.0, 2000)
        ys = rng.uniform(-30.0, 30.0, 2000)
        dx = xs - box.cx
        dy = ys - box.cy
        along = np.abs(dx * math.cos(box.theta) + dy * math.sin(box.theta))
        across = np.abs(dy * math.cos(box.theta) - dx * math.sin(box.theta))
        clear = (np.abs(along - box.w / 2) > 1e-6) & (np.abs(across - box.h / 2) > 1e-6)
        expected = contains(box, xs, ys)
        assert np.array_equal(hard_inside_grid(xs, ys, box)[clear], expected[clear])
        for x, y, inside in list(zip(xs[clear], ys[clear], expected[clear]))[:100]:
            assert hard_inside((x, y), box) == int(inside)


def test_hard_inside_on_random_box_point_pairs():
    rng = sampling.generator(12)
    n = 100000
    cx, cy = rng.uniform(-10.0, 10.0, (2, n))
    w = rng.uniform(4.0, 20.0, n)
    h = w * rng.uniform(0.3, 1.0, n)
    theta = rng.uniform(-math.pi / 2, math.pi / 2, n)
    xs = cx + rng.uniform(-15.0, 15.0, n)
    ys = cy + rng.uniform(-15.0, 15.0, n)
    along = np.abs((xs - cx) * np.cos(theta) + (ys - cy) * np.sin(theta))
    across = np.abs((ys - cy) * np.cos(theta) - (xs - cx) * np.sin(theta))
    clear = (np.abs(along - w / 2) > 1e-6) & (np.abs(across - h / 2) > 1e-6)
    expected = (along <= w / 2) & (across <= h / 2)
    assert clear.sum() > 0.99 * n
    for i in np.flatnonzero(clear):
        box = RotatedBox.create(float(cx[i]), float(cy[i]), float(w[i]), float(h[i]), float(theta[i]))
        assert hard_inside((float(xs[i]), float(ys[i])), box) == int(expected[i])


def test_membership_at_center():
    box = RotatedBox.create(0, 0, 4, 2, 0)
    assert soft_membership((0.0, 0.0), box) > 0.25


def test_membership_at_half_extents_is_a_quarter():
    box = RotatedBox.create(0, 0, 4, 2, 0)
    assert soft_membership((2.0, 1.0), box) == pytest.approx(0.25, abs=1e-15)


def test_membership_with_full_extent_thresholds():
    box = RotatedBox.create(0, 0, 4, 2, 0)
    cfg = PiouConfig.create(half_extent_thresholds=False)
    assert soft_membership((4.0, 2.0), box, cfg) == pytest.approx(0.25, abs=1e-15)


def test_membership_decreases_along_rays():
    distances = np.linspace(0.0, 6.0, 200)
    for angle in np.linspace(0.0, 2 * math.pi, 12, endpoint=False):
        xs = BOX.cx + distances * math.cos(angle)
        ys = BOX.cy + distances * math.sin(angle)
        values = membership(xs, ys, BOX)
        assert np.all(np.diff(values) <= 1e-15)


def test_sharp_membership_approaches_the_hard_test():
    box = RotatedBox.create(0, 0, 6, 3, 0.4)
    cfg = PiouConfig.create(k=50)
    xs, ys = np.meshgrid(np.linspace(-5, 5, 101), np.linspace(-5, 5, 101))
    values = membership(xs, ys, box, cfg)
    hard = hard_inside_grid(xs, ys, box)
    cos_t = math.cos(box.theta)
    sin_t = math.sin(box.theta)
    along = np.abs((xs - box.cx) * cos_t + (ys - box.cy) * sin_t) - box.w / 2
    across = np.abs((ys - box.cy) * cos_t - (xs - box.cx) * sin_t) - box.h / 2
    # Away from the edges the kernel has saturated.
    clear = (np.abs(along) > 0.2) & (np.abs(across) > 0.2)
    assert np.all(np.abs(values[clear] - hard[clear]) < 0.01)


def test_piou_of_identical_boxes():
    box = RotatedBox.create(0, 0, 10, 10, 0)
    # A fixed k leaves a boundary deficit of about 2 * perimeter / (k * area).
    assert piou(box, box, PiouConfig.create(k=50, grid_step=0.05)) == pytest.approx(0.984425, abs=1e-5)


def test_piou_of_identical_boxes_with_full_extent_thresholds():
    box = RotatedBox.create(0, 0, 10, 10, 0)
    cfg = PiouConfig.create(k=50, grid_step=0.05, half_extent_thresholds=False)
    assert piou(box, box, cfg) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize('gt,prd', [
    (RotatedBox.create(0, 0, 10, 10, 0), RotatedBox.create(0, 0, 10, 10, 0)),
    (RotatedBox.create(0, 0, 2, 2, 0), RotatedBox.create(1, 0, 2, 2, 0)),
    (RotatedBox.create(0, 0, 6, 4, 0.3), RotatedBox.create(1, 0.5, 5, 4, -0.2)),
])
def test_piou_error_halves_when_k_grows_as_the_step_shrinks(gt, prd):
    exact = rotated_iou(gt, prd)
    errors = []
    for step in [0.1, 0.05, 0.025]:
        cfg = PiouConfig.create(k=2.5 / step, grid_step=step)
        errors.append(abs(piou(gt, prd, cfg) - exact))
    for coarse, fine in zip(errors, errors[1:]):
        assert fine < 0.6 * coarse
    assert errors[-1] < 0.01


def test_piou_of_far_disjoint_boxes():
    gt = RotatedBox.create(0, 0, 2, 2, 0)
    prd = RotatedBox.create(200, 0, 2, 2, 0)
    assert piou(gt, prd) < 1e-6


def test_piou_of_shifted_square_approaches_exact_iou():
    gt = RotatedBox.create(0, 0, 2, 2, 0)
    prd = RotatedBox.create(1, 0, 2, 2, 0)
    assert piou(gt, prd, SHARP) == pytest.approx(1.0 / 3.0, abs=0.02)


def test_piou_tracks_exact_iou_on_random_pairs():
    rng = sampling.generator(3)
    for _ in range(20):
        gt, prd = sampling.overlapping_pair(rng, center_range=(0.0, 4.0), size_range=(4.0, 8.0))
        assert piou(gt, prd, SHARP_COARSE) == pytest.approx(rotated_iou(gt, prd), abs=0.02)


def test_piou_is_symmetric():
    gt = RotatedBox.create(1, 2, 6, 3, 0.3)
    prd = RotatedBox.create(2, 1.5, 5, 4, -0.6)
    assert piou(gt, prd) == piou(prd, gt)


def test_lattice_covers_both_boxes():
    gt = RotatedBox.create(0, 0, 2, 2, 0)
    prd = RotatedBox.create(5, 0, 2, 2, 0)
    lattice = build_lattice(gt, prd, PiouConfig.create(grid_step=0.5))
    assert lattice.xs.min() < -1 - 0.5
    assert lattice.xs.max() > 6 + 0.5
    assert lattice.xs.shape == lattice.ys.shape


def test_empty_lattice_is_rejected():
    box = RotatedBox.create(0, 0, 2, 2, 0)
    with pytest.raises(EmptySupport):
        piou(box, box, lattice=Lattice(np.empty((0, 0)), np.empty((0, 0)), 1.0))


@pytest.mark.parametrize('kwargs', [dict(k=0), dict(k=float('inf')), dict(grid_step=0), dict(pad=-1)])
def test_invalid_piou_config(kwargs):
    with pytest.raises(ConfigError):
        PiouConfig.create(**kwargs)
