# MIT License
#
# Copyright (c) 2024 rotbox-metrics authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Pixel-kernel IoU: hard inside test, sigmoid membership and lattice sums."""

import math

import numpy as np

from rotbox.diffcheck import dmath
from rotbox.diffcheck.dual import real
from rotbox.domain.piou_config import DEFAULT_PIOU_CONFIG
from rotbox.errors import EmptySupport
from rotbox.service.geom_core import box_polygon

EXPONENT_CAP = 700.0


def _direction_angle(dx, dy, distance):
    # Angle of the pixel-to-center vector through arccos, signed by its y part.
    if distance == 0:
        return 0.0
    angle = math.acos(min(1.0, max(-1.0, dx / distance)))
    return angle if dy >= 0 else -angle


def axis_distances(pixel, box):
    """Distances of ``pixel`` from the center of ``box`` along its w and h axes."""
    dx = float(real(box.cx)) - pixel[0]
    dy = float(real(box.cy)) - pixel[1]
    distance = math.sqrt(dx * dx + dy * dy)
    beta = _direction_angle(dx, dy, distance) - float(real(box.theta))
    return abs(distance * math.cos(beta)), abs(distance * math.sin(beta))


def hard_inside(pixel, box):
    d_w, d_h = axis_distances(pixel, box)
    return 1 if d_w <= real(box.w) / 2.0 and d_h <= real(box.h) / 2.0 else 0


def hard_inside_grid(xs, ys, box):
    """Vectorized hard_inside over matching coordinate arrays; returns a bool array."""
    dx = float(real(box.cx)) - xs
    dy = float(real(box.cy)) - ys
    distance = np.sqrt(dx * dx + dy * dy)
    with np.errstate(divide='ignore', invalid='ignore'):
        ratio = np.where(distance > 0, dx / np.where(distance > 0, distance, 1.0), 1.0)
    angle = np.arccos(np.clip(ratio, -1.0, 1.0))
    beta = np.where(dy >= 0, angle, -angle) - float(real(box.theta))
    d_w = np.abs(distance * np.cos(beta))
    d_h = np.abs(distance * np.sin(beta))
    return (d_w <= float(real(box.w)) / 2.0) & (d_h <= float(real(box.h)) / 2.0)


def kernel(d, s, k):
    """1 - 1/(1 + exp(-k(d - s))), written in its overflow-safe form."""
    return 1.0 / (1.0 + dmath.exp(dmath.minimum(k * (d - s), EXPONENT_CAP)))


def _thresholds(box, cfg):
    if cfg.half_extent_thresholds:
        return box.w * 0.5, box.h * 0.5
    return box.w, box.h


def membership(xs, ys, box, cfg=DEFAULT_PIOU_CONFIG):
    """Soft membership of lattice points; smooth in the box parameters."""
    cos_t = dmath.cos(box.theta)
    sin_t = dmath.sin(box.theta)
    dx = xs - box.cx
    dy = ys - box.cy
    d_w = abs(dx * cos_t + dy * sin_t)
    d_h = abs(dy * cos_t - dx * sin_t)
    s_w, s_h = _thresholds(box, cfg)
    return kernel(d_w, s_w, cfg.k) * kernel(d_h, s_h, cfg.k)


def soft_membership(pixel, box, cfg=DEFAULT_PIOU_CONFIG):
    return membership(float(pixel[0]), float(pixel[1]), box, cfg)


class Lattice(object):
    def __init__(self, xs, ys, step):
        self.xs = xs
        self.ys = ys
        self.step = step

    @property
    def size(self):
        return int(self.xs.size)


def joint_bounds(boxes):
    xs = []
    ys = []
    for box in boxes:
        for x, y in box_polygon(box):
            xs.append(real(x))
            ys.append(real(y))
    return min(xs), min(ys), max(xs), max(ys)


def build_lattice(gt, prd, cfg=DEFAULT_PIOU_CONFIG):
    """Cell centers of a regular grid covering the padded joint bounding box."""
    x0, y0, x1, y1 = joint_bounds([gt, prd])
    x0, y0, x1, y1 = x0 - cfg.pad, y0 - cfg.pad, x1 + cfg.pad, y1 + cfg.pad
    nx = int(math.ceil((x1 - x0) / cfg.grid_step))
    ny = int(math.ceil((y1 - y0) / cfg.grid_step))
    column = x0 + (np.arange(max(nx, 0)) + 0.5) * cfg.grid_step
    row = y0 + (np.arange(max(ny, 0)) + 0.5) * cfg.grid_step
    xs, ys = np.meshgrid(column, row)
    return Lattice(xs, ys, cfg.grid_step)


def piou_sums(gt, prd, cfg=DEFAULT_PIOU_CONFIG, lattice=None):
    """Approximate intersection and union areas as lattice sums."""
    if lattice is None:
        lattice = build_lattice(gt, prd, cfg)
    if lattice.size == 0:
        raise EmptySupport('The sampling lattice is empty')
    f_gt = membership(lattice.xs, lattice.ys, gt, cfg)
    f_prd = membership(lattice.xs, lattice.ys, prd, cfg)
    both = f_gt * f_prd
    cell = lattice.step * lattice.step
    intersection = dmath.total(both) * cell
    union = dmath.total(f_gt + f_prd - both) * cell
    return intersection, union


def piou(gt, prd, cfg=DEFAULT_PIOU_CONFIG, lattice=None):
    intersection, union = piou_sums(gt, prd, cfg, lattice)
    if not real(union) > 0:
        raise EmptySupport('No lattice point has positive membership in either box')
    return intersection / union
