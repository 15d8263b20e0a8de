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

"""Seeded random boxes and box pairs.

Every stream is a numpy PCG64 generator derived from a SeedSequence, so a
(seed, index) pair always reproduces the same draw whatever the worker count.
"""

import math

import numpy as np

from rotbox.domain.rotated_box import RotatedBox


def generator(seed, *spawn_key):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=tuple(spawn_key))))


def uniform(rng, value_range):
    low, high = value_range
    return float(rng.uniform(low, high))


def random_box(rng, center_range=(0.0, 50.0), size_range=(4.0, 20.0), aspect_range=(0.3, 1.0),
               angle_range=(-math.pi / 2, math.pi / 2)):
    w = uniform(rng, size_range)
    h = w * uniform(rng, aspect_range)
    return RotatedBox.create(uniform(rng, center_range), uniform(rng, center_range), w, h,
                             uniform(rng, angle_range))


def circumradius(box):
    return 0.5 * math.hypot(box.w, box.h)


def jittered_box(rng, target, scale_range=(0.75, 1.33), aspect_range=(0.5, 1.0),
                 angle_range=(-math.pi / 2, math.pi / 2), offset_range=(0.0, 0.3)):
    """A box near ``target``; the center offset is in units of the summed circumradii.

    Offsets above 1 guarantee the two boxes are disjoint.
    """
    w = target.w * uniform(rng, scale_range)
    h = w * uniform(rng, aspect_range)
    reach = circumradius(target) + 0.5 * math.hypot(w, h)
    distance = uniform(rng, offset_range) * reach
    direction = uniform(rng, (-math.pi, math.pi))
    return RotatedBox.create(target.cx + distance * math.cos(direction),
                             target.cy + distance * math.sin(direction),
                             w, h, uniform(rng, angle_range))


def overlapping_pair(rng, center_range=(10.0, 40.0), size_range=(6.0, 16.0)):
    gt = random_box(rng, center_range=center_range, size_range=size_range)
    return gt, jittered_box(rng, gt, offset_range=(0.0, 0.35))


def disjoint_pair(rng, center_range=(10.0, 40.0), size_range=(6.0, 16.0)):
    gt = random_box(rng, center_range=center_range, size_range=size_range)
    return gt, jittered_box(rng, gt, offset_range=(1.05, 1.6))


def boxes_inside(rng, dims, margin=1.0, size_range=(4.0, 40.0)):
    """A random box whose four corners lie inside an image of ``dims``."""
    while True:
        w = uniform(rng, size_range)
        h = w * uniform(rng, (0.2, 1.0))
        theta = uniform(rng, (-math.pi / 2, math.pi / 2))
        half_x = 0.5 * (abs(w * math.cos(theta)) + abs(h * math.sin(theta)))
        half_y = 0.5 * (abs(w * math.sin(theta)) + abs(h * math.cos(theta)))
        if 2 * (half_x + margin) < dims.w and 2 * (half_y + margin) < dims.h:
            cx = uniform(rng, (half_x + margin, dims.w - half_x - margin))
            cy = uniform(rng, (half_y + margin, dims.h - half_y - margin))
            return RotatedBox.create(cx, cy, w, h, theta)
