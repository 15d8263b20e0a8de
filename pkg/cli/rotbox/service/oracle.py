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

"""Brute-force references for the exact geometry: Monte Carlo intersection areas
and a dense hard-indicator pixel IoU.

Monte Carlo draws are split into fixed-size chunks, each with its own PCG64
stream spawned from the seed. Chunks only contribute integer hit counts, so the
estimate is identical for any number of workers.
"""

import math

import numpy as np

from rotbox.domain.mc_estimate import McEstimate
from rotbox.errors import ConfigError
from rotbox.executors.batch_work_executor import BatchWorkExecutor
from rotbox.service.geom_core import box_polygon
from rotbox.service.piou_metric import hard_inside_grid

MIN_SAMPLES = 10000
CHUNK_SIZE = 1 << 15
DENSE_ROWS_PER_CHUNK = 256


def contains(box, xs, ys):
    """Box-frame containment of sample points; boundary counts as inside."""
    cos_t = math.cos(box.theta)
    sin_t = math.sin(box.theta)
    dx = xs - box.cx
    dy = ys - box.cy
    along = dx * cos_t + dy * sin_t
    across = dy * cos_t - dx * sin_t
    return (np.abs(along) <= box.w / 2.0) & (np.abs(across) <= box.h / 2.0)


def joint_aabb(a, b):
    points = box_polygon(a) + box_polygon(b)
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def _chunk_hits(a, b, bounds, seed_sequence, count):
    x0, y0, x1, y1 = bounds
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    xs = rng.uniform(x0, x1, count)
    ys = rng.uniform(y0, y1, count)
    return int(np.count_nonzero(contains(a, xs, ys) & contains(b, xs, ys)))


def mc_intersection_area(a, b, n, seed, max_workers=1):
    if n < MIN_SAMPLES:
        raise ConfigError('Monte Carlo needs at least {} samples, got {}'.format(MIN_SAMPLES, n))
    bounds = joint_aabb(a, b)
    x0, y0, x1, y1 = bounds
    sampling_area = (x1 - x0) * (y1 - y0)

    chunk_counts = [CHUNK_SIZE] * (n // CHUNK_SIZE)
    if n % CHUNK_SIZE:
        chunk_counts.append(n % CHUNK_SIZE)
    children = np.random.SeedSequence(seed).spawn(len(chunk_counts))
    chunks = list(zip(children, chunk_counts))

    if max_workers > 1:
        executor = BatchWorkExecutor(1, max_workers, progress_name='Monte Carlo chunks')
        hits = executor.map(chunks, lambda chunk: _chunk_hits(a, b, bounds, *chunk))
    else:
        hits = [_chunk_hits(a, b, bounds, *chunk) for chunk in chunks]

    total_hits = sum(hits)
    fraction = total_hits / n
    estimate = McEstimate()
    estimate.mean = sampling_area * fraction
    estimate.std_err = sampling_area * math.sqrt(fraction * (1.0 - fraction) * n / (n - 1)) / math.sqrt(n)
    estimate.n_samples = n
    estimate.seed = seed
    estimate.hits = total_hits
    return estimate


def dense_pixel_iou(a, b, step):
    """IoU from hard inside counts at the cell centers of a ``step`` lattice."""
    if not step > 0:
        raise ConfigError('step must be positive, got {}'.format(step))
    x0, y0, x1, y1 = joint_aabb(a, b)
    columns = x0 + (np.arange(int(math.ceil((x1 - x0) / step))) + 0.5) * step
    rows = y0 + (np.arange(int(math.ceil((y1 - y0) / step))) + 0.5) * step
    intersection = 0
    union = 0
    for start in range(0, rows.size, DENSE_ROWS_PER_CHUNK):
        xs, ys = np.meshgrid(columns, rows[start:start + DENSE_ROWS_PER_CHUNK])
        in_a = hard_inside_grid(xs, ys, a)
        in_b = hard_inside_grid(xs, ys, b)
        intersection += int(np.count_nonzero(in_a & in_b))
        union += int(np.count_nonzero(in_a | in_b))
    if union == 0:
        return 0.0
    return intersection / union
