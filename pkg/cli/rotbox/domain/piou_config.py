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

import math
from collections import namedtuple

from rotbox.errors import ConfigError


class PiouConfig(namedtuple('PiouConfig', ['k', 'grid_step', 'pad', 'half_extent_thresholds'])):
    """Kernel sharpness ``k`` and the sampling lattice of the pixel IoU.

    ``half_extent_thresholds`` compares the kernel against w/2 and h/2 (the
    hard inside test); switching it off compares against the full w and h.
    """
    __slots__ = ()

    @classmethod
    def create(cls, k=10.0, grid_step=1.0, pad=None, half_extent_thresholds=True):
        k = float(k)
        grid_step = float(grid_step)
        if not (math.isfinite(k) and k > 0):
            raise ConfigError('k must be finite and positive, got {}'.format(k))
        if not (math.isfinite(grid_step) and grid_step > 0):
            raise ConfigError('grid_step must be finite and positive, got {}'.format(grid_step))
        if pad is None:
            pad = 2.0 * grid_step
        pad = float(pad)
        if not (math.isfinite(pad) and pad >= 0):
            raise ConfigError('pad must be finite and non-negative, got {}'.format(pad))
        return cls(k, grid_step, pad, bool(half_extent_thresholds))


DEFAULT_PIOU_CONFIG = PiouConfig.create()
