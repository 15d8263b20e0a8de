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

from rotbox.enumeration.metric_type import MetricType
from rotbox.errors import ConfigError

SIM_CONFIG_FIELDS = [
    'n_trials',
    'loss',
    'lr',
    'angle_lr',
    'max_iters',
    'image_w',
    'image_h',
    'seed',
    'stop_tol',
    'size_range',
    'aspect_range',
    'scale_range',
    'offset_range',
    'angle_range',
    'iou_target',
    'min_size',
    'stop_at_target',
]

RANGE_FIELDS = ['size_range', 'aspect_range', 'scale_range', 'offset_range', 'angle_range']
INT_FIELDS = ['n_trials', 'max_iters', 'seed']
STR_FIELDS = ['loss']
BOOL_FIELDS = ['stop_at_target']

# The standard disjoint-start bundle: a target of 4 to 6 pixels centered in an
# 8x8 crop. The FPDIoU corner penalty is normalized by the image diagonal, so
# the crop size sets its pull relative to the box.
DEFAULTS = {
    'n_trials': 100,
    'loss': MetricType.FPDIOU,
    'lr': 1.5,
    'angle_lr': 0.08,
    'max_iters': 400,
    'image_w': 8.0,
    'image_h': 8.0,
    'seed': 0,
    'stop_tol': 1e-6,
    # Long side of the target box.
    'size_range': (4.0, 6.0),
    # Short side over long side.
    'aspect_range': (0.5, 1.0),
    # Prediction long side over target long side.
    'scale_range': (0.75, 1.33),
    'offset_range': (1.05, 1.3),
    'angle_range': (-math.pi / 2, math.pi / 2),
    'iou_target': 0.7,
    'min_size': 0.5,
    # Stop recording a trial once it reaches iou_target.
    'stop_at_target': False,
}


class SimConfig(namedtuple('SimConfig', SIM_CONFIG_FIELDS)):
    __slots__ = ()

    @classmethod
    def create(cls, **overrides):
        unknown = sorted(set(overrides) - set(SIM_CONFIG_FIELDS))
        if unknown:
            raise ConfigError('Unknown simulation settings: {}'.format(', '.join(unknown)))
        values = dict(DEFAULTS)
        values.update((key, value) for key, value in overrides.items() if value is not None)
        for name in INT_FIELDS:
            values[name] = int(values[name])
        for name in RANGE_FIELDS:
            low, high = values[name]
            values[name] = (float(low), float(high))
            if not high >= low:
                raise ConfigError('{} must be a non-empty range, got {}'.format(name, values[name]))
        for name in SIM_CONFIG_FIELDS:
            if name in BOOL_FIELDS:
                values[name] = bool(values[name])
            elif name not in INT_FIELDS and name not in RANGE_FIELDS and name not in STR_FIELDS:
                values[name] = float(values[name])
        config = cls(**values)
        config.validate()
        return config

    def validate(self):
        if self.n_trials < 0:
            raise ConfigError('n_trials must be >= 0, got {}'.format(self.n_trials))
        if not self.lr > 0 or not self.angle_lr > 0:
            raise ConfigError('lr and angle_lr must be positive, got {} and {}'.format(self.lr, self.angle_lr))
        if self.max_iters < 1:
            raise ConfigError('max_iters must be >= 1, got {}'.format(self.max_iters))
        if not self.image_w > 0 or not self.image_h > 0:
            raise ConfigError('Image dimensions must be positive')
        if self.loss not in MetricType.ALL_LOSSES:
            raise ConfigError('Unknown loss {}, expected one of {}'.format(
                self.loss, ', '.join(MetricType.ALL_LOSSES)))
        if not self.min_size > 0 or self.size_range[0] <= 0:
            raise ConfigError('Box sizes must be positive')
