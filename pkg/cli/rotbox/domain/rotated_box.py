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

from rotbox.diffcheck.dual import real
from rotbox.errors import GeometryError


def normalize_angle(theta):
    """Shifts ``theta`` by a multiple of pi into [-pi/2, pi/2)."""
    turns = math.floor((real(theta) + math.pi / 2) / math.pi)
    if turns == 0:
        return theta
    normalized = theta - turns * math.pi
    # Rounding can leave the shifted value a hair outside the interval.
    if real(normalized) >= math.pi / 2:
        normalized = normalized - math.pi
    return normalized


class RotatedBox(namedtuple('RotatedBox', ['cx', 'cy', 'w', 'h', 'theta'])):
    """Oriented rectangle: center, edge lengths and rotation in radians.

    ``w`` runs along the direction ``(cos theta, sin theta)``, ``h`` along the
    perpendicular. Fields may be floats or Dual numbers.
    """
    __slots__ = ()

    @classmethod
    def create(cls, cx, cy, w, h, theta=0.0):
        for name, value in (('cx', cx), ('cy', cy), ('w', w), ('h', h), ('theta', theta)):
            if not math.isfinite(real(value)):
                raise GeometryError('Box field {} must be finite, got {}'.format(name, real(value)))
        if not real(w) > 0 or not real(h) > 0:
            raise GeometryError('Box sides must be positive, got w={} h={}'.format(real(w), real(h)))
        return cls(cx, cy, w, h, normalize_angle(theta))

    def to_float(self):
        return RotatedBox(*(float(real(v)) for v in self))

    def area(self):
        return self.w * self.h


class ImageDims(namedtuple('ImageDims', ['w', 'h'])):
    __slots__ = ()

    @classmethod
    def create(cls, w, h):
        if not (math.isfinite(w) and math.isfinite(h)) or w <= 0 or h <= 0:
            raise GeometryError('Image dimensions must be positive and finite, got {}x{}'.format(w, h))
        return cls(float(w), float(h))


# Four (x, y) points ordered ascending by x, ties by y.
CornerQuad = namedtuple('CornerQuad', ['p1', 'p2', 'p3', 'p4'])
