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

"""Elementary functions that accept floats, numpy arrays or :class:`Dual` values.

Every metric is written once against this module; feeding it Duals turns the
metric into its own forward-mode derivative.
"""

import math

import numpy as np

from rotbox.diffcheck.dual import Dual, real


def _lift(x, value, derivative):
    return Dual(value, derivative * x.eps)


def _is_array(x):
    return isinstance(x, np.ndarray)


def sqrt(x):
    if isinstance(x, Dual):
        if _is_array(x.re):
            value = np.sqrt(x.re)
            with np.errstate(divide='ignore', invalid='ignore'):
                derivative = np.where(value > 0, 0.5 / np.where(value > 0, value, 1.0), 0.0)
            return _lift(x, value, derivative)
        value = math.sqrt(x.re)
        if value == 0.0:
            # Only reachable through squared quantities whose tangent is zero as well.
            return Dual(0.0, 0.0)
        return _lift(x, value, 0.5 / value)
    if _is_array(x):
        return np.sqrt(x)
    return math.sqrt(x)


def exp(x):
    if isinstance(x, Dual):
        value = np.exp(x.re) if _is_array(x.re) else math.exp(x.re)
        return _lift(x, value, value)
    if _is_array(x):
        return np.exp(x)
    return math.exp(x)


def log(x):
    if isinstance(x, Dual):
        value = np.log(x.re) if _is_array(x.re) else math.log(x.re)
        return _lift(x, value, 1.0 / x.re)
    if _is_array(x):
        return np.log(x)
    return math.log(x)


def log1p(x):
    if isinstance(x, Dual):
        value = np.log1p(x.re) if _is_array(x.re) else math.log1p(x.re)
        return _lift(x, value, 1.0 / (1.0 + x.re))
    if _is_array(x):
        return np.log1p(x)
    return math.log1p(x)


def sin(x):
    if isinstance(x, Dual):
        if _is_array(x.re):
            return _lift(x, np.sin(x.re), np.cos(x.re))
        return _lift(x, math.sin(x.re), math.cos(x.re))
    if _is_array(x):
        return np.sin(x)
    return math.sin(x)


def cos(x):
    if isinstance(x, Dual):
        if _is_array(x.re):
            return _lift(x, np.cos(x.re), -np.sin(x.re))
        return _lift(x, math.cos(x.re), -math.sin(x.re))
    if _is_array(x):
        return np.cos(x)
    return math.cos(x)


def atan(x):
    if isinstance(x, Dual):
        value = np.arctan(x.re) if _is_array(x.re) else math.atan(x.re)
        return _lift(x, value, 1.0 / (1.0 + x.re * x.re))
    if _is_array(x):
        return np.arctan(x)
    return math.atan(x)


def atan2(y, x):
    if isinstance(y, Dual) or isinstance(x, Dual):
        y_re, x_re = real(y), real(x)
        arrays = _is_array(y_re) or _is_array(x_re)
        value = np.arctan2(y_re, x_re) if arrays else math.atan2(y_re, x_re)
        norm = x_re * x_re + y_re * y_re
        y_eps = y.eps if isinstance(y, Dual) else 0.0
        x_eps = x.eps if isinstance(x, Dual) else 0.0
        return Dual(value, (x_re * y_eps - y_re * x_eps) / norm)
    if _is_array(y) or _is_array(x):
        return np.arctan2(y, x)
    return math.atan2(y, x)


def acos(x):
    if isinstance(x, Dual):
        if _is_array(x.re):
            return _lift(x, np.arccos(x.re), -1.0 / np.sqrt(1.0 - x.re * x.re))
        return _lift(x, math.acos(x.re), -1.0 / math.sqrt(1.0 - x.re * x.re))
    if _is_array(x):
        return np.arccos(x)
    return math.acos(x)


def clip(x, lower, upper):
    if isinstance(x, Dual):
        if _is_array(x.re):
            inside = (x.re >= lower) & (x.re <= upper)
            return Dual(np.clip(x.re, lower, upper), np.where(inside, x.eps, 0.0))
        if x.re < lower:
            return Dual(float(lower), 0.0)
        if x.re > upper:
            return Dual(float(upper), 0.0)
        return x
    if _is_array(x):
        return np.clip(x, lower, upper)
    return min(max(x, lower), upper)


def minimum(x, upper):
    """Elementwise ``min(x, upper)`` for a constant ``upper``."""
    if isinstance(x, Dual):
        if _is_array(x.re):
            below = x.re <= upper
            return Dual(np.where(below, x.re, upper), np.where(below, x.eps, 0.0))
        if x.re <= upper:
            return x
        return Dual(float(upper), 0.0)
    if _is_array(x):
        return np.minimum(x, upper)
    return min(x, upper)


def total(x):
    """Sum of an array-valued scalar; plain values pass through."""
    if isinstance(x, Dual):
        return Dual(float(np.sum(x.re)), float(np.sum(np.broadcast_to(x.eps, np.shape(x.re)))))
    if _is_array(x):
        return float(np.sum(x))
    return x


def fsum(values):
    """Compensated sum over a sequence of scalars."""
    values = list(values)
    if not any(isinstance(v, Dual) for v in values):
        return math.fsum(values)
    return Dual(math.fsum(real(v) for v in values),
                math.fsum(v.eps if isinstance(v, Dual) else 0.0 for v in values))


def isfinite(x):
    value = real(x)
    if _is_array(value):
        return bool(np.all(np.isfinite(value)))
    return math.isfinite(value)
