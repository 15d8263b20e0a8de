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

import numpy as np


class Dual(object):
    """Forward-mode dual number ``re + eps * e`` with ``e * e = 0``.

    ``re`` and ``eps`` may be floats or numpy arrays (lattice sums in PIoU
    push whole pixel grids through a single pass). The real part of every
    operation is computed with exactly the float operation the plain path
    uses, so a Dual with zero tangent reproduces the float result bit for bit.
    """
    __slots__ = ('re', 'eps')

    # Makes numpy defer to our reflected operators instead of building object arrays.
    __array_ufunc__ = None

    def __init__(self, re, eps=0.0):
        self.re = re
        self.eps = eps

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re + other.re, self.eps + other.eps)
        return Dual(self.re + other, self.eps)

    def __radd__(self, other):
        return Dual(other + self.re, self.eps)

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re - other.re, self.eps - other.eps)
        return Dual(self.re - other, self.eps)

    def __rsub__(self, other):
        return Dual(other - self.re, -self.eps)

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re * other.re, self.re * other.eps + self.eps * other.re)
        return Dual(self.re * other, self.eps * other)

    def __rmul__(self, other):
        return Dual(other * self.re, other * self.eps)

    def __truediv__(self, other):
        if isinstance(other, Dual):
            re = self.re / other.re
            return Dual(re, (self.eps - re * other.eps) / other.re)
        return Dual(self.re / other, self.eps / other)

    def __rtruediv__(self, other):
        re = other / self.re
        return Dual(re, -re * self.eps / self.re)

    def __neg__(self):
        return Dual(-self.re, -self.eps)

    def __pos__(self):
        return self

    def __abs__(self):
        if isinstance(self.re, np.ndarray):
            return Dual(np.abs(self.re), np.sign(self.re) * self.eps)
        if self.re < 0:
            return -self
        return self

    def __pow__(self, exponent):
        if isinstance(exponent, Dual):
            raise TypeError('Dual exponents are not supported')
        return Dual(self.re ** exponent, exponent * self.re ** (exponent - 1) * self.eps)

    # Ordering compares real parts; branch decisions follow the float path.
    def __lt__(self, other):
        return self.re < real(other)

    def __le__(self, other):
        return self.re <= real(other)

    def __gt__(self, other):
        return self.re > real(other)

    def __ge__(self, other):
        return self.re >= real(other)

    def __repr__(self):
        return 'Dual({!r}, {!r})'.format(self.re, self.eps)


def real(x):
    if isinstance(x, Dual):
        return x.re
    return x


def tangent(x):
    if isinstance(x, Dual):
        return x.eps
    return 0.0


def any_dual(*values):
    return any(isinstance(v, Dual) for v in values)


def variable(value):
    """A seeded input: derivative 1 with respect to itself."""
    return Dual(float(value), 1.0)
