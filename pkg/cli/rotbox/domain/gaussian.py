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

from collections import namedtuple

from rotbox.errors import ConfigError

F_IDENTITY = 'identity'
F_SQRT = 'sqrt'
F_LOG1P = 'log1p'

F_KINDS = [F_IDENTITY, F_SQRT, F_LOG1P]


class Gaussian2(namedtuple('Gaussian2', ['mu', 'sigma'])):
    """2-D normal distribution; ``mu`` is (x, y), ``sigma`` is ((a, b), (b, c))."""
    __slots__ = ()

    @property
    def a(self):
        return self.sigma[0][0]

    @property
    def b(self):
        return self.sigma[0][1]

    @property
    def c(self):
        return self.sigma[1][1]


class GwdConfig(namedtuple('GwdConfig', ['tau', 'f_kind'])):
    __slots__ = ()

    @classmethod
    def create(cls, tau=1.0, f_kind=F_SQRT):
        tau = float(tau)
        if not tau >= 1.0:
            raise ConfigError('tau must be >= 1, got {}'.format(tau))
        if f_kind not in F_KINDS:
            raise ConfigError('f_kind must be one of {}, got {}'.format(', '.join(F_KINDS), f_kind))
        return cls(tau, f_kind)


DEFAULT_GWD_CONFIG = GwdConfig.create()
