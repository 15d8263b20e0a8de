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

class RotboxError(Exception):
    pass


class DataError(RotboxError, ValueError):
    pass


class ParseError(DataError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        location = ''
        if line is not None:
            location = 'line {}'.format(line)
            if column is not None:
                location = location + ', column {}'.format(column)
            location = location + ': '
        super(ParseError, self).__init__(location + message)


class GeometryError(DataError):
    pass


class NotARectangle(GeometryError):
    def __init__(self, message, residual=None):
        self.residual = residual
        super(NotARectangle, self).__init__(message)


class NumericError(RotboxError, ArithmeticError):
    pass


# Raised only while differentiating: the function has no derivative at the evaluation point.
class NonSmoothPoint(NumericError):
    pass


class SingularCovariance(NumericError):
    pass


class EmptySupport(NumericError):
    pass


class ConfigError(RotboxError, ValueError):
    pass
