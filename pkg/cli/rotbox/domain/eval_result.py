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

DEFAULT_THRESHOLDS = [round(0.5 + 0.05 * i, 2) for i in range(10)]


class CategoryCurve(object):
    def __init__(self):
        self.category = None
        self.threshold = None
        self.ap = 0.0
        self.num_gt = 0
        self.num_det = 0
        self.precision = []
        self.recall = []


class EvalResult(object):
    def __init__(self):
        self.thresholds = []
        self.categories = []
        self.curves = []
        self.map_per_threshold = []
        self.map = 0.0
        self.ap50 = None
        self.ap75 = None
        self.precision = 0.0
        self.recall = 0.0
        self.hmean = 0.0
        self.warnings = []

    def curve(self, category, threshold):
        for curve in self.curves:
            if curve.category == category and curve.threshold == threshold:
                return curve
        return None

    def ap(self, category, threshold):
        curve = self.curve(category, threshold)
        return 0.0 if curve is None else curve.ap
