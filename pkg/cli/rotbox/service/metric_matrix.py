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

from rotbox.errors import DataError
from rotbox.executors.batch_work_executor import BatchWorkExecutor
from rotbox.service.losses import metric_value


def metric_matrix(gts, prds, metric, dims=None, max_workers=1, **options):
    """|gts| x |prds| array of ``metric``; rows follow gts, columns follow prds."""
    if not gts or not prds:
        raise DataError('metric_matrix needs non-empty box lists, got {} x {}'.format(len(gts), len(prds)))

    def row(gt):
        return [metric_value(metric, gt, prd, dims, **options) for prd in prds]

    executor = BatchWorkExecutor(1, max_workers, progress_name='{} matrix rows'.format(metric))
    return np.asarray(executor.map(gts, row), dtype=float)
