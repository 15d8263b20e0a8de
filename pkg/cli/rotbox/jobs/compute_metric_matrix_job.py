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

from blockchainetl_common.jobs.base_job import BaseJob

from rotbox.enumeration.entity_type import EntityType
from rotbox.service.metric_matrix import metric_matrix


class ComputeMetricMatrixJob(BaseJob):
    def __init__(self, gts, prds, metric, item_exporter, dims=None, max_workers=1, options=None):
        self.gts = gts
        self.prds = prds
        self.metric = metric
        self.dims = dims
        self.max_workers = max_workers
        self.options = options or {}
        self.item_exporter = item_exporter
        self.matrix = None

    def _start(self):
        self.item_exporter.open()

    def _export(self):
        self.matrix = metric_matrix(self.gts, self.prds, self.metric, self.dims, self.max_workers, **self.options)
        for gt_index, row in enumerate(self.matrix):
            for prd_index, value in enumerate(row):
                self.item_exporter.export_item({
                    'type': EntityType.METRIC_VALUE,
                    'gt_index': gt_index,
                    'prd_index': prd_index,
                    'metric': self.metric,
                    'value': value
                })

    def _end(self):
        self.item_exporter.close()
