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

import time

from blockchainetl_common.jobs.base_job import BaseJob

from rotbox.enumeration.entity_type import EntityType
from rotbox.service import sampling
from rotbox.service.losses import metric_value


# Wall-clock cost of single metric calls on seeded overlapping pairs.
class BenchMetricsJob(BaseJob):
    def __init__(self, metrics, calls, seed, dims, item_exporter):
        self.metrics = metrics
        self.calls = calls
        self.seed = seed
        self.dims = dims
        self.item_exporter = item_exporter
        self.results = []

    def _start(self):
        self.item_exporter.open()

    def _export(self):
        center_range = (0.3 * min(self.dims.w, self.dims.h), 0.7 * min(self.dims.w, self.dims.h))
        pairs = [sampling.overlapping_pair(sampling.generator(self.seed, index), center_range=center_range)
                 for index in range(self.calls)]
        for metric in self.metrics:
            started = time.perf_counter()
            for gt, prd in pairs:
                metric_value(metric, gt, prd, self.dims)
            elapsed = time.perf_counter() - started
            item = {
                'type': EntityType.BENCHMARK,
                'metric': metric,
                'calls': self.calls,
                'total_seconds': elapsed,
                'microseconds_per_call': 1e6 * elapsed / self.calls if self.calls else 0.0
            }
            self.results.append(item)
            self.item_exporter.export_item(item)

    def _end(self):
        self.item_exporter.close()
