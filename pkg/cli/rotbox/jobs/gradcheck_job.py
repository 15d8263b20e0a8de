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

import logging

from blockchainetl_common.jobs.base_job import BaseJob

from rotbox.diffcheck.gradients import check_grad
from rotbox.errors import NonSmoothPoint
from rotbox.executors.batch_work_executor import BatchWorkExecutor
from rotbox.mappers.grad_report_mapper import GradReportMapper
from rotbox.service import sampling
from rotbox.service.losses import create_loss

DEFAULT_TOLERANCE = 1e-5


# Compares forward-mode gradients with finite differences on seeded overlapping pairs.
class GradCheckJob(BaseJob):
    def __init__(self, loss_names, n_configs, seed, dims, item_exporter, max_workers=1,
                 tolerance=DEFAULT_TOLERANCE):
        self.loss_names = loss_names
        self.n_configs = n_configs
        self.seed = seed
        self.dims = dims
        self.tolerance = tolerance
        self.item_exporter = item_exporter
        self.max_workers = max_workers
        self.grad_report_mapper = GradReportMapper()
        self.worst = {}
        self.failures = {}
        self.skipped = {}
        self.logger = logging.getLogger('GradCheckJob')

    def _start(self):
        self.item_exporter.open()

    def _export(self):
        for loss_name in self.loss_names:
            self._check_loss(loss_name)

    def _sample(self, index):
        rng = sampling.generator(self.seed, index)
        center_range = (0.3 * min(self.dims.w, self.dims.h), 0.7 * min(self.dims.w, self.dims.h))
        return sampling.overlapping_pair(rng, center_range=center_range)

    def _check_loss(self, loss_name):
        loss = create_loss(loss_name, self.dims)

        def check(index):
            gt, prd = self._sample(index)
            try:
                return check_grad(loss, gt, prd)
            except NonSmoothPoint as e:
                self.logger.warning('{} config {}: skipped, {}'.format(loss_name, index, e))
                return None

        executor = BatchWorkExecutor(1, self.max_workers, progress_name='{} gradient checks'.format(loss_name))
        reports = executor.map(range(self.n_configs), check)

        self.worst[loss_name] = 0.0
        self.failures[loss_name] = 0
        self.skipped[loss_name] = 0
        for index, report in enumerate(reports):
            if report is None:
                self.skipped[loss_name] += 1
                continue
            self.worst[loss_name] = max(self.worst[loss_name], report.max_rel_err)
            if report.max_rel_err > self.tolerance:
                self.failures[loss_name] += 1
            for item in self.grad_report_mapper.grad_report_to_dicts(loss_name, index, report):
                self.item_exporter.export_item(item)

    def _end(self):
        self.item_exporter.close()
