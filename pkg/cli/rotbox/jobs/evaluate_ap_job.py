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

from rotbox.mappers.eval_result_mapper import EvalResultMapper
from rotbox.service.ap_evaluator import ApEvaluator


class EvaluateApJob(BaseJob):
    def __init__(self, gts, prds, item_exporter, thresholds=None, match_metric='rotated_iou', dims=None):
        self.gts = gts
        self.prds = prds
        self.thresholds = thresholds
        self.evaluator = ApEvaluator(match_metric, dims)
        self.item_exporter = item_exporter
        self.eval_result_mapper = EvalResultMapper()
        self.result = None

    def _start(self):
        self.item_exporter.open()

    def _export(self):
        self.result = self.evaluator.evaluate(self.gts, self.prds, self.thresholds)
        for item in self.eval_result_mapper.eval_result_to_dicts(self.result):
            self.item_exporter.export_item(item)
        for item in self.eval_result_mapper.summary_to_dicts(self.result):
            self.item_exporter.export_item(item)

    def _end(self):
        self.item_exporter.close()
