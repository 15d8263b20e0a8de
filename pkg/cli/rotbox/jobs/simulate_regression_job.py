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

from rotbox.mappers.sim_trace_mapper import SimTraceMapper
from rotbox.service.regression_simulator import simulate_regression, summarize


# Runs the configured loss, or each of loss_names on the same seeded scenarios.
class SimulateRegressionJob(BaseJob):
    def __init__(self, config, item_exporter, max_workers=1, loss_names=None):
        self.config = config
        self.loss_names = list(loss_names) if loss_names else [config.loss]
        self.item_exporter = item_exporter
        self.max_workers = max_workers
        self.sim_trace_mapper = SimTraceMapper()
        self.traces = []
        self.summaries = []

    def _start(self):
        self.item_exporter.open()

    def _export(self):
        for loss_name in self.loss_names:
            trace = simulate_regression(self.config._replace(loss=loss_name), self.max_workers)
            summary = summarize(trace)
            self.traces.append(trace)
            self.summaries.append(summary)

            for record in trace.records:
                self.item_exporter.export_item(self.sim_trace_mapper.record_to_dict(record))
            for trial in trace.trials:
                self.item_exporter.export_item(self.sim_trace_mapper.trial_summary_to_dict(trial))
            self.item_exporter.export_item(self.sim_trace_mapper.loss_summary_to_dict(summary))

    def _end(self):
        self.item_exporter.close()
