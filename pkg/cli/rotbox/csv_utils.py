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

from rotbox.domain.eval_result import EvalResult
from rotbox.domain.sim_trace import SimTrace
from rotbox.jobs.exporters.eval_item_exporter import eval_item_exporter
from rotbox.jobs.exporters.simulation_item_exporter import simulation_item_exporter
from rotbox.mappers.eval_result_mapper import EvalResultMapper
from rotbox.mappers.sim_trace_mapper import SimTraceMapper


def _export(exporter, items):
    exporter.open()
    try:
        exporter.export_items(items)
    finally:
        exporter.close()


def emit_csv(trace_or_eval, path):
    """Writes a SimTrace as per-iteration rows or an EvalResult as per-category AP rows."""
    if isinstance(trace_or_eval, SimTrace):
        mapper = SimTraceMapper()
        _export(simulation_item_exporter(records_output=path),
                (mapper.record_to_dict(record) for record in trace_or_eval.records))
    elif isinstance(trace_or_eval, EvalResult):
        _export(eval_item_exporter(ap_output=path), EvalResultMapper().eval_result_to_dicts(trace_or_eval))
    else:
        raise TypeError('Cannot write {} as CSV'.format(type(trace_or_eval).__name__))
