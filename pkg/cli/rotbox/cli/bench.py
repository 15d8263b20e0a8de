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

import click

from blockchainetl_common.logging_utils import logging_basic_config

from rotbox.cli.common_options import dims_option, echo_summary, format_table, global_options, names_option
from rotbox.enumeration.metric_type import MetricType
from rotbox.jobs.bench_metrics_job import BenchMetricsJob
from rotbox.jobs.exporters.bench_item_exporter import bench_item_exporter

logging_basic_config()


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@names_option('-m', '--metric', 'metrics', allowed=MetricType.ALL_LOSSES,
              help='Metric to time; repeatable or comma separated. All metrics if omitted.')
@click.option('-n', '--calls', default=1000, show_default=True, type=int, help='Calls per metric.')
@dims_option(default='64,64', help='Image width and height of the sampled pairs.')
@click.pass_context
def bench(ctx, metrics, calls, dims):
    """Wall-clock microbenchmark of single metric calls. Not comparable to detector training throughput."""
    options = global_options(ctx)
    seed = options['seed'] if options['seed'] is not None else options['config'].get('seed', 0)
    job = BenchMetricsJob(
        metrics=metrics or MetricType.ALL_LOSSES,
        calls=calls,
        seed=seed,
        dims=dims,
        item_exporter=bench_item_exporter(options['out']))
    job.run()

    echo_summary(options['out'], format_table(
        ['metric', 'calls', 'us_per_call'],
        [(item['metric'], item['calls'], item['microseconds_per_call']) for item in job.results]))
