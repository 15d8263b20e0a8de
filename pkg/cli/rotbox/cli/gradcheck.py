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
from rotbox.errors import NumericError
from rotbox.jobs.exporters.gradcheck_item_exporter import gradcheck_item_exporter
from rotbox.jobs.gradcheck_job import DEFAULT_TOLERANCE, GradCheckJob

logging_basic_config()


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@names_option('-l', '--loss', 'losses', allowed=MetricType.ALL_LOSSES,
              help='Loss to check; repeatable or comma separated. All losses if omitted.')
@click.option('-n', '--n-configs', default=100, show_default=True, type=int,
              help='Random overlapping box pairs per loss.')
@dims_option(default='64,64', help='Image width and height of the sampled pairs.')
@click.option('--tolerance', default=DEFAULT_TOLERANCE, show_default=True, type=float,
              help='Largest accepted relative error between analytic and numeric gradients.')
@click.option('--strict', is_flag=True, default=False, help='Exit with the numeric error code on any failure.')
@click.option('-w', '--max-workers', default=1, show_default=True, type=int, help='The maximum number of workers.')
@click.pass_context
def gradcheck(ctx, losses, n_configs, dims, tolerance, strict, max_workers):
    """Compares forward-mode gradients of each loss with finite differences."""
    options = global_options(ctx)
    seed = options['seed'] if options['seed'] is not None else options['config'].get('seed', 0)
    job = GradCheckJob(
        loss_names=losses or MetricType.ALL_LOSSES,
        n_configs=n_configs,
        seed=seed,
        dims=dims,
        tolerance=tolerance,
        max_workers=max_workers,
        item_exporter=gradcheck_item_exporter(options['out']))
    job.run()

    echo_summary(options['out'], format_table(
        ['loss', 'checked', 'skipped', 'failed', 'max_rel_err'],
        [(name, n_configs - job.skipped[name], job.skipped[name], job.failures[name], job.worst[name])
         for name in job.loss_names]))
    failed = sum(job.failures.values())
    if strict and failed:
        raise NumericError('{} gradient checks exceeded the tolerance {}'.format(failed, tolerance))
