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

from rotbox.cli.common_options import echo_summary, format_table, global_options, names_option
from rotbox.domain.sim_config import SimConfig
from rotbox.enumeration.metric_type import MetricType
from rotbox.jobs.exporters.simulation_item_exporter import simulation_item_exporter
from rotbox.jobs.simulate_regression_job import SimulateRegressionJob
from rotbox.utils import parse_floats, parse_range

logging_basic_config()


def _range(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_range(value)
    except ValueError as e:
        raise click.BadParameter(str(e))


def build_sim_config(file_values, seed, **options):
    """Defaults, then the config file, then command line options."""
    values = dict(file_values)
    values.update((key, value) for key, value in options.items() if value is not None)
    if seed is not None:
        values['seed'] = seed
    return SimConfig.create(**values)


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('-n', '--n-trials', default=None, type=int, help='Number of trials. [default: 100]')
@click.option('-l', '--loss', default=None, type=click.Choice(MetricType.ALL_LOSSES),
              help='Loss to descend. [default: fpdiou]')
@names_option('--compare', 'compare', allowed=MetricType.ALL_LOSSES,
              help='Run the same scenarios under each of these losses; repeatable or comma separated.')
@click.option('--lr', default=None, type=float, help='Step size for cx, cy, w and h. [default: 1.5]')
@click.option('--angle-lr', default=None, type=float, help='Step size for theta. [default: 0.08]')
@click.option('--max-iters', default=None, type=int, help='Iterations per trial. [default: 400]')
@click.option('--image-size', 'image_size', default=None, type=str, metavar='W,H',
              help='Image width and height. [default: 8,8]')
@click.option('--stop-tol', default=None, type=float, help='Stop updating once the loss is below this.')
@click.option('--iou-target', default=None, type=float, help='IoU that counts as reaching the target. [default: 0.7]')
@click.option('--stop-at-target', is_flag=True, default=False,
              help='End each trial at the first iteration that reaches the IoU target.')
@click.option('--offset-range', default=None, callback=_range, type=str, metavar='LOW,HIGH',
              help='Initial center offset in summed circumradii; above 1 the boxes start disjoint.')
@click.option('--size-range', default=None, callback=_range, type=str, metavar='LOW,HIGH',
              help='Long side of the target box.')
@click.option('--trials-output', default=None, type=str, help='Optional CSV file for per-trial summaries.')
@click.option('--summary-output', default=None, type=str, help='Optional CSV file for per-loss summaries.')
@click.option('-w', '--max-workers', default=1, show_default=True, type=int, help='The maximum number of workers.')
@click.pass_context
def simulate(ctx, n_trials, loss, compare, lr, angle_lr, max_iters, image_size, stop_tol, iou_target,
             stop_at_target, offset_range, size_range, trials_output, summary_output, max_workers):
    """Runs gradient descent on synthetic box pairs and records the loss and IoU of every iteration."""
    options = global_options(ctx)
    image_w = image_h = None
    if image_size is not None:
        try:
            image_w, image_h = parse_floats(image_size, 2, 'W,H')
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint='--image-size')
    config = build_sim_config(
        options['config'], options['seed'], n_trials=n_trials, loss=loss, lr=lr, angle_lr=angle_lr,
        max_iters=max_iters, image_w=image_w, image_h=image_h, stop_tol=stop_tol, iou_target=iou_target,
        stop_at_target=stop_at_target or None, offset_range=offset_range, size_range=size_range)

    job = SimulateRegressionJob(
        config=config,
        loss_names=compare,
        max_workers=max_workers,
        item_exporter=simulation_item_exporter(
            records_output=options['out'], trials_output=trials_output, summary_output=summary_output))
    job.run()

    echo_summary(options['out'], format_table(
        ['loss', 'trials', 'reached', 'median_iters', 'iou_p10', 'iou_p50', 'iou_p90'],
        [(s['loss'], s['trials'], s['reached_target'], s['median_iterations_to_target'], s['final_iou_p10'],
          s['final_iou_p50'], s['final_iou_p90']) for s in job.summaries]))
