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

from rotbox.cli.common_options import build_metric_options, dims_option, global_options, metric_config_options
from rotbox.enumeration.metric_type import MetricType
from rotbox.jobs.compute_metric_matrix_job import ComputeMetricMatrixJob
from rotbox.jobs.exporters.metric_item_exporter import metric_item_exporter
from rotbox.service.dota_parser import read_annotations
from rotbox.service.geom_core import EPS_RECT

logging_basic_config()


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('--gt', required=True, type=str, help='DOTA file of ground-truth boxes (rows of the matrix).')
@click.option('--pred', required=True, type=str, help='DOTA file of predicted boxes (columns of the matrix).')
@click.option('--pred-with-scores', is_flag=True, default=False,
              help='The prediction file carries a trailing score column.')
@click.option('-m', '--metric', default=MetricType.ROTATED_IOU, show_default=True,
              type=click.Choice(MetricType.ALL_LOSSES), help='The metric to compute.')
@click.option('--rect-tolerance', default=EPS_RECT, show_default=True, type=float,
              help='Relative tolerance for accepting a quadrilateral as a rectangle.')
@dims_option(help='Image width and height, needed by fpdiou and kfiou.')
@click.option('-w', '--max-workers', default=1, show_default=True, type=int, help='The maximum number of workers.')
@metric_config_options
@click.pass_context
def matrix(ctx, gt, pred, pred_with_scores, metric, rect_tolerance, dims, max_workers, gwd_tau, gwd_f, kld_tau,
           kld_f, piou_k, piou_step, giou_enclosing, kfiou_normalize):
    """Computes the metric between every ground-truth and every predicted box, one CSV row per cell."""
    gts = [annotation.box for annotation in read_annotations(gt, rect_tolerance=rect_tolerance)]
    prds = [annotation.box for annotation in
            read_annotations(pred, with_scores=pred_with_scores, rect_tolerance=rect_tolerance)]
    job = ComputeMetricMatrixJob(
        gts=gts,
        prds=prds,
        metric=metric,
        dims=dims,
        max_workers=max_workers,
        options=build_metric_options(gwd_tau, gwd_f, kld_tau, kld_f, piou_k, piou_step, giou_enclosing,
                                     kfiou_normalize),
        item_exporter=metric_item_exporter(global_options(ctx)['out']))
    job.run()
