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

import os

import click

from blockchainetl_common.logging_utils import logging_basic_config

from rotbox.cli.common_options import dims_option, echo_summary, format_table, global_options
from rotbox.enumeration.metric_type import MetricType
from rotbox.jobs.evaluate_ap_job import EvaluateApJob
from rotbox.jobs.exporters.eval_item_exporter import eval_item_exporter
from rotbox.service.dota_parser import read_annotations
from rotbox.service.geom_core import EPS_RECT
from rotbox.utils import split_names

logging_basic_config()

SINGLE_IMAGE = ''


def parse_thresholds(text):
    if text is None:
        return None
    try:
        thresholds = [float(value) for value in split_names([text])]
    except ValueError:
        raise click.BadParameter('thresholds must be comma-separated numbers, got {!r}'.format(text))
    if not thresholds or any(not 0.0 <= value <= 1.0 for value in thresholds):
        raise click.BadParameter('thresholds must lie in [0, 1], got {!r}'.format(text))
    return thresholds


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('--gt', required=True, type=str,
              help='DOTA ground-truth file, or a directory of per-image .txt files.')
@click.option('--pred', required=True, type=str,
              help='Prediction file with a trailing score column, or a directory matched to --gt by file name.')
@click.option('--match-metric', default=MetricType.ROTATED_IOU, show_default=True,
              type=click.Choice(MetricType.MATCHING), help='Overlap used to match predictions to ground truth.')
@click.option('--thresholds', default=None, type=str,
              help='Comma-separated IoU thresholds. Defaults to 0.5:0.05:0.95.')
@click.option('--keep-quads', is_flag=True, default=False,
              help='Keep non-rectangular quadrilaterals and match them as raw polygons.')
@click.option('--rect-tolerance', default=EPS_RECT, show_default=True, type=float,
              help='Relative tolerance for accepting a quadrilateral as a rectangle.')
@dims_option(help='Image width and height, needed when matching by fpdiou.')
@click.option('--summary-output', default=None, type=str, help='Optional CSV file for the summary values.')
@click.pass_context
def evaluate(ctx, gt, pred, match_metric, thresholds, keep_quads, rect_tolerance, dims, summary_output):
    """Computes per-category AP, mAP over IoU thresholds, AP50/AP75 and precision/recall/Hmean."""
    out = global_options(ctx)['out']
    # A pair of plain files describes one image whatever the file names are.
    image_id = None if os.path.isdir(gt) else SINGLE_IMAGE
    gts = read_annotations(gt, keep_quads=keep_quads, rect_tolerance=rect_tolerance, image_id=image_id)
    prds = read_annotations(pred, with_scores=True, keep_quads=keep_quads, rect_tolerance=rect_tolerance,
                            image_id=image_id)

    job = EvaluateApJob(
        gts=gts,
        prds=prds,
        thresholds=parse_thresholds(thresholds),
        match_metric=match_metric,
        dims=dims,
        item_exporter=eval_item_exporter(ap_output=out, summary_output=summary_output))
    job.run()

    result = job.result
    rows = [(category, result.ap(category, 0.5) if 0.5 in result.thresholds else None,
             result.ap(category, 0.75) if 0.75 in result.thresholds else None) for category in result.categories]
    lines = format_table(['category', 'AP50', 'AP75'], rows)
    lines.append('')
    lines.extend(format_table(['name', 'value'], [
        ('mAP', result.map), ('AP50', result.ap50), ('AP75', result.ap75),
        ('precision', result.precision), ('recall', result.recall), ('hmean', result.hmean)]))
    lines.extend('warning: {}'.format(warning) for warning in result.warnings)
    echo_summary(out, lines)
