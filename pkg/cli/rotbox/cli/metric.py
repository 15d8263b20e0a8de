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

import click

from blockchainetl_common.logging_utils import logging_basic_config

from rotbox.cli.common_options import box_option, build_metric_options, dims_option, echo_summary, \
    format_table, global_options, metric_config_options, names_option
from rotbox.enumeration.entity_type import EntityType
from rotbox.enumeration.metric_type import MetricType
from rotbox.errors import ConfigError, DataError
from rotbox.jobs.exporters.metric_item_exporter import metric_item_exporter
from rotbox.service.dota_parser import read_annotations
from rotbox.service.losses import metric_value

logging_basic_config()

logger = logging.getLogger('metric')


def resolve_metrics(metrics, dims):
    if metrics:
        return metrics
    if dims is None:
        logger.info('No --image-size given, skipping {}'.format(', '.join(MetricType.NEEDS_IMAGE_DIMS)))
        return [name for name in MetricType.ALL_LOSSES if name not in MetricType.NEEDS_IMAGE_DIMS]
    return list(MetricType.ALL_LOSSES)


def paired_boxes(gt, prd, gt_file, prd_file):
    if gt is not None and prd is not None:
        return [(gt, prd)]
    if gt_file is not None and prd_file is not None:
        gts = [annotation.box for annotation in read_annotations(gt_file)]
        prds = [annotation.box for annotation in read_annotations(prd_file)]
        if len(gts) != len(prds):
            raise DataError('{} holds {} boxes but {} holds {}'.format(gt_file, len(gts), prd_file, len(prds)))
        return list(zip(gts, prds))
    raise ConfigError('Give either --gt and --prd or --gt-file and --prd-file')


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@box_option('--gt', help='Ground-truth box.')
@box_option('--prd', help='Predicted box.')
@click.option('--gt-file', type=str, help='DOTA file of ground-truth boxes, paired line by line with --prd-file.')
@click.option('--prd-file', type=str, help='DOTA file of predicted boxes without scores.')
@names_option('-m', '--metric', 'metrics', allowed=MetricType.ALL_LOSSES,
              help='Metric to compute; repeatable or comma separated. All metrics if omitted.')
@dims_option(help='Image width and height, needed by fpdiou and kfiou.')
@metric_config_options
@click.pass_context
def metric(ctx, gt, prd, gt_file, prd_file, metrics, dims, gwd_tau, gwd_f, kld_tau, kld_f, piou_k, piou_step,
           giou_enclosing, kfiou_normalize):
    """Computes metrics for one box pair or for line-paired DOTA files.

    kld is reported as the raw divergence and smooth_l1 as the loss; every other
    metric is a similarity."""
    out = global_options(ctx)['out']
    options = build_metric_options(gwd_tau, gwd_f, kld_tau, kld_f, piou_k, piou_step, giou_enclosing,
                                   kfiou_normalize)
    pairs = paired_boxes(gt, prd, gt_file, prd_file)
    metrics = resolve_metrics(metrics, dims)

    rows = []
    exporter = metric_item_exporter(out)
    exporter.open()
    try:
        for index, (gt_box, prd_box) in enumerate(pairs):
            for name in metrics:
                value = float(metric_value(name, gt_box, prd_box, dims, **options))
                rows.append((index, name, value))
                exporter.export_item({
                    'type': EntityType.METRIC_VALUE,
                    'gt_index': index,
                    'prd_index': index,
                    'metric': name,
                    'value': value
                })
    finally:
        exporter.close()

    if len(pairs) == 1:
        echo_summary(out, format_table(['metric', 'value'], [(name, value) for _, name, value in rows]))
