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

from rotbox.domain.gaussian import F_KINDS, F_LOG1P, F_SQRT, GwdConfig
from rotbox.domain.piou_config import PiouConfig
from rotbox.domain.rotated_box import ImageDims, RotatedBox
from rotbox.service.iou_metrics import ENCLOSING_AABB, ENCLOSING_HULL
from rotbox.utils import parse_floats, split_names


def _box(ctx, param, value):
    if value is None:
        return None
    try:
        return RotatedBox.create(*parse_floats(value, 5, 'cx,cy,w,h,theta'))
    except ValueError as e:
        raise click.BadParameter(str(e))


def _dims(ctx, param, value):
    if value is None:
        return None
    try:
        return ImageDims.create(*parse_floats(value, 2, 'W,H'))
    except ValueError as e:
        raise click.BadParameter(str(e))


def _names(allowed):
    def callback(ctx, param, value):
        names = split_names(value)
        unknown = [name for name in names if name not in allowed]
        if unknown:
            raise click.BadParameter('unknown {}, expected one of {}'.format(', '.join(unknown), ', '.join(allowed)))
        return names
    return callback


def box_option(*names, **kwargs):
    return click.option(*names, callback=_box, type=str, metavar='CX,CY,W,H,THETA', **kwargs)


def dims_option(default=None, **kwargs):
    return click.option('--image-size', 'dims', default=default, show_default=default is not None, callback=_dims,
                        type=str, metavar='W,H', **kwargs)


def names_option(*names, allowed, **kwargs):
    return click.option(*names, multiple=True, callback=_names(allowed), type=str, **kwargs)


def metric_config_options(f):
    """Options tuning the configurable metrics; they arrive as one ``metric_options`` dict."""
    options = [
        click.option('--gwd-tau', default=1.0, show_default=True, type=float, help='GWD normalizer tau (>= 1).'),
        click.option('--gwd-f', default=F_SQRT, show_default=True, type=click.Choice(F_KINDS),
                     help='GWD distance transform.'),
        click.option('--kld-tau', default=1.0, show_default=True, type=float, help='KLD loss normalizer tau.'),
        click.option('--kld-f', default=F_LOG1P, show_default=True, type=click.Choice(F_KINDS),
                     help='KLD loss divergence transform.'),
        click.option('--piou-k', default=10.0, show_default=True, type=float, help='PIoU kernel sharpness.'),
        click.option('--piou-step', default=1.0, show_default=True, type=float, help='PIoU lattice step.'),
        click.option('--giou-enclosing', default=ENCLOSING_HULL, show_default=True,
                     type=click.Choice([ENCLOSING_HULL, ENCLOSING_AABB]), help='GIoU enclosing region.'),
        click.option('--kfiou-normalize', is_flag=True, default=False, help='Scale KFIoU by 3 onto [0, 1].'),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def build_metric_options(gwd_tau, gwd_f, kld_tau, kld_f, piou_k, piou_step, giou_enclosing, kfiou_normalize):
    return {
        'gwd_config': GwdConfig.create(gwd_tau, gwd_f),
        'kld_config': GwdConfig.create(kld_tau, kld_f),
        'piou_config': PiouConfig.create(piou_k, piou_step),
        'giou_enclosing': giou_enclosing,
        'kfiou_normalize': kfiou_normalize,
    }


def global_options(ctx):
    return ctx.find_root().obj


def echo_summary(out, lines):
    """Human-readable summary; it moves to stderr when the CSV itself goes to stdout."""
    to_stderr = out in (None, '-')
    for line in lines:
        click.echo(line, err=to_stderr)


def format_table(header, rows):
    cells = [[str(cell) for cell in header]] + [[_cell(cell) for cell in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return ['  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]


def _cell(value):
    if value is None:
        return '-'
    if isinstance(value, float):
        return '{:.6g}'.format(value)
    return str(value)
