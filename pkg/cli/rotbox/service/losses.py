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

"""Registry turning every metric into a regression loss of the predicted box."""

import math

from rotbox.domain.gaussian import DEFAULT_GWD_CONFIG, F_LOG1P, GwdConfig
from rotbox.domain.piou_config import DEFAULT_PIOU_CONFIG
from rotbox.enumeration.metric_type import MetricType
from rotbox.errors import ConfigError
from rotbox.service import gaussian_metrics, iou_metrics, piou_metric

DEFAULT_KLD_CONFIG = GwdConfig.create(tau=1.0, f_kind=F_LOG1P)
SMOOTH_L1_BETA = 1.0


def smooth_l1(gt, prd, beta=SMOOTH_L1_BETA):
    """Parameter-space baseline: Smooth-L1 summed over (cx, cy, w, h, theta)."""
    total = 0.0
    for target, value in zip(gt, prd):
        difference = abs(value - target)
        if difference < beta:
            total = total + 0.5 * difference * difference / beta
        else:
            total = total + difference - 0.5 * beta
    return total


class Loss(object):
    def __init__(self, name, fn, metric_fn, lattice_config=None):
        self.name = name
        self._fn = fn
        self._metric_fn = metric_fn
        self._lattice_config = lattice_config

    def __call__(self, gt, prd, **extras):
        return self._fn(gt, prd, **extras)

    def metric(self, gt, prd):
        return self._metric_fn(gt, prd)

    def frozen_extras(self, gt, prd):
        if self._lattice_config is None:
            return {}
        return {'lattice': piou_metric.build_lattice(gt, prd, self._lattice_config)}

    def __repr__(self):
        return 'Loss({})'.format(self.name)


def create_loss(name, dims=None, gwd_config=DEFAULT_GWD_CONFIG, kld_config=DEFAULT_KLD_CONFIG,
                piou_config=DEFAULT_PIOU_CONFIG, kfiou_normalize=False, center_weight=1.0,
                giou_enclosing=iou_metrics.ENCLOSING_HULL):
    if name in MetricType.NEEDS_IMAGE_DIMS and dims is None:
        raise ConfigError('The {} loss needs image dimensions'.format(name))

    if name == MetricType.ROTATED_IOU:
        metric = iou_metrics.rotated_iou
    elif name == MetricType.GIOU:
        def metric(gt, prd):
            return iou_metrics.giou(gt, prd, giou_enclosing)
    elif name == MetricType.DIOU:
        metric = iou_metrics.diou
    elif name == MetricType.CIOU:
        metric = iou_metrics.ciou
    elif name == MetricType.EIOU:
        metric = iou_metrics.eiou
    elif name == MetricType.FPDIOU:
        def metric(gt, prd):
            return iou_metrics.fpdiou(gt, prd, dims)
    elif name == MetricType.GWD:
        def metric(gt, prd):
            return gaussian_metrics.gwd(gt, prd, gwd_config)
    elif name == MetricType.KLD:
        # Similarity form of the divergence of the prediction from the target.
        def metric(gt, prd):
            divergence = gaussian_metrics.kld(prd, gt)
            return 1.0 / (kld_config.tau + gaussian_metrics.transform(divergence, kld_config.f_kind))
    elif name == MetricType.KFIOU:
        return _kfiou_loss(dims, kfiou_normalize, center_weight)
    elif name == MetricType.PIOU:
        def loss(gt, prd, lattice=None):
            return iou_metrics.loss_of(piou_metric.piou(gt, prd, piou_config, lattice))

        def metric(gt, prd):
            return piou_metric.piou(gt, prd, piou_config)
        return Loss(name, loss, metric, lattice_config=piou_config)
    elif name == MetricType.SMOOTH_L1:
        return Loss(name, smooth_l1, iou_metrics.rotated_iou)
    else:
        raise ConfigError('Unknown loss {}, expected one of {}'.format(name, ', '.join(MetricType.ALL_LOSSES)))

    def loss(gt, prd):
        return iou_metrics.loss_of(metric(gt, prd))
    return Loss(name, loss, metric)


def _kfiou_loss(dims, normalize, center_weight):
    diagonal = math.hypot(dims.w, dims.h)

    def metric(gt, prd):
        return gaussian_metrics.kfiou(gt, prd, normalize)

    def loss(gt, prd):
        value = iou_metrics.loss_of(metric(gt, prd))
        if center_weight:
            value = value + center_weight * gaussian_metrics.center_loss(gt, prd) / diagonal
        return value
    return Loss(MetricType.KFIOU, loss, metric)


def metric_value(name, gt, prd, dims=None, **options):
    """Similarity value of ``name`` for the pair; KLD reports the raw divergence."""
    if name == MetricType.KLD:
        return gaussian_metrics.kld(prd, gt)
    if name == MetricType.SMOOTH_L1:
        return smooth_l1(gt, prd)
    return create_loss(name, dims, **options).metric(gt, prd)
