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

"""Synthetic box regression: plain gradient descent on the predicted box.

Each trial draws a target box centered in the image and an initial prediction
whose center sits ``offset_range`` summed circumradii away, then follows the
negative gradient of the configured loss. Scenarios depend only on
(seed, trial), so every loss sees the same starting points.
"""

import copy
import logging
import math

import numpy as np

from rotbox.diffcheck.gradients import grad_prd
from rotbox.domain.rotated_box import ImageDims, RotatedBox
from rotbox.domain.sim_trace import SimRecord, SimTrace, TrialSummary
from rotbox.errors import NonSmoothPoint, NumericError
from rotbox.executors.batch_work_executor import BatchWorkExecutor
from rotbox.service import sampling
from rotbox.service.geom_core import corners_from_box
from rotbox.service.iou_metrics import rotated_iou
from rotbox.service.losses import create_loss
from rotbox.utils import percentile

JITTER = 1e-7
MAX_JITTER_ATTEMPTS = 8

logger = logging.getLogger('RegressionSimulator')


def corner_rms(gt, prd):
    total = 0.0
    for (gx, gy), (px, py) in zip(corners_from_box(gt), corners_from_box(prd)):
        total += (gx - px) ** 2 + (gy - py) ** 2
    return math.sqrt(total / 4.0)


class RegressionSimulator(object):
    def __init__(self, config, loss=None):
        self.config = config
        self.dims = ImageDims.create(config.image_w, config.image_h)
        self.loss = loss if loss is not None else create_loss(config.loss, self.dims)

    def sample_scenario(self, trial):
        cfg = self.config
        rng = sampling.generator(cfg.seed, trial)
        w = sampling.uniform(rng, cfg.size_range)
        h = w * sampling.uniform(rng, cfg.aspect_range)
        target = RotatedBox.create(cfg.image_w / 2.0, cfg.image_h / 2.0, w, h,
                                   sampling.uniform(rng, cfg.angle_range))
        initial = sampling.jittered_box(rng, target, scale_range=cfg.scale_range, aspect_range=cfg.aspect_range,
                                        angle_range=cfg.angle_range, offset_range=cfg.offset_range)
        return target, initial

    def _record(self, trial, iteration, target, prd):
        record = SimRecord()
        record.loss_name = self.loss.name
        record.trial = trial
        record.iteration = iteration
        record.loss = float(self.loss(target, prd))
        record.rotated_iou = float(rotated_iou(target, prd))
        record.corner_rms = corner_rms(target, prd)
        return record

    def run_trial(self, trial):
        cfg = self.config
        target, prd = self.sample_scenario(trial)
        jitter_rng = sampling.generator(cfg.seed, trial, 1)

        summary = TrialSummary()
        summary.loss_name = self.loss.name
        summary.trial = trial
        records = []
        # Once the prediction stops moving every later record is a copy of the last one.
        frozen = False
        for iteration in range(cfg.max_iters):
            if frozen:
                record = copy.copy(records[-1])
                record.iteration = iteration
                records.append(record)
                continue

            record = self._record(trial, iteration, target, prd)
            records.append(record)

            if iteration == 0:
                summary.initial_iou = record.rotated_iou
            if summary.iterations_to_target is None and record.rotated_iou >= cfg.iou_target:
                summary.iterations_to_target = iteration
                if cfg.stop_at_target:
                    break
            if not math.isfinite(record.loss):
                raise NumericError('Loss {} became non-finite in trial {} at iteration {}'.format(
                    self.loss.name, trial, iteration))
            if record.loss <= cfg.stop_tol:
                frozen = True
                continue
            moved = self._step(target, prd, jitter_rng, summary)
            frozen = moved == prd
            prd = moved

        last = records[-1]
        summary.final_iou = last.rotated_iou
        summary.final_loss = last.loss
        return records, summary

    def _gradient(self, target, prd, jitter_rng, summary):
        for _ in range(MAX_JITTER_ATTEMPTS):
            try:
                return grad_prd(self.loss, target, prd), prd
            except NonSmoothPoint as e:
                summary.jitter_events += 1
                logger.warning('Trial {}: {}. Jittering the prediction by {}.'.format(summary.trial, e, JITTER))
                noise = jitter_rng.standard_normal(5) * JITTER
                prd = RotatedBox.create(*(value + delta for value, delta in zip(prd, noise)))
        return grad_prd(self.loss, target, prd), prd

    def _step(self, target, prd, jitter_rng, summary):
        cfg = self.config
        gradient, prd = self._gradient(target, prd, jitter_rng, summary)
        if not all(math.isfinite(g) for g in gradient):
            raise NumericError('Non-finite gradient {} in trial {}'.format(gradient, summary.trial))
        return RotatedBox.create(
            prd.cx - cfg.lr * gradient[0],
            prd.cy - cfg.lr * gradient[1],
            max(prd.w - cfg.lr * gradient[2], cfg.min_size),
            max(prd.h - cfg.lr * gradient[3], cfg.min_size),
            prd.theta - cfg.angle_lr * gradient[4])


def simulate_regression(config, max_workers=1, loss=None):
    simulator = RegressionSimulator(config, loss)
    executor = BatchWorkExecutor(1, max_workers, progress_name='{} trials'.format(simulator.loss.name))
    results = executor.map(range(config.n_trials), simulator.run_trial)

    trace = SimTrace(config)
    for records, summary in results:
        trace.records.extend(records)
        trace.trials.append(summary)
    jitter_events = sum(summary.jitter_events for summary in trace.trials)
    if jitter_events:
        logger.warning('{} non-smooth points were jittered across {} trials.'.format(jitter_events, config.n_trials))
    return trace


def summarize(trace):
    """Aggregate percentiles of a trace; unreached targets count as never."""
    finals = [summary.final_iou for summary in trace.trials]
    reached = [summary.iterations_to_target for summary in trace.trials if summary.iterations_to_target is not None]
    iterations = [summary.iterations_to_target if summary.iterations_to_target is not None else math.inf
                  for summary in trace.trials]
    median_iterations = float(np.median(iterations)) if iterations else None
    if median_iterations is not None and math.isinf(median_iterations):
        median_iterations = None
    return {
        'loss': trace.trials[0].loss_name if trace.trials else trace.config.loss,
        'trials': len(trace.trials),
        'reached_target': len(reached),
        'median_iterations_to_target': median_iterations,
        'final_iou_p10': percentile(finals, 10),
        'final_iou_p50': percentile(finals, 50),
        'final_iou_p90': percentile(finals, 90),
    }


def compare_losses(config, loss_names, max_workers=1):
    """Runs the same seeded scenarios under each loss and summarizes them."""
    summaries = []
    for name in loss_names:
        trace = simulate_regression(config._replace(loss=name), max_workers)
        summaries.append(summarize(trace))
    return summaries
