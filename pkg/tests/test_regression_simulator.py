import math
import time

import numpy as np
import pytest

from rotbox.domain.rotated_box import RotatedBox
from rotbox.domain.sim_config import SimConfig
from rotbox.enumeration.metric_type import MetricType
from rotbox.errors import ConfigError
from rotbox.service.regression_simulator import RegressionSimulator, compare_losses, corner_rms, \
    simulate_regression, summarize


def records_by_trial(trace):
    trials = {}
    for record in trace.records:
        trials.setdefault(record.trial, []).append(record)
    return trials


def test_scenarios_start_disjoint_and_repeat_across_losses():
    config = SimConfig.create(n_trials=5, seed=3)
    fpdiou = RegressionSimulator(config)
    giou = RegressionSimulator(config._replace(loss=MetricType.GIOU))
    for trial in range(5):
        target, initial = fpdiou.sample_scenario(trial)
        assert giou.sample_scenario(trial) == (target, initial)
        assert (target.cx, target.cy) == (4.0, 4.0)
        distance = math.hypot(initial.cx - target.cx, initial.cy - target.cy)
        assert distance > 0.5 * (math.hypot(target.w, target.h) + math.hypot(initial.w, initial.h))


def test_rotated_iou_never_leaves_the_plateau():
    trace = simulate_regression(SimConfig.create(n_trials=4, max_iters=50, loss=MetricType.ROTATED_IOU, seed=2))
    assert len(trace.records) == 200
    assert all(record.rotated_iou == 0.0 for record in trace.records)
    assert all(summary.iterations_to_target is None for summary in trace.trials)
    for records in records_by_trial(trace).values():
        assert len(set(record.corner_rms for record in records)) == 1


def test_fpdiou_recovers_disjoint_starts():
    trace = simulate_regression(SimConfig.create(n_trials=8, max_iters=400, seed=1))
    summary = summarize(trace)
    assert summary['trials'] == 8
    assert summary['final_iou_p50'] > 0.5
    assert all(trial.initial_iou == 0.0 for trial in trace.trials)


def test_small_steps_decrease_the_loss():
    trace = simulate_regression(SimConfig.create(n_trials=5, max_iters=400, lr=0.1, angle_lr=0.05, image_w=32, image_h=32,
                                                 size_range=(8, 12), seed=4))
    steps = 0
    increases = 0
    for records in records_by_trial(trace).values():
        for before, after in zip(records, records[1:]):
            steps += 1
            if after.loss > before.loss + 1e-12:
                increases += 1
    assert increases <= 0.01 * steps


def test_simulation_is_deterministic():
    config = SimConfig.create(n_trials=3, max_iters=20, seed=9, loss=MetricType.DIOU)
    first = simulate_regression(config)
    second = simulate_regression(config, max_workers=3)
    assert [vars(r) for r in first.records] == [vars(r) for r in second.records]
    assert [vars(s) for s in first.trials] == [vars(s) for s in second.trials]


def test_records_are_ordered_by_trial_then_iteration():
    trace = simulate_regression(SimConfig.create(n_trials=2, max_iters=7, seed=5))
    assert [(r.trial, r.iteration) for r in trace.records] == [(t, i) for t in range(2) for i in range(7)]
    assert len(trace.records_for_trial(1)) == 7


def test_empty_simulation():
    trace = simulate_regression(SimConfig.create(n_trials=0))
    assert trace.records == []
    assert trace.trials == []
    summary = summarize(trace)
    assert summary['trials'] == 0
    assert summary['loss'] == MetricType.FPDIOU
    assert summary['median_iterations_to_target'] is None
    assert summary['final_iou_p50'] is None


def test_compare_losses_runs_every_loss():
    config = SimConfig.create(n_trials=2, max_iters=5, seed=6)
    summaries = compare_losses(config, [MetricType.FPDIOU, MetricType.SMOOTH_L1, MetricType.GWD])
    assert [s['loss'] for s in summaries] == [MetricType.FPDIOU, MetricType.SMOOTH_L1, MetricType.GWD]
    assert all(s['trials'] == 2 for s in summaries)


def test_corner_rms():
    box = RotatedBox.create(5, 5, 4, 2, 0.3)
    shifted = box._replace(cx=8.0, cy=9.0)
    assert corner_rms(box, box) == 0.0
    assert corner_rms(box, shifted) == pytest.approx(5.0)


@pytest.mark.parametrize('overrides', [
    dict(lr=0),
    dict(max_iters=0),
    dict(n_trials=-1),
    dict(loss='l2'),
    dict(size_range=(5.0, 2.0)),
    dict(momentum=0.9),
])
def test_invalid_configs(overrides):
    with pytest.raises(ConfigError):
        SimConfig.create(**overrides)


def test_config_defaults_and_coercion():
    config = SimConfig.create(n_trials='3', lr='0.5', offset_range=[1, 2])
    assert config.n_trials == 3
    assert config.lr == 0.5
    assert config.offset_range == (1.0, 2.0)
    assert config.loss == MetricType.FPDIOU
    assert np.isclose(config.angle_range[1], math.pi / 2)


def test_config_coerces_stop_at_target():
    assert SimConfig.create().stop_at_target is False
    assert SimConfig.create(stop_at_target=1).stop_at_target is True


def test_stop_at_target_ends_the_trial_at_the_target():
    config = SimConfig.create(n_trials=6, seed=8)
    full = simulate_regression(config)
    stopped = simulate_regression(config._replace(stop_at_target=True))
    for before, after in zip(full.trials, stopped.trials):
        assert after.iterations_to_target == before.iterations_to_target
        records = stopped.records_for_trial(after.trial)
        if after.iterations_to_target is None:
            assert len(records) == config.max_iters
        else:
            assert len(records) == after.iterations_to_target + 1
            assert after.final_iou == records[-1].rotated_iou >= config.iou_target


def test_stationary_predictions_repeat_the_last_record():
    config = SimConfig.create(n_trials=1, max_iters=30, loss=MetricType.ROTATED_IOU, seed=2)
    records = simulate_regression(config).records
    assert [r.iteration for r in records] == list(range(30))
    assert len(set((r.loss, r.rotated_iou, r.corner_rms) for r in records)) == 1


def test_disjoint_starts_reach_the_target_fastest_under_fpdiou():
    config = SimConfig.create(n_trials=500, seed=0, stop_at_target=True)
    losses = [MetricType.FPDIOU, MetricType.GIOU, MetricType.DIOU, MetricType.ROTATED_IOU]

    started = time.monotonic()
    traces = {name: simulate_regression(config._replace(loss=name)) for name in losses}
    elapsed = time.monotonic() - started

    summaries = {name: summarize(trace) for name, trace in traces.items()}
    fpdiou_median = summaries[MetricType.FPDIOU]['median_iterations_to_target']
    assert fpdiou_median is not None
    assert summaries[MetricType.GIOU]['median_iterations_to_target'] is not None
    assert summaries[MetricType.DIOU]['median_iterations_to_target'] is not None
    assert fpdiou_median < summaries[MetricType.GIOU]['median_iterations_to_target']
    assert fpdiou_median < summaries[MetricType.DIOU]['median_iterations_to_target']
    assert summaries[MetricType.ROTATED_IOU]['reached_target'] == 0
    assert summaries[MetricType.ROTATED_IOU]['median_iterations_to_target'] is None
    assert elapsed < 300

    # Scenarios depend only on (seed, trial): a shorter parallel rerun repeats the first trials.
    rerun = simulate_regression(config._replace(n_trials=20), max_workers=4)
    assert [vars(s) for s in rerun.trials] == [vars(s) for s in traces[MetricType.FPDIOU].trials[:20]]


def test_small_learning_rate_converges_from_disjoint_starts():
    trace = simulate_regression(SimConfig.create(n_trials=60, lr=0.5, max_iters=500, seed=0))
    summary = summarize(trace)
    assert all(trial.initial_iou == 0.0 for trial in trace.trials)
    assert summary['reached_target'] == 60
    assert summary['final_iou_p50'] > 0.9
