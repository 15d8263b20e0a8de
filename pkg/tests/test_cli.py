import csv
import os

import pytest

from rotbox.cli import EXIT_DATA, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main

RESOURCES = os.path.join(os.path.dirname(__file__), 'resources', 'dota')


def read_rows(path):
    with open(path, newline='') as f:
        return list(csv.reader(f))


@pytest.fixture
def out(tmp_path):
    return str(tmp_path / 'out.csv')


def test_metric_for_one_pair(out):
    assert main(['--out', out, 'metric', '--gt', '0,0,2,2,0', '--prd', '1,0,2,2,0', '-m', 'rotated_iou,giou']) == EXIT_OK
    rows = read_rows(out)
    assert rows[0] == ['gt_index', 'prd_index', 'metric', 'value']
    assert [row[2] for row in rows[1:]] == ['rotated_iou', 'giou']
    assert float(rows[1][3]) == pytest.approx(1.0 / 3.0)
    assert float(rows[2][3]) == pytest.approx(1.0 / 3.0)


def test_metric_skips_image_metrics_without_dims(out):
    assert main(['--out', out, 'metric', '--gt', '0,0,2,2,0', '--prd', '0,0,2,2,0']) == EXIT_OK
    names = [row[2] for row in read_rows(out)[1:]]
    assert 'fpdiou' not in names
    assert 'kfiou' not in names
    assert 'smooth_l1' in names


def test_metric_with_image_size(out):
    args = ['--out', out, 'metric', '--gt', '0,0,2,2,0', '--prd', '1,0,2,2,0', '-m', 'fpdiou', '--image-size', '10,10']
    assert main(args) == EXIT_OK
    assert float(read_rows(out)[1][3]) == pytest.approx(1.0 / 3.0 - 0.005)


def test_bad_box_is_a_usage_error(out):
    assert main(['--out', out, 'metric', '--gt', '0,0,2', '--prd', '1,0,2,2,0']) == EXIT_USAGE


def test_unknown_metric_is_a_usage_error(out):
    assert main(['--out', out, 'metric', '--gt', '0,0,2,2,0', '--prd', '1,0,2,2,0', '-m', 'l2']) == EXIT_USAGE


def test_missing_boxes_are_a_usage_error(out):
    assert main(['--out', out, 'metric', '--gt', '0,0,2,2,0']) == EXIT_USAGE


def test_matrix(out):
    args = ['--out', out, 'matrix', '--gt', os.path.join(RESOURCES, 'gt', 'P0001.txt'),
            '--pred', os.path.join(RESOURCES, 'pred', 'P0001.txt'), '--pred-with-scores']
    assert main(args) == EXIT_OK
    rows = read_rows(out)
    assert len(rows) == 1 + 3 * 3
    assert rows[1][:3] == ['0', '0', 'rotated_iou']
    assert float(rows[1][3]) == pytest.approx(1.0)


def test_matrix_fpdiou_needs_image_size(out):
    args = ['--out', out, 'matrix', '--gt', os.path.join(RESOURCES, 'gt', 'P0002.txt'),
            '--pred', os.path.join(RESOURCES, 'gt', 'P0002.txt'), '-m', 'fpdiou']
    assert main(args) == EXIT_USAGE


def test_eval_resource_directories(tmp_path, out):
    summary = str(tmp_path / 'summary.csv')
    args = ['--out', out, 'eval', '--gt', os.path.join(RESOURCES, 'gt'), '--pred', os.path.join(RESOURCES, 'pred'),
            '--thresholds', '0.5,0.75', '--summary-output', summary]
    assert main(args) == EXIT_OK
    rows = read_rows(out)
    assert rows[0] == ['category', 'iou_threshold', 'ap', 'num_gt', 'num_det']
    assert ['*', '0.5', '1.0'] == rows[-2][:3]
    values = dict(read_rows(summary)[1:])
    assert float(values['mAP']) == 1.0
    assert float(values['hmean']) == pytest.approx(6.0 / 7.0)


def test_eval_bad_thresholds(out):
    args = ['--out', out, 'eval', '--gt', os.path.join(RESOURCES, 'gt'), '--pred', os.path.join(RESOURCES, 'pred'),
            '--thresholds', '0.5,1.5']
    assert main(args) == EXIT_USAGE


def test_eval_broken_file_is_a_data_error(tmp_path, out):
    broken = tmp_path / 'broken.txt'
    broken.write_text('0 0 2 0 2 2 0 2 plane 0 0.9\n1 2 3\n')
    args = ['--out', out, 'eval', '--gt', os.path.join(RESOURCES, 'gt', 'P0002.txt'), '--pred', str(broken)]
    assert main(args) == EXIT_DATA


def test_missing_file_is_a_data_error(tmp_path, out):
    args = ['--out', out, 'eval', '--gt', str(tmp_path / 'nope.txt'), '--pred', str(tmp_path / 'nope.txt')]
    assert main(args) == EXIT_DATA


def test_simulate(tmp_path, out):
    trials = str(tmp_path / 'trials.csv')
    args = ['--seed', '3', '--out', out, 'simulate', '-n', '2', '--max-iters', '5', '--trials-output', trials]
    assert main(args) == EXIT_OK
    rows = read_rows(out)
    assert rows[0] == ['loss', 'trial', 'iteration', 'loss_value', 'rotated_iou', 'corner_rms']
    assert len(rows) == 1 + 2 * 5
    assert len(read_rows(trials)) == 1 + 2


def test_simulate_compare(tmp_path, out):
    summary = str(tmp_path / 'summary.csv')
    args = ['--out', out, 'simulate', '-n', '1', '--max-iters', '3', '--compare', 'fpdiou,giou',
            '--summary-output', summary]
    assert main(args) == EXIT_OK
    assert [row[0] for row in read_rows(out)[1:]] == ['fpdiou'] * 3 + ['giou'] * 3
    assert [row[0] for row in read_rows(summary)[1:]] == ['fpdiou', 'giou']


def test_simulate_stops_at_the_target(tmp_path, out):
    trials = str(tmp_path / 'trials.csv')
    args = ['--seed', '2', '--out', out, 'simulate', '-n', '3', '--stop-at-target', '--trials-output', trials]
    assert main(args) == EXIT_OK
    records = read_rows(out)[1:]
    for row in read_rows(trials)[1:]:
        iterations = [r for r in records if r[1] == row[1]]
        if row[5]:
            assert len(iterations) == int(row[5]) + 1
        else:
            assert len(iterations) == 400


def test_command_line_beats_config_file(tmp_path, out):
    config = tmp_path / 'sim.conf'
    config.write_text('n_trials = 1\nmax_iters = 4\nseed = 8\n')
    assert main(['--config', str(config), '--out', out, 'simulate']) == EXIT_OK
    assert len(read_rows(out)) == 1 + 4
    assert main(['--config', str(config), '--out', out, 'simulate', '--max-iters', '2']) == EXIT_OK
    assert len(read_rows(out)) == 1 + 2


def test_simulate_with_same_seed_is_byte_identical(tmp_path):
    paths = [str(tmp_path / 'first.csv'), str(tmp_path / 'second.csv')]
    for path in paths:
        assert main(['--seed', '5', '--out', path, 'simulate', '-n', '2', '--max-iters', '4']) == EXIT_OK
    with open(paths[0], 'rb') as first, open(paths[1], 'rb') as second:
        assert first.read() == second.read()


@pytest.mark.parametrize('args', [
    ['simulate', '--lr', '-1'],
    ['simulate', '--size-range', '5,2'],
    ['simulate', '--image-size', '32'],
])
def test_invalid_simulation_settings(out, args):
    assert main(['--out', out] + args) == EXIT_USAGE


def test_bad_config_file_is_a_usage_error(tmp_path, out):
    config = tmp_path / 'sim.conf'
    config.write_text('momentum = 0.9\n')
    assert main(['--config', str(config), '--out', out, 'simulate']) == EXIT_USAGE


def test_gradcheck(out):
    assert main(['--seed', '1', '--out', out, 'gradcheck', '-l', 'giou', '-n', '3']) == EXIT_OK
    rows = read_rows(out)
    assert rows[0] == ['loss', 'config', 'parameter', 'analytic', 'numeric', 'rel_err']
    assert set(row[0] for row in rows[1:]) == {'giou'}


def test_strict_gradcheck_failure_is_a_numeric_error(out):
    args = ['--out', out, 'gradcheck', '-l', 'giou', '-n', '3', '--tolerance', '-1', '--strict']
    assert main(args) == EXIT_NUMERIC


def test_bench(out):
    assert main(['--out', out, 'bench', '-m', 'rotated_iou,kld', '-n', '5']) == EXIT_OK
    rows = read_rows(out)
    assert rows[0] == ['metric', 'calls', 'total_seconds', 'microseconds_per_call']
    assert [row[0] for row in rows[1:]] == ['rotated_iou', 'kld']
    assert [row[1] for row in rows[1:]] == ['5', '5']
