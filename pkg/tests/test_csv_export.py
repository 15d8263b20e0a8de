import csv
import math

import numpy as np
import pytest
from blockchainetl_common.jobs.exporters.composite_item_exporter import CompositeItemExporter

from rotbox.config_utils import load_config_file, parse_config_lines
from rotbox.csv_utils import emit_csv
from rotbox.domain.annotation import Annotation
from rotbox.domain.rotated_box import RotatedBox
from rotbox.domain.sim_config import SimConfig
from rotbox.errors import ConfigError
from rotbox.exporters import CsvCompositeItemExporter, format_value
from rotbox.service.ap_evaluator import evaluate_ap
from rotbox.service.geom_core import box_polygon
from rotbox.service.regression_simulator import simulate_regression

RECORD_HEADER = 'loss,trial,iteration,loss_value,rotated_iou,corner_rms\r\n'


def read_rows(path):
    with open(path, newline='') as f:
        return list(csv.reader(f))


def test_empty_trace_gives_header_only(tmp_path):
    path = str(tmp_path / 'empty.csv')
    emit_csv(simulate_regression(SimConfig.create(n_trials=0)), path)
    with open(path, 'rb') as f:
        assert f.read() == RECORD_HEADER.encode('utf-8')


def test_trace_rows(tmp_path):
    path = str(tmp_path / 'trace.csv')
    emit_csv(simulate_regression(SimConfig.create(n_trials=2, max_iters=6, seed=1)), path)
    rows = read_rows(path)
    assert len(rows) == 1 + 2 * 6
    assert rows[1][:3] == ['fpdiou', '0', '0']
    assert rows[-1][:3] == ['fpdiou', '1', '5']
    assert all(math.isfinite(float(row[3])) for row in rows[1:])


def test_same_seed_gives_identical_bytes(tmp_path):
    config = SimConfig.create(n_trials=2, max_iters=10, seed=12, loss='giou')
    paths = [str(tmp_path / 'first.csv'), str(tmp_path / 'second.csv')]
    for path in paths:
        emit_csv(simulate_regression(config), path)
    with open(paths[0], 'rb') as first, open(paths[1], 'rb') as second:
        assert first.read() == second.read()


def test_eval_result_rows(tmp_path):
    gt = Annotation()
    gt.box = RotatedBox.create(5, 5, 4, 2, 0.2)
    gt.quad = list(box_polygon(gt.box))
    gt.category = 'plane'
    prd = Annotation()
    prd.box = gt.box
    prd.quad = gt.quad
    prd.category = 'plane'
    prd.score = 0.5
    path = str(tmp_path / 'ap.csv')
    emit_csv(evaluate_ap([gt], [prd], thresholds=[0.5, 0.75]), path)
    assert read_rows(path) == [
        ['category', 'iou_threshold', 'ap', 'num_gt', 'num_det'],
        ['plane', '0.5', '1.0', '1', '1'],
        ['plane', '0.75', '1.0', '1', '1'],
        ['*', '0.5', '1.0', '1', '1'],
        ['*', '0.75', '1.0', '1', '1'],
    ]


def test_other_objects_are_rejected(tmp_path):
    with pytest.raises(TypeError):
        emit_csv({'not': 'a trace'}, str(tmp_path / 'x.csv'))


@pytest.mark.parametrize('value,expected', [
    (None, ''),
    (True, 'true'),
    (3, '3'),
    (np.int64(7), '7'),
    (0.1, '0.1'),
    (1.0 / 3.0, '0.3333333333333333'),
    (np.float64(2.5), '2.5'),
    (float('nan'), 'nan'),
    (float('inf'), 'inf'),
    ('plane', 'plane'),
])
def test_format_value(value, expected):
    assert format_value(value) == expected


def test_composite_exporter_routes_items(tmp_path):
    path = str(tmp_path / 'a.csv')
    exporter = CsvCompositeItemExporter({'a': path, 'b': None}, {'a': ['x', 'y'], 'b': ['z']})
    assert isinstance(exporter, CompositeItemExporter)
    exporter.open()
    exporter.export_items([{'type': 'a', 'x': 1, 'y': 'with,comma'}, {'type': 'b', 'z': 2}])
    with pytest.raises(ValueError):
        exporter.export_item({'type': 'c'})
    with pytest.raises(ValueError):
        exporter.export_item({'x': 1})
    exporter.close()
    assert read_rows(path) == [['x', 'y'], ['1', 'with,comma']]


def test_composite_exporter_writes_headers_on_open(tmp_path):
    paths = {'a': str(tmp_path / 'a.csv'), 'b': str(tmp_path / 'b.csv')}
    exporter = CsvCompositeItemExporter(paths, {'a': ['x', 'y'], 'b': ['z']})
    exporter.open()
    exporter.export_item({'type': 'b', 'z': 0.1})
    exporter.close()
    with open(paths['a'], 'rb') as f:
        assert f.read() == b'x,y\r\n'
    with open(paths['b'], 'rb') as f:
        assert f.read() == b'z\r\n0.1\r\n'


def test_parse_config_lines():
    values = parse_config_lines([
        '# simulation settings',
        'n_trials = 12',
        'loss = "giou"   # quoted',
        '',
        'offset_range = 1.1, 1.4',
        'lr=0.25',
        'stop_at_target = True',
    ])
    assert values == {'n_trials': 12, 'loss': 'giou', 'offset_range': (1.1, 1.4), 'lr': 0.25, 'stop_at_target': True}
    assert SimConfig.create(**values).n_trials == 12


@pytest.mark.parametrize('line', ['momentum = 0.9', 'lr 0.5', 'max_iters = many', 'size_range = 1,2,3',
                                  'stop_at_target = maybe'])
def test_bad_config_lines(line):
    with pytest.raises(ConfigError):
        parse_config_lines([line])


def test_load_config_file(tmp_path):
    path = tmp_path / 'sim.conf'
    path.write_text('max_iters = 30\nseed = 4\n')
    assert load_config_file(str(path)) == {'max_iters': 30, 'seed': 4}
    assert load_config_file(None) == {}
