import numpy as np
import pytest

from rotbox.domain.rotated_box import ImageDims, RotatedBox
from rotbox.enumeration.metric_type import MetricType
from rotbox.errors import ConfigError, DataError
from rotbox.service.losses import metric_value
from rotbox.service.metric_matrix import metric_matrix

DIMS = ImageDims.create(64, 64)
BOXES = [
    RotatedBox.create(20, 20, 10, 4, 0.3),
    RotatedBox.create(23, 21, 8, 6, -0.2),
    RotatedBox.create(50, 45, 6, 3, 1.1),
]


def test_identical_pair():
    assert metric_matrix([BOXES[0]], [BOXES[0]], MetricType.FPDIOU, DIMS).tolist() == [[1.0]]


def test_disjoint_entry_is_zero():
    matrix = metric_matrix(BOXES[:2], [BOXES[1], BOXES[2]], MetricType.ROTATED_IOU)
    assert matrix.shape == (2, 2)
    assert matrix[0, 1] == 0.0
    assert matrix[1, 0] == 1.0
    assert 0.0 < matrix[0, 0] < 1.0


def test_rows_follow_ground_truth_order():
    matrix = metric_matrix(BOXES, BOXES[:2], MetricType.GIOU)
    assert matrix.shape == (3, 2)
    for i, gt in enumerate(BOXES):
        for j, prd in enumerate(BOXES[:2]):
            assert matrix[i, j] == metric_value(MetricType.GIOU, gt, prd)


@pytest.mark.parametrize('metric', MetricType.SYMMETRIC)
def test_symmetric_metrics_give_symmetric_matrices(metric):
    matrix = metric_matrix(BOXES, BOXES, metric, DIMS)
    assert np.allclose(matrix, matrix.T, rtol=0, atol=1e-9)


def test_kld_matrix_holds_divergences():
    matrix = metric_matrix(BOXES, BOXES, MetricType.KLD)
    assert np.allclose(np.diag(matrix), 0.0, atol=1e-12)
    assert matrix[0, 1] != matrix[1, 0]


def test_threaded_rows_keep_their_order():
    single = metric_matrix(BOXES, BOXES, MetricType.DIOU)
    threaded = metric_matrix(BOXES, BOXES, MetricType.DIOU, max_workers=3)
    assert np.array_equal(single, threaded)


def test_options_reach_the_metric():
    hull = metric_matrix(BOXES[:1], BOXES[1:2], MetricType.GIOU)
    aabb = metric_matrix(BOXES[:1], BOXES[1:2], MetricType.GIOU, giou_enclosing='aabb')
    assert aabb[0, 0] < hull[0, 0]


def test_empty_inputs_are_rejected():
    with pytest.raises(DataError):
        metric_matrix([], BOXES, MetricType.ROTATED_IOU)


def test_missing_image_dims_are_rejected():
    with pytest.raises(ConfigError):
        metric_matrix(BOXES, BOXES, MetricType.FPDIOU)
