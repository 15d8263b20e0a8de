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

"""Detection AP over rotated boxes.

Predictions of a category are matched greedily in descending score order: each
one takes the ground truth it overlaps most in the same image, becomes a true
positive if the overlap clears the threshold and that ground truth is still
free, and a false positive otherwise. Matches on difficult ground truths count
as neither. AP is the area under the all-points interpolated PR curve.
"""

import logging

import numpy as np

from rotbox.domain.eval_result import DEFAULT_THRESHOLDS, CategoryCurve, EvalResult
from rotbox.enumeration.metric_type import MetricType
from rotbox.errors import ConfigError, DataError
from rotbox.service import iou_metrics

logger = logging.getLogger('ApEvaluator')

HMEAN_THRESHOLD = 0.5


def voc_ap(recall, precision):
    mrec = np.concatenate(([0.0], recall, [1.0]))
    mpre = np.concatenate(([0.0], precision, [0.0]))
    # precision envelope
    mpre = np.maximum.accumulate(mpre[::-1])[::-1]
    changes = np.where(mrec[1:] != mrec[:-1])[0]
    return float(np.sum((mrec[changes + 1] - mrec[changes]) * mpre[changes + 1]))


class _CategoryMatches(object):
    def __init__(self):
        self.gts_by_image = {}
        self.detections = []
        self.overlaps = []
        self.num_gt = 0


class ApEvaluator(object):
    def __init__(self, match_metric=MetricType.ROTATED_IOU, dims=None):
        if match_metric not in MetricType.MATCHING:
            raise ConfigError('Matching supports {}, got {}'.format(', '.join(MetricType.MATCHING), match_metric))
        if match_metric == MetricType.FPDIOU and dims is None:
            raise ConfigError('Matching by fpdiou needs image dimensions')
        self.match_metric = match_metric
        self.dims = dims

    def match_score(self, gt, det):
        if self.match_metric == MetricType.FPDIOU:
            if gt.is_rectangle and det.is_rectangle:
                return iou_metrics.fpdiou(gt.box, det.box, self.dims)
            return iou_metrics.fpdiou_quads(gt.quad, det.quad, self.dims)
        if gt.is_rectangle and det.is_rectangle:
            return iou_metrics.rotated_iou(gt.box, det.box)
        return iou_metrics.quad_iou(gt.quad, det.quad)

    def evaluate(self, gts, prds, thresholds=None):
        thresholds = list(DEFAULT_THRESHOLDS if thresholds is None else thresholds)
        for det in prds:
            if det.score is None:
                raise DataError('Prediction on line {} of {} carries no score'.format(det.line, det.image_id))

        result = EvalResult()
        result.thresholds = thresholds

        gt_categories = set(gt.category for gt in gts)
        for category in sorted(set(det.category for det in prds) - gt_categories):
            self._warn(result, 'Category {} has predictions but no ground truth; it is left out of mAP'.format(category))

        matches = {}
        for category in sorted(gt_categories):
            prepared = self._prepare(category, gts, prds)
            if prepared.num_gt == 0:
                self._warn(result, 'Category {} has only difficult ground truth; it is left out of mAP'.format(category))
                continue
            matches[category] = prepared
        result.categories = sorted(matches)
        if not result.categories:
            self._warn(result, 'No ground truth to evaluate against; AP is 0')

        for threshold in thresholds:
            aps = []
            for category in result.categories:
                curve = self._curve(category, matches[category], threshold)
                result.curves.append(curve)
                aps.append(curve.ap)
            result.map_per_threshold.append(float(np.mean(aps)) if aps else 0.0)
        result.map = float(np.mean(result.map_per_threshold)) if result.map_per_threshold else 0.0
        result.ap50 = self._map_at(result, matches, 0.5)
        result.ap75 = self._map_at(result, matches, 0.75)
        self._hmean(result, matches)
        return result

    def _prepare(self, category, gts, prds):
        prepared = _CategoryMatches()
        for gt in gts:
            if gt.category == category:
                prepared.gts_by_image.setdefault(gt.image_id, []).append(gt)
                if not gt.difficulty:
                    prepared.num_gt += 1
        detections = [det for det in prds if det.category == category]
        order = np.argsort(-np.asarray([det.score for det in detections], dtype=float), kind='stable')
        prepared.detections = [detections[i] for i in order]
        for det in prepared.detections:
            candidates = prepared.gts_by_image.get(det.image_id, [])
            prepared.overlaps.append(np.asarray([self.match_score(gt, det) for gt in candidates], dtype=float))
        return prepared

    @staticmethod
    def _tp_fp(prepared, threshold):
        taken = dict((image_id, [False] * len(items)) for image_id, items in prepared.gts_by_image.items())
        tp = np.zeros(len(prepared.detections))
        fp = np.zeros(len(prepared.detections))
        for index, (det, overlaps) in enumerate(zip(prepared.detections, prepared.overlaps)):
            if overlaps.size == 0:
                fp[index] = 1
                continue
            best = int(np.argmax(overlaps))
            if overlaps[best] >= threshold:
                if prepared.gts_by_image[det.image_id][best].difficulty:
                    continue
                if not taken[det.image_id][best]:
                    tp[index] = 1
                    taken[det.image_id][best] = True
                else:
                    fp[index] = 1
            else:
                fp[index] = 1
        return tp, fp

    def _curve(self, category, prepared, threshold):
        curve = CategoryCurve()
        curve.category = category
        curve.threshold = threshold
        curve.num_gt = prepared.num_gt
        curve.num_det = len(prepared.detections)
        tp, fp = self._tp_fp(prepared, threshold)
        tp = np.cumsum(tp)
        fp = np.cumsum(fp)
        recall = tp / float(prepared.num_gt)
        precision = tp / np.maximum(tp + fp, np.finfo(np.float64).eps)
        curve.recall = recall.tolist()
        curve.precision = precision.tolist()
        curve.ap = voc_ap(recall, precision) if curve.num_det else 0.0
        return curve

    def _map_at(self, result, matches, threshold):
        if threshold in result.thresholds:
            return result.map_per_threshold[result.thresholds.index(threshold)]
        aps = [self._curve(category, matches[category], threshold).ap for category in result.categories]
        return float(np.mean(aps)) if aps else 0.0

    def _hmean(self, result, matches):
        true_positives = 0.0
        detections = 0.0
        num_gt = 0
        for prepared in matches.values():
            tp, fp = self._tp_fp(prepared, HMEAN_THRESHOLD)
            true_positives += tp.sum()
            detections += tp.sum() + fp.sum()
            num_gt += prepared.num_gt
        result.precision = true_positives / detections if detections else 0.0
        result.recall = true_positives / num_gt if num_gt else 0.0
        total = result.precision + result.recall
        result.hmean = 2.0 * result.precision * result.recall / total if total else 0.0

    @staticmethod
    def _warn(result, message):
        logger.warning(message)
        result.warnings.append(message)


def evaluate_ap(gts, prds, thresholds=None, match_metric=MetricType.ROTATED_IOU, dims=None):
    return ApEvaluator(match_metric, dims).evaluate(gts, prds, thresholds)
