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

from rotbox.enumeration.entity_type import EntityType

ALL_CATEGORIES = '*'


class EvalResultMapper(object):
    def curve_to_dict(self, curve):
        return {
            'type': EntityType.CATEGORY_AP,
            'category': curve.category,
            'iou_threshold': curve.threshold,
            'ap': curve.ap,
            'num_gt': curve.num_gt,
            'num_det': curve.num_det
        }

    def eval_result_to_dicts(self, result):
        """Per-category AP rows, then one '*' row per threshold holding the mAP."""
        items = [self.curve_to_dict(curve) for curve in result.curves]
        for threshold, value in zip(result.thresholds, result.map_per_threshold):
            items.append({
                'type': EntityType.CATEGORY_AP,
                'category': ALL_CATEGORIES,
                'iou_threshold': threshold,
                'ap': value,
                'num_gt': sum(curve.num_gt for curve in result.curves if curve.threshold == threshold),
                'num_det': sum(curve.num_det for curve in result.curves if curve.threshold == threshold)
            })
        return items

    def summary_to_dicts(self, result):
        values = [
            ('mAP', result.map),
            ('AP50', result.ap50),
            ('AP75', result.ap75),
            ('precision', result.precision),
            ('recall', result.recall),
            ('hmean', result.hmean),
        ]
        return [{'type': EntityType.EVAL_SUMMARY, 'name': name, 'value': value} for name, value in values]
