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
from rotbox.exporters import CsvCompositeItemExporter

CATEGORY_AP_FIELDS_TO_EXPORT = [
    'category',
    'iou_threshold',
    'ap',
    'num_gt',
    'num_det'
]

EVAL_SUMMARY_FIELDS_TO_EXPORT = [
    'name',
    'value'
]


def eval_item_exporter(ap_output=None, summary_output=None):
    return CsvCompositeItemExporter(
        filename_mapping={
            EntityType.CATEGORY_AP: ap_output,
            EntityType.EVAL_SUMMARY: summary_output
        },
        field_mapping={
            EntityType.CATEGORY_AP: CATEGORY_AP_FIELDS_TO_EXPORT,
            EntityType.EVAL_SUMMARY: EVAL_SUMMARY_FIELDS_TO_EXPORT
        }
    )
