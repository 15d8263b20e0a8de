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

SIM_RECORD_FIELDS_TO_EXPORT = [
    'loss',
    'trial',
    'iteration',
    'loss_value',
    'rotated_iou',
    'corner_rms'
]

TRIAL_SUMMARY_FIELDS_TO_EXPORT = [
    'loss',
    'trial',
    'initial_iou',
    'final_iou',
    'final_loss',
    'iterations_to_target',
    'jitter_events'
]

LOSS_SUMMARY_FIELDS_TO_EXPORT = [
    'loss',
    'trials',
    'reached_target',
    'median_iterations_to_target',
    'final_iou_p10',
    'final_iou_p50',
    'final_iou_p90'
]


def simulation_item_exporter(records_output=None, trials_output=None, summary_output=None):
    return CsvCompositeItemExporter(
        filename_mapping={
            EntityType.SIM_RECORD: records_output,
            EntityType.TRIAL_SUMMARY: trials_output,
            EntityType.LOSS_SUMMARY: summary_output
        },
        field_mapping={
            EntityType.SIM_RECORD: SIM_RECORD_FIELDS_TO_EXPORT,
            EntityType.TRIAL_SUMMARY: TRIAL_SUMMARY_FIELDS_TO_EXPORT,
            EntityType.LOSS_SUMMARY: LOSS_SUMMARY_FIELDS_TO_EXPORT
        }
    )
