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


class SimTraceMapper(object):
    def record_to_dict(self, record):
        return {
            'type': EntityType.SIM_RECORD,
            'loss': record.loss_name,
            'trial': record.trial,
            'iteration': record.iteration,
            'loss_value': record.loss,
            'rotated_iou': record.rotated_iou,
            'corner_rms': record.corner_rms
        }

    def trial_summary_to_dict(self, summary):
        return {
            'type': EntityType.TRIAL_SUMMARY,
            'loss': summary.loss_name,
            'trial': summary.trial,
            'initial_iou': summary.initial_iou,
            'final_iou': summary.final_iou,
            'final_loss': summary.final_loss,
            'iterations_to_target': summary.iterations_to_target,
            'jitter_events': summary.jitter_events
        }

    def loss_summary_to_dict(self, summary):
        item = dict(summary)
        item['type'] = EntityType.LOSS_SUMMARY
        return item
