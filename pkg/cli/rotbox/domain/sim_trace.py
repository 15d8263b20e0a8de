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

class SimRecord(object):
    def __init__(self):
        self.loss_name = None
        self.trial = None
        self.iteration = None
        self.loss = None
        self.rotated_iou = None
        self.corner_rms = None


class TrialSummary(object):
    def __init__(self):
        self.loss_name = None
        self.trial = None
        self.initial_iou = None
        self.final_iou = None
        self.final_loss = None
        self.iterations_to_target = None
        self.jitter_events = 0


class SimTrace(object):
    def __init__(self, config):
        self.config = config
        self.records = []
        self.trials = []

    def records_for_trial(self, trial):
        return [record for record in self.records if record.trial == trial]
