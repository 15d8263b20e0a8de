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

import logging
import time

from rotbox.atomic_counter import AtomicCounter


# Thread safe progress logger. Two threads crossing the same step may both log it.
class ProgressLogger:
    def __init__(self, name='work', logger=None, log_percentage_step=10, log_item_step=1000):
        self.name = name
        self.total_items = None
        self.start_time = None
        self.counter = AtomicCounter()
        self.log_percentage_step = log_percentage_step
        self.log_item_step = log_item_step
        self.logger = logger if logger is not None else logging.getLogger('ProgressLogger')

    def start(self, total_items=None):
        self.total_items = total_items
        self.start_time = time.monotonic()
        message = 'Started {}.'.format(self.name)
        if total_items is not None:
            message = message + ' Items to process: {}.'.format(total_items)
        self.logger.info(message)

    def track(self, item_count=1):
        processed = self.counter.increment(item_count)
        before = processed - item_count
        if self.total_items:
            step = self.log_percentage_step
            percentage = processed * 100 // self.total_items
            if before * 100 // self.total_items // step != percentage // step:
                self.logger.info('{} of {} {} items processed ({}%).'.format(
                    processed, self.total_items, self.name, percentage))
        elif before // self.log_item_step != processed // self.log_item_step:
            self.logger.info('{} {} items processed.'.format(processed, self.name))

    def finish(self):
        message = 'Finished {}. Total items processed: {}.'.format(self.name, self.counter.value)
        if self.start_time is not None:
            message = message + ' Took {:.3f}s.'.format(time.monotonic() - self.start_time)
        self.logger.info(message)
