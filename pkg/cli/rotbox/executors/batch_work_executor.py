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
import os

from rotbox.executors.bounded_executor import BoundedExecutor
from rotbox.progress_logger import ProgressLogger
from rotbox.utils import dynamic_batch_iterator

THREADS_ENV_VAR = 'ROTBOX_THREADS'


def capped_workers(max_workers):
    """Applies the ROTBOX_THREADS cap to a requested worker count."""
    cap = os.environ.get(THREADS_ENV_VAR)
    max_workers = max(1, int(max_workers))
    if cap:
        max_workers = min(max_workers, max(1, int(cap)))
    return max_workers


# Runs index-addressed work units in batches on a bounded thread pool.
# Results land in slots keyed by input position, so ordering never depends on scheduling.
class BatchWorkExecutor:
    def __init__(self, batch_size, max_workers, progress_name='work'):
        self.batch_size = batch_size
        self.max_workers = capped_workers(max_workers)
        self.executor = BoundedExecutor(1, self.max_workers)
        self.progress_logger = ProgressLogger(name=progress_name)
        self.logger = logging.getLogger('BatchWorkExecutor')

    def execute(self, work_iterable, work_handler, total_items=None):
        self.progress_logger.start(total_items=total_items)
        for batch in dynamic_batch_iterator(work_iterable, lambda: self.batch_size):
            self.executor.submit(self._execute_batch, work_handler, batch)

    def map(self, items, fn):
        """fn applied to every item, results returned in input order."""
        items = list(items)
        results = [None] * len(items)

        def handle(batch):
            for index, item in batch:
                results[index] = fn(item)

        self.execute(enumerate(items), handle, total_items=len(items))
        self.shutdown()
        return results

    def _execute_batch(self, work_handler, batch):
        work_handler(batch)
        self.progress_logger.track(len(batch))

    def shutdown(self):
        self.executor.shutdown()
        self.progress_logger.finish()
