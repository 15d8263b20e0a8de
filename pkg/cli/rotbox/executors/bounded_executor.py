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

from concurrent.futures import ThreadPoolExecutor
from threading import BoundedSemaphore, Lock


class BoundedExecutor:
    """Thread pool whose submit() blocks once ``bound`` items wait beyond the running ones.

    It also fails fast: the first exception raised by a finished work item is
    re-raised on the next submit() or on shutdown().
    """

    def __init__(self, bound, max_workers):
        self._delegate = ThreadPoolExecutor(max_workers=max_workers)
        self._semaphore = BoundedSemaphore(bound + max_workers)
        self._pending = []
        self._lock = Lock()

    def submit(self, fn, *args, **kwargs):
        self._raise_first_failure()
        self._semaphore.acquire()
        try:
            future = self._delegate.submit(fn, *args, **kwargs)
        except Exception:
            self._semaphore.release()
            raise
        with self._lock:
            self._pending.append(future)
        future.add_done_callback(lambda _: self._semaphore.release())
        return future

    def shutdown(self):
        self._delegate.shutdown(wait=True)
        self._raise_first_failure()

    def _raise_first_failure(self):
        with self._lock:
            finished = [future for future in self._pending if future.done()]
            self._pending = [future for future in self._pending if not future.done()]
        for future in finished:
            future.result()
