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

"""Forward-mode gradients of losses with respect to the predicted box, and a
finite-difference cross-check.

A loss is any callable ``loss_fn(gt, prd, **extras)``. Loss objects may expose
``frozen_extras(gt, prd)``; the returned keyword arguments are computed once
at the evaluation point and held fixed while differentiating (the PIoU
sampling lattice uses this).
"""

from rotbox.diffcheck.dual import Dual, tangent
from rotbox.domain.grad_report import GradReport, PARAMETER_NAMES

DEFAULT_RELATIVE_STEP = 1e-5
REL_ERR_FLOOR = 1e-8


def resolve_extras(loss_fn, gt, prd, extras=None):
    if extras is not None:
        return extras
    frozen = getattr(loss_fn, 'frozen_extras', None)
    if frozen is None:
        return {}
    return frozen(gt, prd)


def _seeded(prd, index):
    values = [float(v) for v in prd]
    values[index] = Dual(values[index], 1.0)
    return prd.__class__(*values)


def grad_prd(loss_fn, gt, prd, extras=None):
    """d loss / d (cx, cy, w, h, theta) of ``prd``, one forward pass per parameter.

    Raises NonSmoothPoint when a pass crosses a corner-order tie or a clipping
    coincidence.
    """
    extras = resolve_extras(loss_fn, gt, prd, extras)
    gradient = []
    for index in range(len(PARAMETER_NAMES)):
        value = loss_fn(gt, _seeded(prd, index), **extras)
        gradient.append(float(tangent(value)))
    return gradient


def _shifted(prd, index, delta):
    values = [float(v) for v in prd]
    values[index] = values[index] + delta
    return prd.__class__(*values)


def numeric_grad(loss_fn, gt, prd, extras=None, h=DEFAULT_RELATIVE_STEP):
    """Five-point central differences with a step relative to each parameter."""
    extras = resolve_extras(loss_fn, gt, prd, extras)
    gradient = []
    for index in range(len(PARAMETER_NAMES)):
        step = h * max(1.0, abs(float(prd[index])))

        def f(delta):
            return float(loss_fn(gt, _shifted(prd, index, delta), **extras))

        gradient.append((f(-2 * step) - 8.0 * f(-step) + 8.0 * f(step) - f(2 * step)) / (12.0 * step))
    return gradient


def relative_error(analytic, numeric):
    return abs(analytic - numeric) / max(abs(analytic), abs(numeric), REL_ERR_FLOOR)


def check_grad(loss_fn, gt, prd, extras=None, h=DEFAULT_RELATIVE_STEP):
    extras = resolve_extras(loss_fn, gt, prd, extras)
    report = GradReport()
    report.analytic = grad_prd(loss_fn, gt, prd, extras)
    report.numeric = numeric_grad(loss_fn, gt, prd, extras, h)
    report.max_rel_err = max(relative_error(a, n) for a, n in zip(report.analytic, report.numeric))
    return report
