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

"""Box-to-Gaussian modelling and the distribution metrics GWD, KLD and KFIoU.

2x2 matrices are handled as ``(a, b, c, d)`` row-major tuples so the same code
runs on floats and Dual numbers.
"""

import math

from rotbox.diffcheck import dmath
from rotbox.diffcheck.dual import real
from rotbox.domain.gaussian import DEFAULT_GWD_CONFIG, F_IDENTITY, F_LOG1P, F_SQRT, Gaussian2
from rotbox.errors import NumericError, SingularCovariance

# Eigenvalue ratio floor; box covariances have ratio (h / w)^2, so boxes with a side ratio
# of 1e6 or more are rejected as ill-conditioned.
EPS_COND = 1e-12
CLOSED_FORM_TOLERANCE = 1e-9
KFIOU_MAX = 1.0 / 3.0


def box_to_gaussian(box):
    cos_t = dmath.cos(box.theta)
    sin_t = dmath.sin(box.theta)
    major = box.w * box.w * 0.25
    minor = box.h * box.h * 0.25
    a = major * cos_t * cos_t + minor * sin_t * sin_t
    b = (major - minor) * cos_t * sin_t
    c = major * sin_t * sin_t + minor * cos_t * cos_t
    return Gaussian2((box.cx, box.cy), ((a, b), (b, c)))


def _flat(g):
    return g.sigma[0][0], g.sigma[0][1], g.sigma[1][0], g.sigma[1][1]


def _det(m):
    return m[0] * m[3] - m[1] * m[2]


def _add(m, n):
    return tuple(x + y for x, y in zip(m, n))


def _sub(m, n):
    return tuple(x - y for x, y in zip(m, n))


def _mul(m, n):
    return (m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
            m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3])


def _inverse(m):
    det = _det(m)
    return (m[3] / det, -m[1] / det, -m[2] / det, m[0] / det)


def _apply(m, v):
    return (m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1])


def check_conditioning(m, name='covariance'):
    a, b, c = real(m[0]), real(m[1]), real(m[3])
    half_trace = 0.5 * (a + c)
    radius = math.hypot(0.5 * (a - c), b)
    largest = half_trace + radius
    smallest = half_trace - radius
    if not largest > 0 or smallest <= EPS_COND * largest:
        raise SingularCovariance('The {} is singular or ill-conditioned: eigenvalues {} and {}'.format(
            name, smallest, largest))


def sqrtm_spd(m):
    """Principal square root of a symmetric positive definite 2x2 matrix."""
    s = dmath.sqrt(_det(m))
    t = dmath.sqrt(m[0] + m[3] + 2.0 * s)
    return ((m[0] + s) / t, m[1] / t, m[2] / t, (m[3] + s) / t)


def gaussian_volume(g):
    return 4.0 * dmath.sqrt(_det(_flat(g)))


def gwd_distance(gt, prd):
    """Squared 2-Wasserstein distance between the box Gaussians."""
    g1 = box_to_gaussian(gt)
    g2 = box_to_gaussian(prd)
    dx = g1.mu[0] - g2.mu[0]
    dy = g1.mu[1] - g2.mu[1]
    root = _sub(sqrtm_spd(_flat(g1)), sqrtm_spd(_flat(g2)))
    frobenius = root[0] * root[0] + root[1] * root[1] + root[2] * root[2] + root[3] * root[3]
    return dx * dx + dy * dy + frobenius


def gwd_distance_closed_form(gt, prd):
    """Squared distance of (x, y, w/2, h/2); equals gwd_distance for equal angles."""
    dx = gt.cx - prd.cx
    dy = gt.cy - prd.cy
    dw = (gt.w - prd.w) * 0.5
    dh = (gt.h - prd.h) * 0.5
    return dx * dx + dy * dy + dw * dw + dh * dh


def same_angle(gt, prd):
    difference = real(gt.theta) - real(prd.theta)
    return abs(difference - math.pi * round(difference / math.pi)) <= 1e-12


def transform(value, f_kind):
    if f_kind == F_SQRT:
        return dmath.sqrt(value)
    if f_kind == F_LOG1P:
        return dmath.log1p(value)
    if f_kind == F_IDENTITY:
        return value
    raise ValueError('Unknown transform {}'.format(f_kind))


def gwd(gt, prd, cfg=DEFAULT_GWD_CONFIG):
    distance = gwd_distance(gt, prd)
    if same_angle(gt, prd):
        closed_form = real(gwd_distance_closed_form(gt, prd))
        if abs(real(distance) - closed_form) > CLOSED_FORM_TOLERANCE * max(1.0, closed_form):
            raise NumericError('Wasserstein distance {} disagrees with the closed form {}'.format(
                real(distance), closed_form))
    return 1.0 / (cfg.tau + transform(distance, cfg.f_kind))


def kld(p, t):
    """KL divergence of the Gaussian of ``p`` from the Gaussian of ``t``."""
    gp = box_to_gaussian(p)
    gt = box_to_gaussian(t)
    sp = _flat(gp)
    st = _flat(gt)
    check_conditioning(sp)
    check_conditioning(st)
    det_t = _det(st)
    det_p = _det(sp)
    dx = gp.mu[0] - gt.mu[0]
    dy = gp.mu[1] - gt.mu[1]
    mahalanobis = (dx * dx * st[3] - 2.0 * dx * dy * st[1] + dy * dy * st[0]) / det_t
    trace = (st[3] * sp[0] - 2.0 * st[1] * sp[1] + st[0] * sp[3]) / det_t
    return 0.5 * mahalanobis + 0.5 * trace + 0.5 * dmath.log(det_t / det_p) - 1.0


def gaussian_product(g1, g2):
    """Kalman product of two Gaussians: the fused Gaussian and its scale factor.

    K = S1 (S1 + S2)^-1, S = S1 - K S1, mu = mu1 + K (mu2 - mu1), and the scale is
    the density of N(mu1, S1 + S2) at mu2.
    """
    s1 = _flat(g1)
    s2 = _flat(g2)
    total = _add(s1, s2)
    check_conditioning(total, 'covariance sum')
    inverse_total = _inverse(total)
    gain = _mul(s1, inverse_total)
    fused = _sub(s1, _mul(gain, s1))
    delta = (g2.mu[0] - g1.mu[0], g2.mu[1] - g1.mu[1])
    shift = _apply(gain, delta)
    mu = (g1.mu[0] + shift[0], g1.mu[1] + shift[1])
    projected = _apply(inverse_total, delta)
    exponent = -0.5 * (delta[0] * projected[0] + delta[1] * projected[1])
    scale = dmath.exp(exponent) / (2.0 * math.pi * dmath.sqrt(_det(total)))
    # The fused covariance is symmetric in exact arithmetic; average off-diagonals.
    off = 0.5 * (fused[1] + fused[2])
    return Gaussian2(mu, ((fused[0], off), (off, fused[3]))), scale


def kfiou(gt, prd, normalize=False):
    g1 = box_to_gaussian(gt)
    g2 = box_to_gaussian(prd)
    fused, _ = gaussian_product(g1, g2)
    v1 = gaussian_volume(g1)
    v2 = gaussian_volume(g2)
    v3 = gaussian_volume(fused)
    value = v3 / (v1 + v2 - v3)
    if normalize:
        return 3.0 * value
    return value


def center_loss(gt, prd):
    dx = gt.cx - prd.cx
    dy = gt.cy - prd.cy
    return dmath.sqrt(dx * dx + dy * dy)
