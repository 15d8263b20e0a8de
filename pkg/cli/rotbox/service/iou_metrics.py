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

"""Exact-area IoU family for rotated boxes: IoU, GIoU, DIoU, CIoU, EIoU and FPDIoU."""

import math

from rotbox.diffcheck import dmath
from rotbox.diffcheck.dual import real
from rotbox.service import geom_core
from rotbox.service.geom_core import (
    box_polygon, convex_hull, corners_from_box, intersect_convex, min_enclosing_aabb, polygon_area,
    quad_polygon, same_polygon, sort_corners)

ENCLOSING_HULL = 'hull'
ENCLOSING_AABB = 'aabb'

FOUR_OVER_PI_SQUARED = 4.0 / (math.pi * math.pi)


class Overlap(object):
    def __init__(self, gt_polygon, prd_polygon, intersection, union, iou):
        self.gt_polygon = gt_polygon
        self.prd_polygon = prd_polygon
        self.intersection = intersection
        self.union = union
        self.iou = iou


def overlap(gt, prd):
    gt_polygon = box_polygon(gt)
    prd_polygon = box_polygon(prd)
    area_gt = gt.w * gt.h
    area_prd = prd.w * prd.h
    if same_polygon(gt_polygon, prd_polygon):
        # Coinciding point sets: IoU is exactly 1 and flat under perturbation.
        return Overlap(gt_polygon, prd_polygon, area_gt, area_gt, 1.0)
    intersection = polygon_area(intersect_convex(gt_polygon, prd_polygon))
    union = area_gt + area_prd - intersection
    return Overlap(gt_polygon, prd_polygon, intersection, union, intersection / union)


def rotated_iou(gt, prd):
    return overlap(gt, prd).iou


def giou(gt, prd, enclosing=ENCLOSING_HULL):
    result = overlap(gt, prd)
    if real(result.iou) == 1.0:
        return 1.0
    points = result.gt_polygon + result.prd_polygon
    if enclosing == ENCLOSING_HULL:
        enclosing_area = polygon_area(convex_hull(points))
    elif enclosing == ENCLOSING_AABB:
        width, height = geom_core.aabb_extents(points)
        enclosing_area = width * height
    else:
        raise ValueError('Unknown enclosing region {}'.format(enclosing))
    return result.iou - (enclosing_area - result.union) / enclosing_area


def _center_distance_squared(gt, prd):
    dx = gt.cx - prd.cx
    dy = gt.cy - prd.cy
    return dx * dx + dy * dy


def _diou_parts(gt, prd):
    result = overlap(gt, prd)
    width, height = min_enclosing_aabb(result.gt_polygon, result.prd_polygon)
    diagonal_squared = width * width + height * height
    return result, width, height, result.iou - _center_distance_squared(gt, prd) / diagonal_squared


def diou(gt, prd):
    return _diou_parts(gt, prd)[3]


def aspect_consistency(gt, prd):
    """The CIoU aspect term V in [0, 1]."""
    difference = dmath.atan(gt.w / gt.h) - dmath.atan(prd.w / prd.h)
    return FOUR_OVER_PI_SQUARED * difference * difference


def ciou(gt, prd):
    result, _, _, value = _diou_parts(gt, prd)
    v = aspect_consistency(gt, prd)
    if real(v) == 0:
        # alpha taken as 0 when V vanishes, including the IoU = 1 limit.
        return value
    alpha = v / (1.0 - result.iou + v)
    return value - alpha * v


def eiou(gt, prd):
    _, width, height, value = _diou_parts(gt, prd)
    dw = prd.w - gt.w
    dh = prd.h - gt.h
    return value - dw * dw / (width * width) - dh * dh / (height * height)


def corner_penalty(gt_corners, prd_corners, dims):
    total = 0.0
    for (gx, gy), (px, py) in zip(gt_corners, prd_corners):
        dx = gx - px
        dy = gy - py
        total = total + dx * dx + dy * dy
    return total / (4.0 * (dims.w * dims.w + dims.h * dims.h))


def fpdiou(gt, prd, dims):
    iou = rotated_iou(gt, prd)
    return iou - corner_penalty(corners_from_box(gt), corners_from_box(prd), dims)


def quad_iou(q_gt, q_prd):
    gt_polygon = quad_polygon(q_gt)
    prd_polygon = quad_polygon(q_prd)
    if same_polygon(gt_polygon, prd_polygon):
        return 1.0
    intersection = polygon_area(intersect_convex(gt_polygon, prd_polygon))
    union = polygon_area(gt_polygon) + polygon_area(prd_polygon) - intersection
    return intersection / union


def fpdiou_quads(q_gt, q_prd, dims):
    """FPDIoU for arbitrary convex quadrilaterals given as four points each."""
    return quad_iou(q_gt, q_prd) - corner_penalty(sort_corners(q_gt), sort_corners(q_prd), dims)


def loss_of(metric):
    return 1.0 - metric
