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

"""Rotated-box conversions and exact convex polygon geometry.

Polygons are lists of ``(x, y)`` tuples in counter-clockwise order. All
functions accept float or Dual coordinates; branch decisions always look at
real parts, so a Dual evaluation follows the float evaluation step for step.
"""

import math

from rotbox.diffcheck import dmath
from rotbox.diffcheck.dual import any_dual, real
from rotbox.domain.rotated_box import CornerQuad, RotatedBox, normalize_angle
from rotbox.errors import GeometryError, NonSmoothPoint, NotARectangle

EPS_GEOM = 1e-9
EPS_RECT = 1e-6


def corners_ccw(box):
    """Rectangle corners counter-clockwise, starting at center + w/2 + h/2."""
    cos_t = dmath.cos(box.theta)
    sin_t = dmath.sin(box.theta)
    ax, ay = box.w * 0.5 * cos_t, box.w * 0.5 * sin_t
    bx, by = -box.h * 0.5 * sin_t, box.h * 0.5 * cos_t
    return [
        (box.cx + ax + bx, box.cy + ay + by),
        (box.cx - ax + bx, box.cy - ay + by),
        (box.cx - ax - bx, box.cy - ay - by),
        (box.cx + ax - bx, box.cy + ay - by),
    ]


box_polygon = corners_ccw


def sort_corners(points):
    points = list(points)
    if len(points) != 4:
        raise GeometryError('Expected 4 corner points, got {}'.format(len(points)))
    ordered = sorted(points, key=lambda p: (real(p[0]), real(p[1])))
    if any_dual(*(c for p in ordered for c in p)):
        for left, right in zip(ordered, ordered[1:]):
            if abs(real(left[0]) - real(right[0])) <= EPS_GEOM:
                raise NonSmoothPoint(
                    'Corner x tie at x={} makes the corner order non-smooth'.format(real(left[0])))
    return CornerQuad(*ordered)


def corners_from_box(box):
    return sort_corners(corners_ccw(box))


def quad_polygon(points):
    """Orders four convex-position points counter-clockwise."""
    points = list(points)
    cx = sum(real(p[0]) for p in points) / len(points)
    cy = sum(real(p[1]) for p in points) / len(points)
    ordered = sorted(points, key=lambda p: math.atan2(real(p[1]) - cy, real(p[0]) - cx))
    start = min(range(len(ordered)), key=lambda i: (real(ordered[i][0]), real(ordered[i][1])))
    return ordered[start:] + ordered[:start]


def _distance(p, q):
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return math.sqrt(dx * dx + dy * dy)


def box_from_corners(points, tolerance=EPS_RECT):
    """Recovers (cx, cy, w, h, theta) from four rectangle corners given in any order.

    The longer edge becomes ``w``; for squares the edge whose normalized angle
    is closest to zero wins. The center is the mean of the four corners.
    """
    points = [(float(real(p[0])), float(real(p[1]))) for p in points]
    if len(points) != 4:
        raise GeometryError('Expected 4 corner points, got {}'.format(len(points)))
    p = quad_polygon(points)
    sides = [_distance(p[i], p[(i + 1) % 4]) for i in range(4)]
    diagonals = [_distance(p[0], p[2]), _distance(p[1], p[3])]
    scale = max(diagonals)
    if scale <= EPS_GEOM:
        raise NotARectangle('Degenerate quadrilateral {}'.format(points), residual=float('inf'))
    residual = max(abs(sides[0] - sides[2]), abs(sides[1] - sides[3]),
                   abs(diagonals[0] - diagonals[1])) / scale
    if residual > tolerance:
        raise NotARectangle('Quadrilateral {} is not a rectangle (residual {:.3g})'.format(points, residual),
                            residual=residual)

    cx = math.fsum(q[0] for q in p) / 4.0
    cy = math.fsum(q[1] for q in p) / 4.0
    edge_a = (p[1][0] - p[0][0], p[1][1] - p[0][1])
    edge_b = (p[2][0] - p[1][0], p[2][1] - p[1][1])
    len_a = 0.5 * (sides[0] + sides[2])
    len_b = 0.5 * (sides[1] + sides[3])
    theta_a = normalize_angle(math.atan2(edge_a[1], edge_a[0]))
    theta_b = normalize_angle(math.atan2(edge_b[1], edge_b[0]))

    if abs(len_a - len_b) <= tolerance * scale:
        if (abs(theta_a), theta_a) <= (abs(theta_b), theta_b):
            return RotatedBox.create(cx, cy, len_a, len_b, theta_a)
        return RotatedBox.create(cx, cy, len_b, len_a, theta_b)
    if len_a > len_b:
        return RotatedBox.create(cx, cy, len_a, len_b, theta_a)
    return RotatedBox.create(cx, cy, len_b, len_a, theta_b)


def polygon_area(polygon):
    if len(polygon) < 3:
        return 0.0
    terms = []
    for (x0, y0), (x1, y1) in zip(polygon, polygon[1:] + polygon[:1]):
        terms.append(x0 * y1 - x1 * y0)
    doubled = dmath.fsum(terms)
    if real(doubled) < 0:
        doubled = -doubled
    return doubled * 0.5


def signed_area(polygon):
    if len(polygon) < 3:
        return 0.0
    return 0.5 * math.fsum(real(x0) * real(y1) - real(x1) * real(y0)
                           for (x0, y0), (x1, y1) in zip(polygon, polygon[1:] + polygon[:1]))


def _bounds(polygon):
    xs = [real(p[0]) for p in polygon]
    ys = [real(p[1]) for p in polygon]
    return min(xs), min(ys), max(xs), max(ys)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _dedupe(polygon):
    result = []
    for point in polygon:
        if result and abs(real(point[0]) - real(result[-1][0])) <= EPS_GEOM \
                and abs(real(point[1]) - real(result[-1][1])) <= EPS_GEOM:
            continue
        result.append(point)
    while len(result) > 1 and abs(real(result[0][0]) - real(result[-1][0])) <= EPS_GEOM \
            and abs(real(result[0][1]) - real(result[-1][1])) <= EPS_GEOM:
        result.pop()
    return result


def intersect_convex(subject, clip):
    """Exact intersection of two CCW convex polygons (Sutherland-Hodgman).

    Returns an empty list when the polygons only touch or are disjoint.
    """
    if len(subject) < 3 or len(clip) < 3:
        return []
    sx0, sy0, sx1, sy1 = _bounds(subject)
    cx0, cy0, cx1, cy1 = _bounds(clip)
    if sx1 < cx0 or cx1 < sx0 or sy1 < cy0 or cy1 < sy0:
        return []

    differentiating = any_dual(*(c for p in subject + clip for c in p))
    output = list(subject)
    edge_start = clip[-1]
    for edge_end in clip:
        if not output:
            break
        edge_length = math.hypot(real(edge_end[0]) - real(edge_start[0]),
                                 real(edge_end[1]) - real(edge_start[1]))
        sides = [_cross(edge_start, edge_end, p) for p in output]
        if differentiating:
            for point, side in zip(output, sides):
                if abs(real(side)) <= EPS_GEOM * edge_length:
                    raise NonSmoothPoint(
                        'Vertex ({}, {}) lies on a clipping edge'.format(real(point[0]), real(point[1])))
        inputs = output
        output = []
        previous, previous_side = inputs[-1], sides[-1]
        for current, current_side in zip(inputs, sides):
            if real(current_side) >= 0:
                if real(previous_side) < 0:
                    output.append(_crossing(previous, current, previous_side, current_side))
                output.append(current)
            elif real(previous_side) >= 0:
                output.append(_crossing(previous, current, previous_side, current_side))
            previous, previous_side = current, current_side
        edge_start = edge_end

    output = _dedupe(output)
    if len(output) < 3 or real(polygon_area(output)) <= EPS_GEOM:
        return []
    return output


def _crossing(start, end, start_side, end_side):
    t = start_side / (start_side - end_side)
    return (start[0] + t * (end[0] - start[0]), start[1] + t * (end[1] - start[1]))


def convex_hull(points):
    """Counter-clockwise hull by Andrew's monotone chain; collinear points dropped."""
    ordered = sorted(points, key=lambda p: (real(p[0]), real(p[1])))
    unique = []
    for point in ordered:
        if unique and abs(real(point[0]) - real(unique[-1][0])) <= EPS_GEOM \
                and abs(real(point[1]) - real(unique[-1][1])) <= EPS_GEOM:
            continue
        unique.append(point)
    if len(unique) < 3:
        return unique

    def half(sequence):
        chain = []
        for point in sequence:
            while len(chain) >= 2 and real(_cross(chain[-2], chain[-1], point)) <= 0:
                chain.pop()
            chain.append(point)
        return chain

    lower = half(unique)
    upper = half(reversed(unique))
    return lower[:-1] + upper[:-1]


def aabb_extents(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return max(xs, key=real) - min(xs, key=real), max(ys, key=real) - min(ys, key=real)


def min_enclosing_aabb(a, b):
    """Width and height of the axis-aligned box around both corner sets."""
    return aabb_extents(list(a) + list(b))


def point_in_polygon(point, polygon, tolerance=EPS_GEOM):
    """True when ``point`` is inside or within ``tolerance`` of a CCW convex polygon."""
    for start, end in zip(polygon, polygon[1:] + polygon[:1]):
        length = math.hypot(real(end[0]) - real(start[0]), real(end[1]) - real(start[1]))
        if real(_cross(start, end, point)) < -tolerance * max(length, 1.0):
            return False
    return True


def same_polygon(a, b, tolerance=EPS_GEOM):
    if len(a) != len(b):
        return False
    key = lambda p: (real(p[0]), real(p[1]))
    for p, q in zip(sorted(a, key=key), sorted(b, key=key)):
        if abs(real(p[0]) - real(q[0])) > tolerance or abs(real(p[1]) - real(q[1])) > tolerance:
            return False
    return True


def is_convex_quad(points):
    """Strict convexity and simplicity of four points taken in the given order."""
    signs = []
    for i in range(4):
        turn = real(_cross(points[i], points[(i + 1) % 4], points[(i + 2) % 4]))
        if abs(turn) <= EPS_GEOM:
            return False
        signs.append(turn > 0)
    return all(signs) or not any(signs)


def is_simple_quad(points):
    """False when two opposite edges of the quad cross each other."""
    def segments_cross(p1, p2, q1, q2):
        d1 = real(_cross(q1, q2, p1))
        d2 = real(_cross(q1, q2, p2))
        d3 = real(_cross(p1, p2, q1))
        d4 = real(_cross(p1, p2, q2))
        return d1 * d2 < 0 and d3 * d4 < 0

    p = list(points)
    return not (segments_cross(p[0], p[1], p[2], p[3]) or segments_cross(p[1], p[2], p[3], p[0]))
