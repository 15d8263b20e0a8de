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

"""DOTA annotation parsing.

Ground-truth lines are ``x1 y1 x2 y2 x3 y3 x4 y4 category difficulty``;
prediction lines append a confidence score. Header lines such as
``imagesource:GoogleEarth`` or ``gsd:0.146`` and blank lines are skipped.
"""

import logging
import math
import os
import re

from blockchainetl_common.file_utils import smart_open

from rotbox.domain.annotation import Annotation
from rotbox.errors import DataError, GeometryError, NotARectangle, ParseError
from rotbox.service.geom_core import EPS_GEOM, EPS_RECT, box_from_corners, is_convex_quad, is_simple_quad, signed_area

GT_TOKEN_COUNT = 10
PREDICTION_TOKEN_COUNT = 11
ANNOTATION_SUFFIX = '.txt'

TOKEN_PATTERN = re.compile(r'\S+')

logger = logging.getLogger('DotaParser')


def _is_header(tokens):
    return len(tokens) <= 2 and ':' in tokens[0]


class DotaParser(object):
    def __init__(self, with_scores=False, keep_quads=False, rect_tolerance=EPS_RECT):
        self.with_scores = with_scores
        self.keep_quads = keep_quads
        self.rect_tolerance = rect_tolerance
        self.rejected = 0

    @property
    def expected_tokens(self):
        return PREDICTION_TOKEN_COUNT if self.with_scores else GT_TOKEN_COUNT

    def parse(self, lines, image_id=None):
        annotations = []
        rejected_before = self.rejected
        for line_number, line in enumerate(lines, start=1):
            matches = list(TOKEN_PATTERN.finditer(line))
            if not matches:
                continue
            tokens = [match.group() for match in matches]
            if _is_header(tokens):
                continue
            annotation = self._parse_line(tokens, [m.start() + 1 for m in matches], line_number)
            if annotation is not None:
                annotation.image_id = image_id
                annotations.append(annotation)
        rejected = self.rejected - rejected_before
        if rejected:
            logger.warning('Rejected {} non-rectangular quadrilaterals{}. Use keep quads to pass them through.'.format(
                rejected, '' if image_id is None else ' in {}'.format(image_id)))
        return annotations

    def _parse_line(self, tokens, columns, line_number):
        if len(tokens) != self.expected_tokens:
            raise ParseError('expected {} fields, got {}'.format(self.expected_tokens, len(tokens)),
                             line=line_number, column=columns[0])
        coordinates = [self._number(tokens[i], line_number, columns[i]) for i in range(8)]
        quad = [(coordinates[i], coordinates[i + 1]) for i in range(0, 8, 2)]

        annotation = Annotation()
        annotation.line = line_number
        annotation.quad = quad
        annotation.category = tokens[8]
        try:
            annotation.difficulty = int(tokens[9])
        except ValueError:
            raise ParseError('difficulty {!r} is not an integer'.format(tokens[9]), line=line_number, column=columns[9])
        if self.with_scores:
            annotation.score = self._number(tokens[10], line_number, columns[10])

        if abs(signed_area(quad)) <= EPS_GEOM:
            raise GeometryError('line {}: degenerate quadrilateral {}'.format(line_number, quad))
        if not is_simple_quad(quad):
            raise GeometryError('line {}: self-intersecting quadrilateral {}'.format(line_number, quad))
        try:
            annotation.box = box_from_corners(quad, self.rect_tolerance)
        except NotARectangle:
            if not self.keep_quads:
                self.rejected += 1
                return None
            if not is_convex_quad(quad):
                raise GeometryError('line {}: non-convex quadrilateral {}'.format(line_number, quad))
        return annotation

    @staticmethod
    def _number(token, line_number, column):
        try:
            value = float(token)
        except ValueError:
            raise ParseError('{!r} is not a number'.format(token), line=line_number, column=column)
        if not math.isfinite(value):
            raise ParseError('{!r} is not a finite number'.format(token), line=line_number, column=column)
        return value


def parse_dota(lines, with_scores=False, keep_quads=False, rect_tolerance=EPS_RECT, image_id=None):
    return DotaParser(with_scores, keep_quads, rect_tolerance).parse(lines, image_id)


def annotation_files(path):
    """(image_id, file) pairs: a single file, or every .txt file of a directory."""
    if os.path.isdir(path):
        names = sorted(name for name in os.listdir(path) if name.endswith(ANNOTATION_SUFFIX))
        return [(name[:-len(ANNOTATION_SUFFIX)], os.path.join(path, name)) for name in names]
    return [(os.path.splitext(os.path.basename(path))[0], path)]


def read_annotations(path, with_scores=False, keep_quads=False, rect_tolerance=EPS_RECT, image_id=None):
    """Annotations of a file or directory; ``image_id`` overrides the ids taken from file names."""
    parser = DotaParser(with_scores, keep_quads, rect_tolerance)
    annotations = []
    for file_image_id, filename in annotation_files(path):
        with smart_open(filename, 'r') as annotation_file:
            try:
                annotations.extend(parser.parse(annotation_file, file_image_id if image_id is None else image_id))
            except DataError as e:
                e.args = ('{}: {}'.format(filename, e.args[0]),) + e.args[1:]
                raise
    return annotations
