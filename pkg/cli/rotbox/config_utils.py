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

from blockchainetl_common.file_utils import smart_open

from rotbox.domain.sim_config import BOOL_FIELDS, INT_FIELDS, RANGE_FIELDS, SIM_CONFIG_FIELDS, STR_FIELDS
from rotbox.errors import ConfigError
from rotbox.utils import parse_range

TRUE_VALUES = ('true', 'yes', '1')
FALSE_VALUES = ('false', 'no', '0')


def parse_bool(text):
    lowered = text.lower()
    if lowered in TRUE_VALUES:
        return True
    if lowered in FALSE_VALUES:
        return False
    raise ValueError('Expected true or false, got {!r}'.format(text))


def parse_config_value(key, text):
    try:
        if key in RANGE_FIELDS:
            return parse_range(text)
        if key in INT_FIELDS:
            return int(text)
        if key in STR_FIELDS:
            return text
        if key in BOOL_FIELDS:
            return parse_bool(text)
        return float(text)
    except ValueError:
        raise ConfigError('Bad value for {}: {!r}'.format(key, text))


def parse_config_lines(lines, source='<config>'):
    """Flat ``key = value`` lines; '#' starts a comment."""
    values = {}
    for line_number, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError('{}:{}: expected key = value, got {!r}'.format(source, line_number, line))
        key, text = (part.strip() for part in line.split('=', 1))
        if key not in SIM_CONFIG_FIELDS:
            raise ConfigError('{}:{}: unknown key {}'.format(source, line_number, key))
        values[key] = parse_config_value(key, text.strip('"\''))
    return values


def load_config_file(path):
    if path is None:
        return {}
    with smart_open(path, 'r') as config_file:
        return parse_config_lines(config_file, path)
