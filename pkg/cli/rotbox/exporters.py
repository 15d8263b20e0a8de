"""
Item Exporters are used to export/serialize items into different formats.
"""

import csv
import io
import math

from blockchainetl_common.file_utils import get_file_handle
from blockchainetl_common.jobs.exporters.composite_item_exporter import CompositeItemExporter
import numpy as np

from rotbox.atomic_counter import AtomicCounter


def format_value(value):
    """Shortest round-trip text for floats; '' for missing values."""
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        return repr(value)
    return str(value)


class BaseItemExporter(object):

    def __init__(self, fields_to_export, encoding='utf-8'):
        self.fields_to_export = list(fields_to_export)
        self.encoding = encoding

    def export_item(self, item):
        raise NotImplementedError

    def start_exporting(self):
        pass

    def finish_exporting(self):
        pass

    def _get_serialized_fields(self, item):
        for field_name in self.fields_to_export:
            yield field_name, format_value(item.get(field_name))


# The header is written when exporting starts, so an export without items still yields a header-only file.
class CsvItemExporter(BaseItemExporter):

    def __init__(self, file, fields_to_export, encoding='utf-8'):
        super(CsvItemExporter, self).__init__(fields_to_export, encoding)
        self.stream = io.TextIOWrapper(file, encoding=self.encoding, newline='', write_through=True)
        self.csv_writer = csv.writer(self.stream, lineterminator='\r\n')

    def start_exporting(self):
        self.csv_writer.writerow(self.fields_to_export)

    def export_item(self, item):
        self.csv_writer.writerow([value for _, value in self._get_serialized_fields(item)])

    def finish_exporting(self):
        if self.stream is None:
            return
        self.stream.flush()
        self.stream.detach()
        self.stream = None


class CsvCompositeItemExporter(CompositeItemExporter):
    """Routes items by their 'type' to one CSV file per type.

    Headers go out when the files are opened. Item types mapped to no file are
    dropped; types missing from the mapping raise ValueError.
    """

    def __init__(self, filename_mapping, field_mapping):
        super(CsvCompositeItemExporter, self).__init__(filename_mapping, field_mapping)
        self.dropped_types = set(item_type for item_type, filename in filename_mapping.items() if filename is None)

    def open(self):
        for item_type, filename in self.filename_mapping.items():
            if filename is None:
                continue
            file = get_file_handle(filename, binary=True)
            exporter = CsvItemExporter(file, self.field_mapping[item_type])
            exporter.start_exporting()
            self.file_mapping[item_type] = file
            self.exporter_mapping[item_type] = exporter
            self.counter_mapping[item_type] = AtomicCounter()

    def export_item(self, item):
        if item.get('type') in self.dropped_types:
            return
        super(CsvCompositeItemExporter, self).export_item(item)

    def close(self):
        for exporter in self.exporter_mapping.values():
            exporter.finish_exporting()
        super(CsvCompositeItemExporter, self).close()
