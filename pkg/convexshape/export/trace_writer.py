import csv
import io
import math
from pathlib import Path
from typing import Union

from ..optimize import OptTrace
from .atomic import atomic_write
from .const import FLOAT_FORMAT


def _cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, float):
        return '' if math.isnan(value) else format(value, FLOAT_FORMAT)
    return str(value)


def render_trace_csv(trace: OptTrace) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(trace.columns)
    for row in trace.rows():
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def write_trace_csv(trace: OptTrace, path: Union[str, Path]):
    atomic_write(path, render_trace_csv(trace))
