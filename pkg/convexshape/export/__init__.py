"""Artifact writers and shape diagnostics"""

from .const import *
from .export_format import ExportFormat
from .atomic import atomic_write
from .vtk_writer import render_vtk
from .svg_writer import ramp_color, render_svg
from .diagnostics import ShapeDiagnostics, asymmetry, centroid, rotational_defect, shape_diagnostics
from .trace_writer import render_trace_csv, write_trace_csv
from .summary import LevelSummary, render_summary, write_summary
from .export_mesh import export_mesh
