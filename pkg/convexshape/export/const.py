"""Constants"""

FLOAT_FORMAT = ".17g"

VTK_HEADER = "# vtk DataFile Version 3.0"
VTK_CELL_TYPES = {2: 5, 3: 10}  # triangle, tetrahedron

SVG_NAMESPACE = "http://www.w3.org/2000/svg"
SVG_WIDTH = 800
SVG_MARGIN = 0.05
SVG_RAMP_LOW = (44, 123, 182)
SVG_RAMP_HIGH = (215, 25, 28)
SVG_EDGE_COLOR = "#404040"
SVG_BOUNDARY_COLOR = "#000000"

TRACE_FORMAT_VERSION = 1
SUMMARY_FILE = "summary.json"
FAILED_MARKER = "FAILED"
