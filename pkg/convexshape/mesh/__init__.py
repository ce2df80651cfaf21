"""Simplicial meshes"""

from .const import *
from .primitive_kind import PrimitiveKind
from .simplicial_mesh import SimplicialMesh, orient_cells, signed_volumes
from .boundary_topology import BoundaryTopology, extract_boundary
from .vector_field import VectorFieldP1
from .quality import QualityReport, deformation_quality
from .refinement import uniform_refine
from .primitives import generate_primitive, reproject_to_circle
from .mesh_io import load_mesh, dump_mesh
from .deformation import apply_deformation
