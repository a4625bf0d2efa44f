"""Surfaces in near-horizontal position, from curve data and numberings."""

from .builders import (annulus_core, closed_surface, concentric, empty_disk, grid, lens_sphere, quadrant_disk,
                       torus_nonseparating_loop)
from .complex import (CurveComplex, Edge, EdgeKind, EdgeRef, FreeCircle, Region, Vertex, VertexKind, dual_adjacency,
                      validate_structure)
from .document import ParseError, format_numbering, format_numberings, parse_complex, parse_numbering, serialize_complex
from .numbering import (Numbering, NumberingDomainError, SearchLimitError, brute_force_numberings, check_parity,
                        enumerate_numberings, twist_vertices, validate_numbering)
from .reconstruction import (BoundaryLabel, BoundaryTrace, InternalConsistencyError, PreconditionError, SheetCell,
                             SheetComplex, SurfaceInvariants, check_surface, euler_crosscheck, invariants, reconstruct,
                             trace_boundary)
from .render import RenderUnsupported, render_svg
from .violation import Condition, Violation

__all__ = [
    "BoundaryLabel", "BoundaryTrace", "Condition", "CurveComplex", "Edge", "EdgeKind", "EdgeRef", "FreeCircle",
    "InternalConsistencyError", "Numbering", "NumberingDomainError", "ParseError", "PreconditionError", "Region",
    "RenderUnsupported", "SearchLimitError", "SheetCell", "SheetComplex", "SurfaceInvariants", "Vertex", "VertexKind",
    "Violation", "annulus_core", "brute_force_numberings", "check_parity", "check_surface", "closed_surface",
    "concentric", "dual_adjacency", "empty_disk", "enumerate_numberings", "euler_crosscheck", "format_numbering",
    "format_numberings", "grid", "invariants", "lens_sphere", "parse_complex", "parse_numbering", "quadrant_disk",
    "reconstruct", "render_svg", "serialize_complex", "torus_nonseparating_loop", "trace_boundary",
    "twist_vertices", "validate_numbering", "validate_structure",
]
