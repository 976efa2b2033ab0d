"""Plane-graph combinatorics toolkit.

Rotation-system plane multigraphs, the classical constructions (dual,
radial, truncation, leapfrog, facial-2-factor contraction), certificate
types and exact solvers (hamiltonian cycles, A-trails, quasi spanning
trees of faces, spanning tree parity), certificate converters, and
executable gadget reductions, all certified at desk scale by exhaustive
oracles.
"""

from planecert.plane import (
    CheckResult,
    FacialTwoFactor,
    InputError,
    MultiGraph,
    PlaneGraph,
    StructureError,
    connectivity,
    is_bipartite,
    same_graph,
    trace_faces,
    verify_facial_two_factor,
)

__all__ = [
    "CheckResult",
    "FacialTwoFactor",
    "InputError",
    "MultiGraph",
    "PlaneGraph",
    "StructureError",
    "connectivity",
    "is_bipartite",
    "same_graph",
    "trace_faces",
    "verify_facial_two_factor",
]
