"""Precubical sets, guarded reductions, and their bipartite-graph oracle."""

from .core import (
    CellRef,
    Complex,
    CubeMorphismImage,
    Violation,
    are_isomorphic,
    cube_morphism,
    euler_characteristic,
    extremal,
    is_regular,
    is_subcomplex,
    is_valid,
    maximal_vertices,
    minimal_vertices,
    opposite,
    standard_cube,
    transpose,
    validate,
)
from .fbg import (
    EdgePath,
    FbgTable,
    dihomotopy_classes,
    enumerate_dipaths,
    fbg_equal,
    fundamental_bipartite_graph,
    one_skeleton_is_acyclic,
)
from .modelio import (
    export_dot,
    grid_with_holes,
    named_fixture,
    parse,
    serialize,
)
from .reductions import (
    ReductionCertificate,
    Step,
    auto_reduce,
    edge_collapse,
    square_one_free,
    square_two_free,
)

__all__ = [
    "CellRef",
    "Complex",
    "CubeMorphismImage",
    "EdgePath",
    "FbgTable",
    "ReductionCertificate",
    "Step",
    "Violation",
    "are_isomorphic",
    "auto_reduce",
    "cube_morphism",
    "dihomotopy_classes",
    "edge_collapse",
    "enumerate_dipaths",
    "euler_characteristic",
    "export_dot",
    "extremal",
    "fbg_equal",
    "fundamental_bipartite_graph",
    "grid_with_holes",
    "is_regular",
    "is_subcomplex",
    "is_valid",
    "maximal_vertices",
    "minimal_vertices",
    "named_fixture",
    "one_skeleton_is_acyclic",
    "opposite",
    "parse",
    "serialize",
    "square_one_free",
    "square_two_free",
    "standard_cube",
    "transpose",
    "validate",
]
