"""Walls-and-chambers combinatorics of the projectivized strata PH(a,-a).

Every connected component of PH(a,-a) is a modular curve X_1(N) with
N = a/d, d the rotation number.  This package enumerates the chambers and
walls of each component, builds their adjacency multigraphs and recovers
the genus and cusp count of X_1(N) from the resulting cell decomposition.
"""

from .arith import divisors, moebius, totient
from .chamber import (
    BALANCED,
    CYLINDER,
    TRIANGLE,
    UNBALANCED,
    Chamber,
    Wall,
    boundary_count,
    enumerate_chambers,
    enumerate_walls,
    rotation_number,
)
from .formulas import (
    ClosedFormCounts,
    CurveInvariants,
    cusp_count_formula,
    genus_formula,
    principal_chamber_counts,
    principal_walls,
    total_walls,
)
from .graph import ChamberGraph, are_isomorphic, chamber_graph, decorated_triangle_graph, triangle_graph
from .topology import (
    ComponentReport,
    CuspClass,
    InvariantMismatch,
    component_report,
    cross_validate,
    cusp_classes,
)
from .tripartition import (
    CyclicTripartition,
    Triplet,
    apply_S,
    apply_T,
    canonical_class,
    enumerate_classes,
    partner,
)

__version__ = "0.1.0"

__all__ = [
    "divisors",
    "moebius",
    "totient",
    "BALANCED",
    "CYLINDER",
    "TRIANGLE",
    "UNBALANCED",
    "Chamber",
    "Wall",
    "boundary_count",
    "enumerate_chambers",
    "enumerate_walls",
    "rotation_number",
    "ClosedFormCounts",
    "CurveInvariants",
    "cusp_count_formula",
    "genus_formula",
    "principal_chamber_counts",
    "principal_walls",
    "total_walls",
    "ChamberGraph",
    "are_isomorphic",
    "chamber_graph",
    "decorated_triangle_graph",
    "triangle_graph",
    "ComponentReport",
    "CuspClass",
    "InvariantMismatch",
    "component_report",
    "cross_validate",
    "cusp_classes",
    "CyclicTripartition",
    "Triplet",
    "apply_S",
    "apply_T",
    "canonical_class",
    "enumerate_classes",
    "partner",
]
