from .double_description import h_to_v, v_to_h
from .exceptions import DimensionMismatchError, EmptyPolyhedronError, PolyhedronError
from .operations import (
    conic_hull,
    contains,
    intersect,
    is_empty,
    lineality_space,
    minkowski_sum,
    negate,
    recession_cone,
    remove_redundant,
    set_equal,
    strictly_contains,
)
from .projection import BaseProjectionBackend, ProjectionBackendFactory, project
from .simplex import LPOutcome, feasible_point, lp_optimize
from .types import HPolyhedron, LinearInequality, VPolyhedron
