"""Executable chaos witnesses for the shift on the generalized Cantor space {0,1}^A."""

from .core_space import (
    VOID,
    WHOLE,
    ZERO,
    Coordinate,
    Cylinder,
    FiberWord,
    Point,
    canonicalize_point,
    cylinder_image,
    cylinder_intersect,
    cylinder_point,
    cylinder_preimage,
    cylinder_query,
    inclusion,
    membership,
    normalize_cylinder,
    orbit,
    point_eval,
    primitive_period,
    shift_point,
)
from .grammar import ParseError, parse_value
from .uniformity import UIndex, ball, index_join, index_leq, relates, separating_index

__version__ = "0.1.0"
