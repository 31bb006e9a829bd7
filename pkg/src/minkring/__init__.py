"""Exact Minkowski rings of polytope families.

Indicator-function calculus over four families of convex polytopes (points
and 1-D intervals, integer boxes, triangular-grid polygons, and their
Cartesian products), Laurent-polynomial presentations of the resulting
rings with a semantic kernel oracle, the hexagon normal forms and tilings
of the grid ring, face-cover identities, and tensor products of face rings.
"""

from .scalars import Scalar
from .geometry import (Box, GridSet, Interval, ProductPolytope, box, box_point,
                       decompose_cells, faces, grid_point_set, grid_set,
                       interval, line_point, minkowski_sum, negate, product,
                       scale, translate, unit_triangle, vertices)
from .simplefn import (SimpleFunction, combine, euler_char, evaluate_at,
                       indicator, is_zero, multiply, multiply_by_indicator)
from .laurent import LaurentPoly, univariate_ideal_member
from .presentations import (Presentation, PrincipalShape, box_ring,
                            classify_principal, coxeter_ring, interval_ring,
                            minimality_witness, point_ring)
from .rewriting import (NormalFormParams, edge_tiling, first_normal_form,
                        second_normal_form, triangle_tiling, verify_strip)
from .identities import (CoverSpec, cover, covers_relation, covers_vertices,
                         id_expand, id_holds, minimal_antichains)
from .products import ProductPresentation, product_presentation, psi_split
from .cli import parse_poly, parse_scalar

__all__ = [name for name in dir() if not name.startswith("_")]
