"""Milnor numbers of one-dimensional holomorphic foliations on complex projective space.

Exact arithmetic over the Gaussian rationals handles isolated points, the
Baum-Bott total and the excess formula; numerical perturbation tracking splits
the remaining total between several singular curves.
"""

__version__ = "0.1.0"

from .poly import Polynomial, Scalar, parse_poly
from .ideal import (Ideal, buchberger, eliminate, intersect, krull_dimension, local_multiplicity,
                    multiplicity_on_subvariety, quotient_dimension, saturate, saturate_ideal)
from .foliation import ComponentSpec, Foliation, check_cocycle, degree_of, verify_component
from .chow import (ChowClass, SegreClass, baum_bott_total, chern_twisted_tangent, excess_contribution,
                   segre_complete_intersection, vainsencher_sum)
from .milnor import (MilnorReport, NotExhaustive, isolated_pieces, isolated_total, milnor_at_point,
                     milnor_by_conservation, milnor_curve_excess)
from .zerodim import solve_zero_dimensional
from .continuation import build_perturbation, run_continuation

__all__ = [
    "Polynomial", "Scalar", "parse_poly",
    "Ideal", "buchberger", "eliminate", "intersect", "krull_dimension", "local_multiplicity",
    "multiplicity_on_subvariety", "quotient_dimension", "saturate", "saturate_ideal",
    "ComponentSpec", "Foliation", "check_cocycle", "degree_of", "verify_component",
    "ChowClass", "SegreClass", "baum_bott_total", "chern_twisted_tangent", "excess_contribution",
    "segre_complete_intersection", "vainsencher_sum",
    "MilnorReport", "NotExhaustive", "isolated_pieces", "isolated_total", "milnor_at_point",
    "milnor_by_conservation", "milnor_curve_excess",
    "solve_zero_dimensional", "build_perturbation", "run_continuation",
]
