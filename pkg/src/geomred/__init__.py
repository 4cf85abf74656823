"""Finite-geometry toolkit: field reduction, reguli, chi spaces and the phi isomorphism Y(s,t,q) -> X(s,t,q)."""

from .field import FieldCtx, embed, field_of_order, make_field
from .projective import BudgetExceeded, Subspace, dual, meet, span
from .reduction import ReductionMap
from .subgeometry import Subgeometry, canonical_subgeometry
from .regulus import Regulus, is_regulus, regulus_from_subline, transversal_span
from .chi import chi_algebraic, chi_inductive, verify_chi
from .geometries import build_X, build_Y, build_Tstar_D, geometry_stats
from .isomorphism import PhiContext, make_context, phi, phi_point, verify_isomorphism

__version__ = "0.1.0"
