"""Generalized frieze varieties of quivers under cluster automorphisms."""

from __future__ import annotations

from .catalog import CATALOG, by_name
from .errors import FriezeError
from .folding import FoldingGroup, check_admissible, fold, folded_coxeter_spec, lift_basis, restrict_basis
from .implicitize import ImplicitResult, closed_form_basis, conic_analysis, implicitize, smoothness_check
from .parametrize import ComponentParametrization, fit_component
from .pipeline import FriezeVarietyReport, Options, compute_frieze_variety, verify_report
from .polyring import GroebnerBasis, MonomialOrder, MultiPoly, groebner, is_groebner, parse_poly
from .quiver import Quiver, affine_type, delta_vector
from .recurrence import RecurrenceResult, min_char_poly
from .scalars import Quad, format_scalar, parse_scalar, quad
from .seeds import AutomorphismSpec, FriezeOrbit, PointSeed, coxeter_spec, orbit, validate_spec

__all__ = [
    "CATALOG",
    "AutomorphismSpec",
    "ComponentParametrization",
    "FoldingGroup",
    "FriezeError",
    "FriezeOrbit",
    "FriezeVarietyReport",
    "GroebnerBasis",
    "ImplicitResult",
    "MonomialOrder",
    "MultiPoly",
    "Options",
    "PointSeed",
    "Quad",
    "Quiver",
    "RecurrenceResult",
    "affine_type",
    "by_name",
    "check_admissible",
    "closed_form_basis",
    "compute_frieze_variety",
    "conic_analysis",
    "coxeter_spec",
    "delta_vector",
    "fit_component",
    "fold",
    "folded_coxeter_spec",
    "format_scalar",
    "groebner",
    "implicitize",
    "is_groebner",
    "lift_basis",
    "min_char_poly",
    "orbit",
    "parse_poly",
    "parse_scalar",
    "quad",
    "restrict_basis",
    "smoothness_check",
    "validate_spec",
    "verify_report",
]
