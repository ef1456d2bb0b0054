"""Degree growth of quantum invariants and candidate spanning surfaces
for pretzel and Montesinos knots, with an exact skein-theoretic oracle."""

from .degrees import (
    DegreeQuadratic,
    exceptional_scan,
    montesinos_corrections,
    montesinos_js_jx,
    pretzel_js_jx,
)
from .knots import MontesinosKnot, PretzelKnot, parse_knot_spec
from .qip import SeparableQuadratic, lattice_min, maximize_degree, varpi
from .surfaces import (
    CandidateSurface,
    boundary_slope,
    build_reference_surface,
    build_sstar_surface,
    euler_over_sheets,
    incompressibility_check,
    twist_number,
)
from .tl import colored_jones
from .verify import VerificationReport, predicted_min_degree, scan, verify

__version__ = "0.1.0"

__all__ = [
    "CandidateSurface",
    "DegreeQuadratic",
    "MontesinosKnot",
    "PretzelKnot",
    "SeparableQuadratic",
    "VerificationReport",
    "boundary_slope",
    "build_reference_surface",
    "build_sstar_surface",
    "colored_jones",
    "euler_over_sheets",
    "exceptional_scan",
    "incompressibility_check",
    "lattice_min",
    "maximize_degree",
    "montesinos_corrections",
    "montesinos_js_jx",
    "parse_knot_spec",
    "predicted_min_degree",
    "pretzel_js_jx",
    "scan",
    "twist_number",
    "varpi",
    "verify",
]
