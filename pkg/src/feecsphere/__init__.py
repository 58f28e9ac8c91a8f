"""Exact polynomial differential forms on R^(n+1), the simplex T^n and the sphere S^n.

The main entry points are re-exported here; see the submodules for the rest.
"""

from __future__ import annotations

from .exactpoly import DimensionError, DivisibilityError, ParityError, Polynomial
from .forms import (
    Form,
    PolyVectorField,
    bubble,
    conormal,
    even_part,
    exterior_derivative,
    hodge_euclid,
    interior_product,
    koszul_field,
    odd_part,
    radial_field,
    wedge,
)
from .chart import duality_map, duality_trace, hodge_sphere, phi_pullback, phi_pushdown, sphere_volume_sign
from .notation import CoordinateError, ParseError, format_form, parse_form
from .spaces import (
    QuotientContext,
    SpaceBasis,
    basis_P,
    basis_Pminus,
    basis_ring,
    basis_ring_minus,
    basis_ringring,
    basis_ringring_minus,
    equal_spans,
    is_zero_on,
    kernel_iU,
    membership,
    reduce_mod,
)
from .verify import (
    VerificationReport,
    check_tsiso,
    dim_table,
    gram_matrix,
    integrate_simplex,
    is_positive_definite,
    pairing,
)

__version__ = "0.1.0"

__all__ = [
    "CoordinateError",
    "DimensionError",
    "DivisibilityError",
    "Form",
    "ParityError",
    "ParseError",
    "PolyVectorField",
    "Polynomial",
    "QuotientContext",
    "SpaceBasis",
    "VerificationReport",
    "basis_P",
    "basis_Pminus",
    "basis_ring",
    "basis_ring_minus",
    "basis_ringring",
    "basis_ringring_minus",
    "bubble",
    "check_tsiso",
    "conormal",
    "dim_table",
    "duality_map",
    "duality_trace",
    "equal_spans",
    "even_part",
    "exterior_derivative",
    "format_form",
    "gram_matrix",
    "hodge_euclid",
    "hodge_sphere",
    "integrate_simplex",
    "interior_product",
    "is_positive_definite",
    "is_zero_on",
    "kernel_iU",
    "koszul_field",
    "membership",
    "odd_part",
    "pairing",
    "parse_form",
    "phi_pullback",
    "phi_pushdown",
    "radial_field",
    "reduce_mod",
    "sphere_volume_sign",
    "wedge",
]
