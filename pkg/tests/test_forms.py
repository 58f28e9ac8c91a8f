from __future__ import annotations

from fractions import Fraction

import pytest

from feecsphere.exactpoly import DimensionError, Polynomial
from feecsphere.forms import (
    Form,
    bubble,
    conormal,
    even_part,
    exterior_derivative,
    hodge_euclid,
    interior_product,
    koszul_field,
    lie_derivative_radial,
    odd_part,
    radial_field,
    reflect,
    standard_fields,
    standard_forms,
    wedge,
)

from conftest import form, poly


def test_wedge_examples():
    assert wedge(form("dx1"), form("dx1")).is_zero()
    assert wedge(form("dx2"), form("dx1")) == -form("dx1^dx2")
    assert wedge(form("x1*dx1"), form("x2*dx2")) == form("x1*x2*dx1^dx2")


def test_wedge_beyond_top_degree_is_zero():
    top = form("dx^dy^dz")
    assert wedge(top, form("dx")).is_zero()


def test_exterior_derivative_examples():
    assert exterior_derivative(form("x1")) == form("dx1")
    assert exterior_derivative(form("x1*dx2")) == form("dx1^dx2")
    assert exterior_derivative(form("u1*u2")) == form("u2*du1 + u1*du2")


def test_interior_product_examples():
    X = radial_field(3)
    assert interior_product(X, form("dx1^dx2")) == form("x1*dx2 - x2*dx1")
    assert interior_product(X, form("du1")) == form("u1")
    for n in (1, 2, 3):
        dim = n + 1
        r2 = sum((Polynomial.variable(dim, i) ** 2 for i in range(dim)), Polynomial.zero(dim))
        assert interior_product(radial_field(dim), conormal(dim)) == Form.scalar(r2)


def test_hodge_euclid_examples():
    assert hodge_euclid(form("du^dv")) == form("dw")
    assert hodge_euclid(form("1")) == form("du^dv^dw")
    assert hodge_euclid(form("dw^dv")) == -form("du")


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_hodge_convention_and_double_star(dim):
    from feecsphere.forms import index_sets, volume

    for k in range(dim + 1):
        for I in index_sets(dim, k):
            e = Form.differential(dim, *I)
            assert wedge(e, hodge_euclid(e)) == volume(dim)
            sign = -1 if (k * (dim - k)) % 2 else 1
            assert hodge_euclid(hodge_euclid(e)) == e.scale(sign)


def test_reflect_examples():
    assert reflect(0, form("u1*du2")) == -form("u1*du2")
    assert reflect(0, form("u1*du1")) == form("u1*du1")
    assert reflect(1, form("du1^du2")) == -form("du1^du2")


def test_parity_projector_examples():
    assert even_part(form("u1*du1")) == form("u1*du1")
    assert odd_part(form("u1*du1")).is_zero()
    mixed = form("u1^2*du2", 1)
    assert even_part(mixed).is_zero() and odd_part(mixed).is_zero()


def test_lie_derivative_examples():
    assert lie_derivative_radial(form("u1")) == form("u1")
    assert lie_derivative_radial(form("du1")) == form("du1")
    assert lie_derivative_radial(form("u1*du2")) == form("2*u1*du2")


def test_standard_objects():
    assert conormal(3) == form("u1*du1 + u2*du2 + u3*du3")
    assert bubble(3) == poly("u1*u2*u3")
    V = koszul_field(3)
    t = poly("x1 + x2 + x3")
    for i, c in enumerate(V.components):
        assert c == Polynomial.variable(3, i) - t.scale(Fraction(1, 3))
    fields = standard_fields(2)
    assert set(fields) == {"X", "U", "grad_t", "V_kappa"}
    assert set(standard_forms(2)) == {"nu", "bubble", "vol"}


def test_adding_different_degrees_raises():
    with pytest.raises(DimensionError):
        form("dx") + form("dx^dy")


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionError):
        wedge(form("dx1", 1), form("dx1", 2))
