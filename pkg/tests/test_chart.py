from __future__ import annotations

import pytest

from feecsphere.chart import (
    check_orientation_sign,
    divide_by_bubble_on_sphere,
    duality_map,
    duality_trace,
    hodge_sphere,
    inverse_sign,
    phi_pullback,
    phi_pushdown,
    sphere_volume_sign,
)
from feecsphere.exactpoly import DimensionError, DivisibilityError, ParityError
from feecsphere.forms import Form, bubble, hodge_euclid, conormal
from feecsphere.spaces import QuotientContext, is_zero_on, reduce_mod

from conftest import form

S2 = QuotientContext.sphere(2)
T2 = QuotientContext.simplex(2)


def test_pullback_examples():
    assert phi_pullback(form("y*dy")) == form("2*v^3*dv")
    assert phi_pullback(form("x*dy - y*dx")) == form("2*u^2*v*dv - 2*u*v^2*du")
    assert phi_pullback(form("1")) == form("1")


def test_pushdown_examples():
    assert phi_pushdown(form("2*v^3*dv")) == form("y*dy")
    assert phi_pushdown(form("2*u^2*v^4*w*dw - 2*u*v^4*w^2*du")) == form("x*y^2*dz - y^2*z*dx")
    assert phi_pushdown(Form.zero(3, 1)).is_zero()


def test_pushdown_rejects_odd_forms():
    with pytest.raises(ParityError):
        phi_pushdown(form("u*dv"))


def test_hodge_sphere_examples():
    assert hodge_sphere(form("2*v^3*dv")) == form("2*u*v^3*dw - 2*v^3*w*du")
    star = hodge_sphere(form("2*u^2*v*dv - 2*u*v^2*du"))
    assert star == form("(2*u^3*v + 2*u*v^3)*dw - 2*u^2*v*w*du - 2*u*v^2*w*dv")
    assert reduce_mod(star, S2) == form("2*u*v*dw")
    assert hodge_sphere(form("1")) == hodge_euclid(conormal(3))


def test_hodge_sphere_top_degree_raises():
    with pytest.raises(DimensionError):
        hodge_sphere(form("du^dv^dw"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sphere_star_squares_to_sign(n):
    from feecsphere.spaces import monomial_forms

    S = QuotientContext.sphere(n)
    for k in range(n + 1):
        for a in monomial_forms(n + 1, 1, k)[:6]:
            twice = hodge_sphere(reduce_mod(hodge_sphere(a), S))
            assert is_zero_on(twice - a.scale(inverse_sign(n, k)), S)


def test_duality_examples():
    assert duality_map(form("y*dy")) == form("x*y^2*dz - y^2*z*dx")
    assert duality_map(form("x*dy - y*dx")) == form("x*y*dz")
    assert duality_map(Form.zero(3, 1)).is_zero()


def test_duality_trace_intermediates():
    tr = duality_trace(form("y*dy"))
    assert tr.alpha == form("2*v^3*dv")
    assert tr.star == form("2*u*v^3*dw - 2*v^3*w*du")
    assert tr.beta == form("2*u^2*v^4*w*dw - 2*u*v^4*w^2*du")


def test_beta_is_bubble_times_star():
    beta = phi_pullback(form("x*y^2*dz - y^2*z*dx"))
    assert beta == form("2*u^2*v^4*w*dw - 2*u*v^4*w^2*du")
    assert beta == hodge_sphere(form("2*v^3*dv")).times(bubble(3))


@pytest.mark.parametrize("text", ["y*dy", "x*dy - y*dx", "x^2*dz", "1", "x*dy^dz"])
def test_inverse_round_trip(text):
    a = form(text)
    back = duality_map(duality_map(a), inverse=True)
    assert is_zero_on(back - a, T2)


def test_divide_by_bubble():
    beta = form("u*v*w*du")
    assert divide_by_bubble_on_sphere(beta) == form("du")
    with pytest.raises(DivisibilityError):
        divide_by_bubble_on_sphere(form("du"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orientation_sign(n):
    assert check_orientation_sign(n) == sphere_volume_sign(n) == (-1) ** n
