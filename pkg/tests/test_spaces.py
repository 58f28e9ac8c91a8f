from __future__ import annotations

import pytest

from feecsphere.forms import Form, bubble, conormal
from feecsphere.spaces import (
    QuotientContext,
    SpaceBasis,
    basis_P,
    basis_Pminus,
    basis_Pminus_afw,
    basis_ring,
    basis_ring_minus,
    basis_ringring,
    basis_ringring_direct,
    basis_ringring_minus,
    build_basis,
    equal_spans,
    is_zero_on,
    kernel_iU,
    membership,
    oracle_audit,
    reduce_mod,
    span_contains,
    sphere_volume,
    trace_to_face,
)

from conftest import form

A1 = QuotientContext.ambient(1)
S1 = QuotientContext.sphere(1)
S2 = QuotientContext.sphere(2)
T1 = QuotientContext.simplex(1)
T2 = QuotientContext.simplex(2)


def test_reduce_on_circle():
    assert reduce_mod(form("v*dv", 1), S1) == form("-u*du", 1)


def test_reduce_on_sphere_example():
    star = form("(2*u^3*v + 2*u*v^3)*dw - 2*u^2*v*w*du - 2*u*v^2*w*dv")
    assert reduce_mod(star, S2) == form("2*u*v*dw")


def test_reduce_keeps_normal_forms():
    star = form("2*u*v^3*dw - 2*v^3*w*du")
    assert reduce_mod(star, S2) == star


def test_reduce_simplex_relation():
    assert reduce_mod(form("x1 + x2 + x3 - 1"), T2).is_zero()
    assert reduce_mod(form("dx + dy + dz"), T2).is_zero()


def test_reduce_ambient_is_identity():
    f = form("u^2*dv")
    assert reduce_mod(f, QuotientContext.ambient(2)) == f


@pytest.mark.parametrize("ctx", [S1, S2, T1, T2, QuotientContext.face(2, 0), QuotientContext.face(2, 2)])
def test_reduce_idempotent_and_equivalent(ctx):
    import random

    from feecsphere.verify import random_form

    rng = random.Random(5)
    for _ in range(10):
        k = rng.randint(0, ctx.manifold_dim)
        a = random_form(ctx.ambient_dim, k, rng)
        r = reduce_mod(a, ctx)
        assert reduce_mod(r, ctx) == r
        assert is_zero_on(r - a, ctx)


def test_is_zero_on_examples():
    assert is_zero_on(conormal(3), S2)
    assert is_zero_on(form("u1^2 + u2^2 + u3^2 - 1"), S2)
    assert not is_zero_on(form("du1"), S2)


def test_is_zero_on_sums_of_ideal_elements():
    # multiples of nu and of the sphere relation, with polynomial factors
    f = form("(u^2 + v^2 + w^2 - 1)*u*dv") + form("w^3*(u*du + v*dv + w*dw)")
    assert is_zero_on(f, S2)
    assert not is_zero_on(f + form("u*dv - v*du"), S2)


def test_basis_P_examples():
    b = basis_P(1, 0, 1, A1)
    assert b.dim == 2 and equal_spans(b, SpaceBasis(A1, 1, 0, 1, "x", (form("du1", 1), form("du2", 1))))
    assert basis_P(2, 1, 1, T2).dim == 6
    b = basis_P(2, 1, 0, T2)
    assert b.dim == 3
    assert list(b) == [form("1"), form("x"), form("y")]


def test_basis_Pminus_examples():
    b = basis_Pminus(1, 1, 1, A1)
    assert b.dim == 1
    assert membership(form("u*dv - v*du", 1), b) is not None
    assert basis_Pminus(2, 1, 1, T2).dim == 3
    assert basis_Pminus(2, 1, 3, QuotientContext.ambient(2)).dim == 0


@pytest.mark.parametrize("n,r,k", [(2, 1, 1), (1, 2, 0), (2, 1, 0), (3, 2, 2)])
def test_pminus_afw_equivalence(n, r, k):
    T = QuotientContext.simplex(n)
    assert equal_spans(basis_Pminus(n, r, k, T), basis_Pminus_afw(n, r, k, T))


def test_ring_examples():
    assert membership(form("x*y*dz"), basis_ring(2, 2, 1)) is not None
    assert membership(form("x*y^2*dz - y^2*z*dx"), basis_ring_minus(2, 3, 1)) is not None
    assert basis_ring(1, 1, 0).dim == 0
    assert basis_ring(1, 2, 0).dim == 1


def test_ring_members_have_zero_trace():
    for b in basis_ring_minus(2, 3, 1):
        for i in range(3):
            assert is_zero_on(trace_to_face(b, i), QuotientContext.face(2, i))


def test_trace_examples():
    assert trace_to_face(form("y*dy"), 1).is_zero()
    for i in range(3):
        assert trace_to_face(form("x*y*dz"), i).is_zero()
    assert trace_to_face(form("x*dy"), 2) == form("(1 - y)*dy")


def test_ringring_examples():
    b = basis_ringring(1, 1, 1, S1)
    assert membership(form("v*dv", 1), b) is not None
    assert membership(form("v*dv", 1), basis_ringring(1, 1, 1, A1)) is None
    assert membership(form("v*w*dv^dw"), basis_ringring(2, 2, 2, S2)) is not None
    assert membership(form("du1", 1), b) is None


def test_ringring_sphere_volume_term():
    target = sphere_volume(3).times(bubble(3))
    assert span_contains(basis_ringring(2, 2, 2, S2), [target])


@pytest.mark.parametrize("n,s,k", [(1, 1, 1), (1, 3, 0), (2, 2, 2), (2, 4, 1), (2, 3, 0)])
def test_ringring_characterization_matches_definition(n, s, k):
    S = QuotientContext.sphere(n)
    assert equal_spans(basis_ringring(n, s, k, S), basis_ringring_direct(n, s, k))
    assert equal_spans(basis_ringring_minus(n, s, k, S), basis_ringring_direct(n, s, k, minus=True))


def test_membership_of_zero():
    coords = membership(Form.zero(3, 1), basis_P(2, 1, 1, T2))
    assert coords == [0] * 6


def test_kernel_examples():
    K = kernel_iU(1, 1, 1)
    assert K.dim == 1 and membership(form("u*dv - v*du", 1), K) is not None
    assert kernel_iU(2, 3, 0).dim == basis_P(2, 3, 0, QuotientContext.ambient(2)).dim
    assert kernel_iU(2, 0, 1).dim == 0


def test_equal_spans_examples():
    A = basis_P(2, 1, 1, T2)
    assert not equal_spans(A, basis_Pminus(2, 1, 1, T2))
    assert equal_spans(A, A)


def test_build_basis_dispatch():
    assert build_basis("ring_Pminus", 2, 3, 1, T2).dim == 6
    assert build_basis("P_even", 2, 3, 1, S2).dim == 6
    with pytest.raises(ValueError):
        build_basis("ring_P", 2, 2, 1, S2)


def test_oracle_audit_records_verdicts():
    with oracle_audit() as audit:
        is_zero_on(conormal(3), S2)
        is_zero_on(form("du"), S2)
    assert len(audit) == 2 and not audit.disagreements


def test_face_context():
    F = QuotientContext.face(2, 0)
    assert F.manifold_dim == 1
    assert is_zero_on(form("x*dy"), F)
    assert is_zero_on(form("dy + dz"), F)
