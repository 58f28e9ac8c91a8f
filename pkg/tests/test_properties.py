from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from feecsphere import oracle
from feecsphere.chart import hodge_sphere, phi_pullback
from feecsphere.exactpoly import Polynomial, monomials_up_to, radius_squared_power
from feecsphere.forms import (
    Form,
    conormal,
    even_part,
    exterior_derivative,
    hodge_euclid,
    index_sets,
    interior_product,
    lie_derivative_radial,
    odd_part,
    radial_field,
    reflection_average,
    wedge,
)
from feecsphere.linalg import nullspace, rank
from feecsphere.notation import format_form, form_from_json, form_to_json, parse_form
from feecsphere.spaces import (
    QuotientContext,
    basis_P,
    basis_Pminus,
    basis_ring,
    basis_ring_minus,
    form_vector,
    is_zero_on,
    monomial_forms,
    reduce_mod,
    span_contains,
    tangential_vector,
)

settings.register_profile("feec", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("feec")

coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def polys(nvars: int, max_degree: int = 3):
    monos = list(monomials_up_to(nvars, max_degree))
    return st.dictionaries(st.sampled_from(monos), coeffs, max_size=4).map(lambda d: Polynomial(nvars, d))


@st.composite
def forms(draw, dim: int, k: int | None = None, max_degree: int = 3):
    if k is None:
        k = draw(st.integers(0, dim))
    idx = index_sets(dim, k)
    coeffs_ = draw(st.dictionaries(st.sampled_from(idx), polys(dim, max_degree), max_size=3))
    return Form(dim, k, coeffs_)


dims = st.sampled_from([2, 3, 4])


@given(st.data())
def test_polynomial_ring_axioms(data):
    nv = data.draw(dims)
    p, q, r = (data.draw(polys(nv)) for _ in range(3))
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(st.data())
def test_d_squared_is_zero(data):
    dim = data.draw(dims)
    a = data.draw(forms(dim))
    if a.degree + 2 <= dim:
        assert exterior_derivative(exterior_derivative(a)).is_zero()


@given(st.data())
def test_leibniz_rule(data):
    dim = data.draw(dims)
    a = data.draw(forms(dim))
    b = data.draw(forms(dim, data.draw(st.integers(0, dim - a.degree))))
    if a.degree + b.degree + 1 > dim:
        return
    lhs = exterior_derivative(wedge(a, b))
    sign = -1 if a.degree % 2 else 1
    rhs = wedge(exterior_derivative(a), b) + wedge(a, exterior_derivative(b)).scale(sign)
    assert lhs == rhs


@given(st.data())
def test_double_hodge_sign(data):
    dim = data.draw(dims)
    a = data.draw(forms(dim))
    k = a.degree
    assert hodge_euclid(hodge_euclid(a)) == a.scale(-1 if (k * (dim - k)) % 2 else 1)


@given(st.data())
def test_pullback_is_dga_homomorphism(data):
    dim = data.draw(dims)
    a = data.draw(forms(dim, max_degree=2))
    b = data.draw(forms(dim, data.draw(st.integers(0, dim - a.degree)), max_degree=2))
    assert phi_pullback(wedge(a, b)) == wedge(phi_pullback(a), phi_pullback(b))
    if a.degree < dim:
        assert phi_pullback(exterior_derivative(a)) == exterior_derivative(phi_pullback(a))


@given(st.data())
def test_pullback_intertwines_radial_fields(data):
    dim = data.draw(dims)
    a = data.draw(forms(dim, data.draw(st.integers(1, dim)), max_degree=2))
    lhs = phi_pullback(interior_product(radial_field(dim), a))
    rhs = interior_product(radial_field(dim), phi_pullback(a)).scale(Fraction(1, 2))
    assert lhs == rhs


@given(st.data())
def test_parity_projectors(data):
    dim = data.draw(dims)
    a = data.draw(forms(dim))
    assert even_part(a) == reflection_average(a)
    assert odd_part(a) == reflection_average(a, signed=True)
    assert even_part(even_part(a)) == even_part(a)
    assert even_part(odd_part(a)).is_zero()


@given(st.data())
def test_cartan_on_homogeneous_parts(data):
    dim = data.draw(dims)
    j = data.draw(st.integers(0, 3))
    k = data.draw(st.integers(0, dim))
    monos = [e for e in monomials_up_to(dim, j) if sum(e) == j]
    terms = data.draw(st.lists(st.tuples(st.sampled_from(monos), st.sampled_from(index_sets(dim, k)), coeffs), max_size=3))
    a = Form.zero(dim, k)
    for e, I, c in terms:
        a = a + Form.monomial(e, I, c)
    assert lie_derivative_radial(a) == a.scale(j + k)


CONTEXTS = [QuotientContext.sphere(1), QuotientContext.sphere(2), QuotientContext.simplex(2), QuotientContext.face(2, 1), QuotientContext.sphere(3)]


@given(st.data())
def test_reduce_is_idempotent_normal_form(data):
    ctx = data.draw(st.sampled_from(CONTEXTS))
    a = data.draw(forms(ctx.ambient_dim, data.draw(st.integers(0, ctx.manifold_dim)), max_degree=3))
    r = reduce_mod(a, ctx)
    assert reduce_mod(r, ctx) == r
    assert is_zero_on(a - r, ctx)


def _ideal_element(dim, k, data, ctx):
    rel = ctx.scalar_relation
    out = Form.zero(dim, k)
    g = data.draw(forms(dim, k, max_degree=2))
    out = out + g.times(rel)
    if k >= 1:
        h = data.draw(forms(dim, k - 1, max_degree=2))
        out = out + wedge(ctx.one_form_relation, h)
    return out


@given(st.data())
def test_zero_test_agrees_with_oracle(data):
    ctx = data.draw(st.sampled_from(CONTEXTS))
    dim = ctx.ambient_dim
    k = data.draw(st.integers(0, ctx.manifold_dim))
    a = data.draw(forms(dim, k, max_degree=2))
    kind = "sphere" if ctx.kind == "sphere" else "simplex"
    active = ctx.active if ctx.is_face else None
    if ctx.kind == "sphere" or not ctx.is_face:
        z = _ideal_element(dim, k, data, ctx)
        assert is_zero_on(z, ctx)
        assert oracle.is_zero_pointwise(z, kind, active)
        assert is_zero_on(a + z, ctx) == is_zero_on(a, ctx)
    assert is_zero_on(a, ctx) == oracle.is_zero_pointwise(a, kind, active)


@given(st.data())
def test_reduction_commutes_with_sum(data):
    ctx = data.draw(st.sampled_from(CONTEXTS))
    k = data.draw(st.integers(0, ctx.manifold_dim))
    a = data.draw(forms(ctx.ambient_dim, k, max_degree=2))
    b = data.draw(forms(ctx.ambient_dim, k, max_degree=2))
    assert reduce_mod(a + b, ctx) == reduce_mod(a, ctx) + reduce_mod(b, ctx)


@given(st.data())
def test_parse_format_round_trip(data):
    dim = data.draw(st.sampled_from([2, 3, 4]))
    a = data.draw(forms(dim))
    for coords in ("x", "u"):
        back = parse_form(format_form(a, coords), dim - 1)
        if a.is_zero():
            # "0" carries no form degree
            assert back.is_zero()
        else:
            assert back == a
    assert form_from_json(form_to_json(a), dim, a.degree) == a


@given(st.data())
def test_sphere_star_on_tangential_forms_matches_frame(data):
    from feecsphere.verify import frame_hodge_values

    n = data.draw(st.sampled_from([1, 2]))
    k = data.draw(st.integers(0, n))
    a = data.draw(forms(n + 1, k, max_degree=2))
    star = hodge_sphere(a)
    u = oracle.sphere_points(n, 1, seed=data.draw(st.integers(0, 10**6)))[0]
    if u[-1] == 1:
        return
    frame = oracle.orthonormal_frame(u)
    for J, val in frame_hodge_values(a, u).items():
        assert oracle.evaluate(star, u, [frame[j] for j in J]) == val


@pytest.mark.parametrize("n", [1, 2, 3])
def test_space_nesting(n):
    T = QuotientContext.simplex(n)
    for r in range(1, 3):
        for k in range(n + 1):
            P = basis_P(n, r, k, T)
            Pm = basis_Pminus(n, r, k, T)
            assert span_contains(P, Pm.representatives)
            assert span_contains(basis_Pminus(n, r + 1, k, T), P.representatives)
            assert span_contains(P, basis_ring(n, r, k).representatives)
            assert span_contains(Pm, basis_ring_minus(n, r, k).representatives)


@pytest.mark.parametrize("n,k,D", [(1, 0, 4), (1, 1, 4), (2, 0, 4), (2, 1, 3), (2, 2, 3), (3, 1, 2), (3, 2, 2)])
def test_sphere_ideal_generated_in_bounded_degree(n, k, D):
    """Multiples of r^2 - 1 and nu with factors of degree <= D - 2 and <= D - 1
    span every form of degree <= D that vanishes on S^n."""
    dim = n + 1
    slots = monomial_forms(dim, D, k)
    kernel = nullspace([tangential_vector(f) for f in slots])
    rel = radius_squared_power(dim, 1) - 1
    gens = [g.times(rel) for g in monomial_forms(dim, D - 2, k)]
    if k >= 1:
        gens += [wedge(conormal(dim), h) for h in monomial_forms(dim, D - 1, k - 1)]
    assert all(not tangential_vector(g) for g in gens)
    assert rank(form_vector(g) for g in gens) == len(kernel)
