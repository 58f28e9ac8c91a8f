"""The map Phi(u) = (u_1^2, ..., u_{n+1}^2), the sphere Hodge star and the duality maps.

Forms in x-coordinates and u-coordinates share the :class:`Form` type; the
functions here fix which is which.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactpoly import DimensionError, DivisibilityError, ParityError, monomials_up_to
from .forms import Form, bubble, character, conormal, even_part, hodge_euclid, index_sets, wedge
from .linalg import Echelon
from .spaces import QuotientContext, reduce_mod, tangential_vector


def phi_pullback(a: Form) -> Form:
    """x_i -> u_i^2 and dx_i -> 2 u_i du_i."""
    dim, k = a.dim, a.degree
    out = {}
    for I, p in a.items():
        uI = tuple(1 if j in I else 0 for j in range(dim))
        out[I] = p.substitute_squares().mul_monomial(uI, 2**k)
    return Form._raw(dim, k, out)


def phi_pushdown(alpha: Form) -> Form:
    """Inverse of :func:`phi_pullback` on even forms."""
    dim, k = alpha.dim, alpha.degree
    out = {}
    for I, q in alpha.items():
        for e in q.terms:
            if any(character(I, e)):
                raise ParityError(f"term with exponents {e} on du_{[i + 1 for i in I]} is not even")
        uI = tuple(1 if j in I else 0 for j in range(dim))
        try:
            quotient = q.divide_exact(uI)
        except DivisibilityError as exc:
            raise DivisibilityError(f"form is not in the image of the pullback: {exc}") from None
        out[I] = quotient.unsquare().scale(Fraction(1, 2**k))
    return Form._raw(dim, k, out)


def hodge_sphere(alpha: Form) -> Form:
    """*_{S^n} alpha := *_{R^(n+1)}(nu ^ alpha); k-forms go to (n-k)-forms."""
    if alpha.degree >= alpha.dim:
        raise DimensionError(f"*_S is defined on forms of degree at most {alpha.dim - 1}")
    return hodge_euclid(wedge(conormal(alpha.dim), alpha))


def inverse_sign(n: int, k: int) -> int:
    """*_S *_S = (-1)^(k(n-k)) on k-forms of S^n."""
    return -1 if (k * (n - k)) % 2 else 1


def divide_by_bubble_on_sphere(beta: Form, max_extra: int = 4) -> Form:
    """A form gamma with u_N gamma = beta on S^n.

    Exact division is used when every coefficient is divisible by u_N.
    Otherwise gamma is sought among odd forms of increasing degree by solving
    T(u_N gamma) = T(beta).
    """
    dim, k = beta.dim, beta.degree
    uN = (1,) * dim
    if all(p.divisible_by(uN) for _, p in beta.items()):
        return beta.map_coefficients(lambda p: p.divide_exact(uN))
    target = tangential_vector(beta)
    if not target:
        return Form.zero(dim, k)
    start = max(0, beta.poly_degree() - dim)
    odd = (1,) * dim
    for D in range(start, beta.poly_degree() + max_extra + 1):
        slots = [(I, e) for e in monomials_up_to(dim, D) for I in index_sets(dim, k) if character(I, e) == odd]
        ech = Echelon(track=True)
        for idx, (I, e) in enumerate(slots):
            ech.add(tangential_vector(Form.monomial(e, I).times(bubble(dim))), idx)
        sol = ech.solve(target)
        if sol is not None:
            gamma = Form.zero(dim, k)
            for idx, c in sorted(sol.items()):
                I, e = slots[idx]
                gamma = gamma + Form.monomial(e, I, c)
            return gamma
    raise DivisibilityError("form is not u_N times a polynomial form on the sphere")


@dataclass(frozen=True)
class DualityTrace:
    """Every intermediate of one application of the duality map."""

    direction: str
    a: Form  # input, x-coordinates
    alpha: Form  # Phi^* a
    star: Form  # forward: *_S alpha; inverse: beta / u_N
    star_reduced: Form  # the star term after sphere reduction
    beta: Form  # forward: u_N * star; inverse: the form pushed down
    b: Form  # output, x-coordinates


def duality_trace(a: Form, inverse: bool = False) -> DualityTrace:
    """(Phi^*)^{-1} (u_N *_S) Phi^*, or its inverse, with intermediates."""
    dim = a.dim
    n = dim - 1
    sphere = QuotientContext.sphere(n)
    uN = bubble(dim)
    alpha = phi_pullback(a)
    if not inverse:
        star = hodge_sphere(alpha)
        star_reduced = reduce_mod(star, sphere)
        beta = even_part(star_reduced.times(uN))
        return DualityTrace("forward", a, alpha, star, star_reduced, beta, phi_pushdown(beta))
    # alpha here is Phi^* b for b in the ring space; recover the pre-image
    gamma = divide_by_bubble_on_sphere(alpha)
    gamma_reduced = reduce_mod(gamma, sphere)
    pre = hodge_sphere(gamma_reduced).scale(inverse_sign(n, gamma.degree))
    pre = even_part(reduce_mod(pre, sphere))
    return DualityTrace("inverse", a, alpha, gamma, gamma_reduced, pre, phi_pushdown(pre))


def duality_map(a: Form, inverse: bool = False) -> Form:
    return duality_trace(a, inverse).b


def sphere_volume_sign(n: int) -> int:
    """sigma_n with Phi^*(dx_1 ^ ... ^ dx_n) = sigma_n 2^n u_N vol_{S^n} on S^n."""
    return -1 if n % 2 else 1


def check_orientation_sign(n: int) -> Optional[int]:
    """Recompute sigma_n symbolically; returns the sign or None if not a multiple."""
    dim = n + 1
    lhs = phi_pullback(Form.differential(dim, *range(n)))
    vol = hodge_euclid(conormal(dim)).times(bubble(dim)).scale(2**n)
    for s in (1, -1):
        diff = lhs - vol.scale(s)
        if not tangential_vector(diff):
            return s
    return None
