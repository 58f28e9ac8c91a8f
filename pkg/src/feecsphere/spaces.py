"""Polynomial form spaces on R^(n+1), the simplex T^n and the sphere S^n.

Equality on a manifold is equality of restrictions, so every space here is a
quotient of ambient forms.  Each context supplies a linear *coordinate map*
from ambient forms to exact coefficient vectors whose kernel is precisely the
forms restricting to zero:

* ambient: the coefficients themselves;
* simplex: coefficients after substituting ``x_last = 1 - sum x_i`` (and the
  matching ``dx_last``), which pulls the form back to a chart;
* sphere: coefficients of ``T(alpha)``, the tangential part
  ``i_U(nu ^ alpha)`` with ``u_last^2`` rewritten as ``1 - sum u_i^2``.

At a point of S^n, ``i_U(nu ^ alpha)`` is alpha composed with orthogonal
projection onto the tangent space, so it vanishes exactly when alpha
restricts to zero there.  Its coefficients vanish on the sphere exactly when
they lie in the ideal of ``r^2 - 1``, and rewriting ``u_last^2`` is a
canonical normal form for that ideal.  The sphere test therefore needs no
degree bound on multipliers.

Rank, membership and span equality all run on these vectors with
fraction-free elimination.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from . import oracle
from .exactpoly import DimensionError, Polynomial, monomials_up_to
from .forms import (
    Form,
    bubble,
    character,
    conormal,
    hodge_euclid,
    index_sets,
    interior_product,
    koszul_field,
    pullback,
    radial_field,
    wedge,
)
from .linalg import Echelon, nullspace

Slot = tuple  # (I, exps): one monomial form u^exps du_I


# contexts


@dataclass(frozen=True)
class QuotientContext:
    """Which restriction defines equality: none, to T^n (or a face of it), or to S^n."""

    kind: str
    ambient_dim: int
    active: Optional[tuple] = None  # simplex only: coordinates not set to zero

    def __post_init__(self):
        if self.kind not in ("ambient", "simplex", "sphere"):
            raise ValueError(f"unknown context kind {self.kind!r}")
        if self.ambient_dim < 2:
            raise ValueError("need n >= 1")
        if self.kind == "simplex":
            act = tuple(range(self.ambient_dim)) if self.active is None else tuple(sorted(self.active))
            if not act or not all(0 <= i < self.ambient_dim for i in act):
                raise ValueError("bad active coordinate set")
            object.__setattr__(self, "active", act)
        elif self.active is not None:
            raise ValueError("only simplex contexts have faces")

    @classmethod
    def ambient(cls, n: int) -> "QuotientContext":
        return cls("ambient", n + 1)

    @classmethod
    def simplex(cls, n: int) -> "QuotientContext":
        return cls("simplex", n + 1)

    @classmethod
    def sphere(cls, n: int) -> "QuotientContext":
        return cls("sphere", n + 1)

    @classmethod
    def face(cls, n: int, i: int) -> "QuotientContext":
        """The face x_i = 0 of T^n (0-based i)."""
        return cls("simplex", n + 1, tuple(j for j in range(n + 1) if j != i))

    @property
    def n(self) -> int:
        return self.ambient_dim - 1

    @property
    def is_face(self) -> bool:
        return self.kind == "simplex" and len(self.active) < self.ambient_dim

    @property
    def manifold_dim(self) -> int:
        if self.kind == "ambient":
            return self.ambient_dim
        if self.kind == "sphere":
            return self.n
        return len(self.active) - 1

    @property
    def eliminated(self) -> Optional[int]:
        """Coordinate removed by the simplex chart.

        The full simplex drops the last coordinate; a proper face drops its
        first active coordinate.
        """
        if self.kind != "simplex":
            return None
        return self.active[0] if self.is_face else self.active[-1]

    @property
    def scalar_relation(self) -> Optional[Polynomial]:
        dim = self.ambient_dim
        if self.kind == "simplex":
            p = Polynomial.constant(dim, -1)
            for i in self.active:
                p = p + Polynomial.variable(dim, i)
            return p
        if self.kind == "sphere":
            terms = {tuple(2 if j == i else 0 for j in range(dim)): 1 for i in range(dim)}
            terms[(0,) * dim] = -1
            return Polynomial(dim, terms)
        return None

    @property
    def one_form_relation(self) -> Optional[Form]:
        dim = self.ambient_dim
        if self.kind == "simplex":
            return Form(dim, 1, {(i,): Polynomial.constant(dim, 1) for i in self.active})
        if self.kind == "sphere":
            return conormal(dim)
        return None

    def describe(self) -> str:
        if self.kind == "ambient":
            return f"R^{self.ambient_dim}"
        if self.kind == "sphere":
            return f"S^{self.n}"
        if self.is_face:
            missing = [i + 1 for i in range(self.ambient_dim) if i not in self.active]
            return f"face x{missing[0]}=0 of T^{self.n}"
        return f"T^{self.n}"


def _check_ctx(alpha: Form, ctx: QuotientContext) -> None:
    if alpha.dim != ctx.ambient_dim:
        raise DimensionError(f"form on R^{alpha.dim} used in context {ctx.describe()}")


# vectors


def form_vector(alpha: Form) -> dict:
    return {(I, e): c for I, e, c in alpha.terms()}


def vector_form(dim: int, degree: int, vec: dict) -> Form:
    coeffs: dict = {}
    for (I, e), c in vec.items():
        if c:
            coeffs.setdefault(I, {})[e] = c
    return Form._raw(dim, degree, {I: Polynomial(dim, t) for I, t in coeffs.items()})


def _accumulate(out: dict, vec: dict, c) -> None:
    for key, v in vec.items():
        w = out.get(key, 0) + c * v
        if w:
            out[key] = w
        else:
            out.pop(key, None)


# simplex chart


@lru_cache(maxsize=None)
def _simplex_slot(dim: int, active: tuple, elim: int, I: tuple, e: tuple) -> dict:
    if any(e[j] for j in range(dim) if j not in active) or any(i not in active for i in I):
        return {}
    subs = []
    others = [j for j in active if j != elim]
    for j in range(dim):
        if j == elim:
            p = Polynomial.constant(dim, 1)
            for o in others:
                p = p - Polynomial.variable(dim, o)
            subs.append(p)
        elif j in active:
            subs.append(Polynomial.variable(dim, j))
        else:
            subs.append(Polynomial.zero(dim))
    return form_vector(pullback(Form.monomial(e, I), subs))


def _simplex_vector(alpha: Form, ctx: QuotientContext) -> dict:
    out: dict = {}
    for I, e, c in alpha.terms():
        _accumulate(out, _simplex_slot(alpha.dim, ctx.active, ctx.eliminated, I, e), c)
    return out


# sphere tangential map


@lru_cache(maxsize=None)
def _one_minus_rest_power(dim: int, q: int) -> Polynomial:
    p = Polynomial.constant(dim, 1)
    for i in range(dim - 1):
        p = p - Polynomial.monomial(tuple(2 if j == i else 0 for j in range(dim)))
    return p**q


def sphere_scalar_reduce(p: Polynomial) -> Polynomial:
    """Canonical representative of p modulo r^2 - 1: at most linear in the last variable."""
    dim = p.nvars
    out = Polynomial.zero(dim)
    plain: dict = {}
    for e, c in p.items():
        q, rho = divmod(e[-1], 2)
        base = e[:-1] + (rho,)
        if q == 0:
            plain[base] = plain.get(base, 0) + c
        else:
            out = out + _one_minus_rest_power(dim, q).mul_monomial(base, c)
    return out + Polynomial(dim, {e: c for e, c in plain.items() if c})


@lru_cache(maxsize=None)
def _tangential_slot(dim: int, I: tuple, e: tuple) -> dict:
    if len(I) >= dim:
        return {}
    alpha = Form.monomial(e, I)
    tau = interior_product(radial_field(dim), wedge(conormal(dim), alpha))
    return form_vector(tau.map_coefficients(sphere_scalar_reduce))


def tangential_vector(alpha: Form) -> dict:
    """Coefficient vector of T(alpha); zero exactly when alpha restricts to zero on S^n."""
    out: dict = {}
    for I, e, c in alpha.terms():
        _accumulate(out, _tangential_slot(alpha.dim, I, e), c)
    return out


def tangential_part(alpha: Form) -> Form:
    return vector_form(alpha.dim, alpha.degree, tangential_vector(alpha))


def context_vector(alpha: Form, ctx: QuotientContext) -> dict:
    """Coordinates of alpha in the quotient; equal vectors iff equal restrictions."""
    _check_ctx(alpha, ctx)
    if ctx.kind == "ambient":
        return form_vector(alpha)
    if ctx.kind == "simplex":
        return _simplex_vector(alpha, ctx)
    return tangential_vector(alpha)


# sphere normal form


def slot_key(dim: int):
    """Order on monomial forms; the normal form avoids the largest slots.

    Higher total degree is largest, then more weight on the last coordinate
    (its exponent plus one if du_last appears), then lexicographic.
    """
    last = dim - 1

    def key(slot):
        I, e = slot
        return (sum(e), e[last] + (1 if last in I else 0), e, I)

    return key


@lru_cache(maxsize=None)
def _sphere_kernel(dim: int, k: int, D: int, chi: tuple) -> Echelon:
    slots = [
        (I, e)
        for e in monomials_up_to(dim, D)
        for I in index_sets(dim, k)
        if character(I, e) == chi
    ]
    rows = [_tangential_slot(dim, I, e) for I, e in slots]
    ech = Echelon(key=slot_key(dim))
    for v in nullspace(rows):
        ech.add({slots[i]: c for i, c in v.items()})
    return ech


def _sphere_normal_form(alpha: Form) -> Form:
    if alpha.is_zero():
        return alpha
    dim, k = alpha.dim, alpha.degree
    if k >= dim:
        return Form.zero(dim, k)
    D = alpha.poly_degree()
    classes: dict = {}
    for I, e, c in alpha.terms():
        classes.setdefault(character(I, e), {})[(I, e)] = c
    out: dict = {}
    for chi, vec in sorted(classes.items()):
        _accumulate(out, _sphere_kernel(dim, k, D, chi).reduce(vec), 1)
    return vector_form(dim, k, out)


def reduce_mod(alpha: Form, ctx: QuotientContext) -> Form:
    """Canonical representative of alpha modulo the context's relations.

    Simplex: the chart substitution.  Sphere: the representative supported on
    the smallest slots (see :func:`slot_key`), found by exact elimination
    against the forms of the same reflection character that vanish on S^n.
    It has minimal polynomial degree, keeps the reflection character of every
    term, and does not depend on the degree of the input representative.
    """
    _check_ctx(alpha, ctx)
    if ctx.kind == "ambient":
        return alpha
    if ctx.kind == "simplex":
        return vector_form(alpha.dim, alpha.degree, _simplex_vector(alpha, ctx))
    return _sphere_normal_form(alpha)


# zero tests and the oracle audit


@dataclass
class OracleAudit:
    """Records every symbolic zero verdict together with the oracle's verdict."""

    entries: list = field(default_factory=list)

    def record(self, alpha: Form, ctx: QuotientContext, symbolic: bool) -> None:
        kind = ctx.kind
        pointwise = oracle.is_zero_pointwise(alpha, kind, ctx.active)
        self.entries.append((ctx.describe(), alpha.degree, symbolic, pointwise))

    @property
    def disagreements(self) -> list:
        return [e for e in self.entries if e[2] != e[3]]

    def __len__(self) -> int:
        return len(self.entries)


_AUDITS: list = []


@contextmanager
def oracle_audit() -> Iterator[OracleAudit]:
    audit = OracleAudit()
    _AUDITS.append(audit)
    try:
        yield audit
    finally:
        _AUDITS.remove(audit)


def is_zero_on(alpha: Form, ctx: QuotientContext) -> bool:
    """True iff alpha restricts to zero in ``ctx``."""
    verdict = not context_vector(alpha, ctx)
    for audit in _AUDITS:
        audit.record(alpha, ctx, verdict)
    return verdict


# bases


@dataclass(frozen=True)
class SpaceBasis:
    """Ambient representatives of a basis of one polynomial form space."""

    context: QuotientContext
    n: int
    r: int
    k: int
    flavor: str
    representatives: tuple

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def __len__(self) -> int:
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    @cached_property
    def _echelon(self) -> Echelon:
        ech = Echelon(track=True)
        for i, b in enumerate(self.representatives):
            ech.add(context_vector(b, self.context), i)
        return ech

    def vectors(self) -> list[dict]:
        return [context_vector(b, self.context) for b in self.representatives]


def independent(forms: Iterable[Form], ctx: QuotientContext) -> list[Form]:
    """Greedy maximal subset, in input order, independent modulo ``ctx``."""
    ech = Echelon()
    return [f for f in forms if ech.add(context_vector(f, ctx))]


def span_rank(forms: Iterable[Form], ctx: QuotientContext) -> int:
    ech = Echelon()
    for f in forms:
        ech.add(context_vector(f, ctx))
    return ech.rank


def _make(ctx, n, r, k, flavor, forms) -> SpaceBasis:
    return SpaceBasis(ctx, n, r, k, flavor, tuple(independent(forms, ctx)))


def _parity_ok(I, e, parity: Optional[str]) -> bool:
    if parity is None:
        return True
    ch = character(I, e)
    return not any(ch) if parity == "even" else all(ch)


def _validate(n: int, r: int, k: int, ctx: QuotientContext) -> bool:
    """Check ranges; returns False when the space is zero by the manifold dimension."""
    if n < 1:
        raise ValueError("need n >= 1")
    if ctx.ambient_dim != n + 1:
        raise DimensionError(f"context {ctx.describe()} does not match n = {n}")
    if k < 0:
        raise ValueError("form degree must be non-negative")
    if ctx.kind == "ambient":
        if k > n + 1:
            raise ValueError(f"form degree {k} exceeds {n + 1}")
        return True
    return k <= ctx.manifold_dim


def monomial_forms(dim: int, r: int, k: int, parity: Optional[str] = None) -> list[Form]:
    """x^a dx_I with |a| <= r, by ascending degree (x1 before x2), then index set."""
    if r < 0 or k > dim:
        return []
    return [
        Form.monomial(e, I)
        for e in monomials_up_to(dim, r)
        for I in index_sets(dim, k)
        if _parity_ok(I, e, parity)
    ]


def _flavor(base: str, parity: Optional[str]) -> str:
    return base if parity is None else f"{base}_{parity}"


def basis_P(n: int, r: int, k: int, ctx: QuotientContext, parity: Optional[str] = None) -> SpaceBasis:
    if r < 0:
        raise ValueError("polynomial degree must be non-negative")
    flavor = _flavor("P", parity)
    if not _validate(n, r, k, ctx):
        return SpaceBasis(ctx, n, r, k, flavor, ())
    return _make(ctx, n, r, k, flavor, monomial_forms(n + 1, r, k, parity))


def pminus_generators(dim: int, r: int, k: int, field_=None, parity: Optional[str] = None) -> list[Form]:
    V = field_ or radial_field(dim)
    out = []
    for g in monomial_forms(dim, r - 1, k + 1, parity):
        h = interior_product(V, g)
        if h:
            out.append(h)
    return out


def basis_Pminus(n: int, r: int, k: int, ctx: QuotientContext, parity: Optional[str] = None) -> SpaceBasis:
    """Restrictions of i_X P_{r-1} Lambda^{k+1}."""
    if r < 1:
        raise ValueError("the trimmed family needs r >= 1")
    flavor = _flavor("Pminus", parity)
    if not _validate(n, r, k, ctx):
        return SpaceBasis(ctx, n, r, k, flavor, ())
    return _make(ctx, n, r, k, flavor, pminus_generators(n + 1, r, k, parity=parity))


def basis_Pminus_afw(n: int, r: int, k: int, ctx: QuotientContext) -> SpaceBasis:
    """P_{r-1} Lambda^k + kappa P_{r-1} Lambda^{k+1} on the simplex, kappa = i_{V_kappa}."""
    if ctx.kind != "simplex" or ctx.is_face:
        raise ValueError("the Koszul definition is only available on the simplex")
    if r < 1:
        raise ValueError("the trimmed family needs r >= 1")
    if not _validate(n, r, k, ctx):
        return SpaceBasis(ctx, n, r, k, "Pminus_afw", ())
    dim = n + 1
    gens = monomial_forms(dim, r - 1, k) + pminus_generators(dim, r, k, koszul_field(dim))
    return _make(ctx, n, r, k, "Pminus_afw", gens)


def trace_to_face(a: Form, i: int) -> Form:
    """Restriction to the face x_i = 0 (0-based), reduced in that face's chart."""
    if not 0 <= i < a.dim:
        raise DimensionError(f"face index {i} out of range")
    return reduce_mod(a, QuotientContext.face(a.dim - 1, i))


def _trace_free_combinations(n: int, r: int, k: int, forms: Sequence[Form], flavor: str) -> SpaceBasis:
    ctx = QuotientContext.simplex(n)
    dim = n + 1
    faces = [QuotientContext.face(n, i) for i in range(dim)]
    rows = []
    for f in forms:
        row = {}
        for i, fc in enumerate(faces):
            for key, c in context_vector(f, fc).items():
                row[(i,) + key] = c
        rows.append(row)
    members = []
    for combo in nullspace(rows):
        g = Form.zero(dim, k)
        for j, c in sorted(combo.items()):
            g = g + forms[j].scale(c)
        members.append(reduce_mod(g, ctx))
    return _make(ctx, n, r, k, flavor, members)


def basis_ring(n: int, r: int, k: int) -> SpaceBasis:
    """Members of P_r Lambda^k(T^n) with vanishing trace on every face."""
    if r < 1:
        raise ValueError("ring spaces need r >= 1")
    ctx = QuotientContext.simplex(n)
    if not _validate(n, r, k, ctx):
        return SpaceBasis(ctx, n, r, k, "ring_P", ())
    return _trace_free_combinations(n, r, k, basis_P(n, r, k, ctx).representatives, "ring_P")


def basis_ring_minus(n: int, r: int, k: int) -> SpaceBasis:
    if r < 1:
        raise ValueError("ring spaces need r >= 1")
    ctx = QuotientContext.simplex(n)
    if not _validate(n, r, k, ctx):
        return SpaceBasis(ctx, n, r, k, "ring_Pminus", ())
    return _trace_free_combinations(n, r, k, basis_Pminus(n, r, k, ctx).representatives, "ring_Pminus")


def _times_bubble(forms: Iterable[Form]) -> list[Form]:
    out = []
    for f in forms:
        out.append(f.times(bubble(f.dim)))
    return out


def sphere_volume(dim: int) -> Form:
    """*_{R^(n+1)} nu, which restricts to the volume form of S^n."""
    return hodge_euclid(conormal(dim))


def kernel_iU(n: int, s: int, k: int) -> SpaceBasis:
    """Exact nullspace of i_U on P_s Lambda^k(R^(n+1))."""
    ctx = QuotientContext.ambient(n)
    _validate(n, s, k, ctx)
    dim = n + 1
    gens = monomial_forms(dim, s, k)
    U = radial_field(dim)
    rows = [form_vector(interior_product(U, g)) if k > 0 else {} for g in gens]
    members = []
    for combo in nullspace(rows):
        g = Form.zero(dim, k)
        for j, c in sorted(combo.items()):
            g = g + gens[j].scale(c)
        members.append(g)
    return _make(ctx, n, s, k, "kernel_iU", members)


def _intersection(A: Sequence[Form], B: Sequence[Form], ctx: QuotientContext, dim: int, k: int) -> list[Form]:
    rows = [context_vector(a, ctx) for a in A] + [
        {key: -c for key, c in context_vector(b, ctx).items()} for b in B
    ]
    out = []
    for combo in nullspace(rows):
        g = Form.zero(dim, k)
        for j, c in sorted(combo.items()):
            if j < len(A):
                g = g + A[j].scale(c)
        if g:
            out.append(g)
    return out


def basis_ringring(n: int, s: int, k: int, ctx: QuotientContext) -> SpaceBasis:
    """Forms vanishing as full tensors on every coordinate hyperplane.

    Ambient: u_N times P_{s-n-1}.  Sphere: u_N P_{s-n-1} Lambda^k(S^n), plus
    u_N vol_{S^n} when k = n and s >= n.
    """
    if ctx.kind not in ("ambient", "sphere"):
        raise ValueError("double-ring spaces live on R^(n+1) or S^n")
    if s < 0:
        raise ValueError("polynomial degree must be non-negative")
    if not _validate(n, s, k, ctx):
        return SpaceBasis(ctx, n, s, k, "ringring_P", ())
    dim = n + 1
    gens = _times_bubble(monomial_forms(dim, s - n - 1, k))
    if ctx.kind == "sphere":
        if k == n and s >= n:
            gens.append(sphere_volume(dim).times(bubble(dim)))
        gens = [reduce_mod(g, ctx) for g in gens]
    return _make(ctx, n, s, k, "ringring_P", gens)


def basis_ringring_minus(n: int, s: int, k: int, ctx: QuotientContext) -> SpaceBasis:
    """Trimmed double-ring space.

    Ambient: computed directly as P^-_s intersected with u_N P_{s-n-1}.
    Sphere: u_N P^-_{s-n-1}, plus u_N itself when k = 0 and s >= n+1.
    """
    if ctx.kind not in ("ambient", "sphere"):
        raise ValueError("double-ring spaces live on R^(n+1) or S^n")
    if s < 1:
        raise ValueError("the trimmed family needs s >= 1")
    if not _validate(n, s, k, ctx):
        return SpaceBasis(ctx, n, s, k, "ringring_Pminus", ())
    dim = n + 1
    if ctx.kind == "ambient":
        A = basis_Pminus(n, s, k, ctx).representatives
        B = _times_bubble(monomial_forms(dim, s - n - 1, k))
        return _make(ctx, n, s, k, "ringring_Pminus", _intersection(A, B, ctx, dim, k))
    gens = []
    if s - n - 1 >= 1:
        gens = _times_bubble(pminus_generators(dim, s - n - 1, k))
    if k == 0 and s >= n + 1:
        gens.append(Form.scalar(bubble(dim)))
    gens = [reduce_mod(g, ctx) for g in gens]
    return _make(ctx, n, s, k, "ringring_Pminus", gens)


def hyperplane_vector(alpha: Form) -> dict:
    """Linear conditions for alpha (on S^n) to vanish at every point of S^n with some u_i = 0.

    Built from T(alpha) with u_i set to zero, reduced modulo the sphere relation
    of the remaining coordinates.
    """
    dim = alpha.dim
    tau = tangential_part(alpha)
    out: dict = {}
    for i in range(dim):
        rest = [j for j in range(dim) if j != i]
        last = rest[-1]
        for I, p in tau.items():
            q = Polynomial._raw(dim, {e: c for e, c in p.items() if e[i] == 0})
            for e, c in _reduce_sphere_in(q, rest, last).items():
                out[(i, I, e)] = c
    return out


def _reduce_sphere_in(p: Polynomial, rest: list, last: int) -> dict:
    """Reduce modulo sum_{j in rest} u_j^2 - 1 by rewriting u_last^2."""
    dim = p.nvars
    base = Polynomial.constant(dim, 1)
    for j in rest:
        if j != last:
            base = base - Polynomial.monomial(tuple(2 if t == j else 0 for t in range(dim)))
    out = Polynomial.zero(dim)
    for e, c in p.items():
        q, rho = divmod(e[last], 2)
        f = list(e)
        f[last] = rho
        out = out + (base**q).mul_monomial(tuple(f), c)
    return dict(out.items())


def basis_ringring_direct(n: int, s: int, k: int, minus: bool = False) -> SpaceBasis:
    """Double-ring sphere space from its definition, by solving the vanishing conditions."""
    ctx = QuotientContext.sphere(n)
    flavor = "ringring_Pminus_direct" if minus else "ringring_P_direct"
    if not _validate(n, s, k, ctx):
        return SpaceBasis(ctx, n, s, k, flavor, ())
    base = basis_Pminus(n, s, k, ctx) if minus else basis_P(n, s, k, ctx)
    forms = base.representatives
    rows = [hyperplane_vector(f) for f in forms]
    members = []
    for combo in nullspace(rows):
        g = Form.zero(n + 1, k)
        for j, c in sorted(combo.items()):
            g = g + forms[j].scale(c)
        members.append(g)
    return _make(ctx, n, s, k, flavor, members)


# membership and spans


def membership(alpha: Form, basis: SpaceBasis) -> Optional[list[Fraction]]:
    """Coordinates c with alpha = sum c_i b_i in the basis context, or None."""
    ctx = basis.context
    _check_ctx(alpha, ctx)
    if basis.representatives and alpha.degree != basis.k:
        raise DimensionError(f"{alpha.degree}-form tested against a {basis.k}-form space")
    solution = basis._echelon.solve(context_vector(alpha, ctx))
    if solution is None:
        return None
    coords = [Fraction(solution.get(i, 0)) for i in range(basis.dim)]
    residual = alpha
    for c, b in zip(coords, basis.representatives):
        if c:
            residual = residual - b.scale(c)
    if not is_zero_on(residual, ctx):
        raise ArithmeticError("membership residual is not zero; elimination bug")
    return coords


def span_contains(basis: SpaceBasis, forms: Iterable[Form]) -> bool:
    ech = basis._echelon
    return all(ech.contains(context_vector(f, basis.context)) for f in forms)


def equal_spans(A: SpaceBasis, B: SpaceBasis) -> bool:
    if A.context != B.context:
        raise ValueError("spans compared in different contexts")
    if A.dim and B.dim and A.k != B.k:
        raise DimensionError("spans of different form degrees")
    if A.dim != B.dim:
        return False
    return span_contains(A, B.representatives)


def build_basis(flavor: str, n: int, r: int, k: int, ctx: QuotientContext) -> SpaceBasis:
    """Dispatch by flavor name (used by the command line)."""
    parity = None
    base = flavor
    for p in ("even", "odd"):
        if flavor.endswith("_" + p):
            parity, base = p, flavor[: -len(p) - 1]
    if base == "P":
        return basis_P(n, r, k, ctx, parity)
    if base == "Pminus":
        return basis_Pminus(n, r, k, ctx, parity)
    if parity is not None:
        raise ValueError(f"flavor {flavor!r} has no parity variant")
    if base == "Pminus_afw":
        return basis_Pminus_afw(n, r, k, ctx)
    if base in ("ring_P", "ring_Pminus"):
        if ctx.kind != "simplex" or ctx.is_face:
            raise ValueError("ring spaces are defined on the simplex")
        return basis_ring(n, r, k) if base == "ring_P" else basis_ring_minus(n, r, k)
    if base == "ringring_P":
        return basis_ringring(n, r, k, ctx)
    if base == "ringring_Pminus":
        return basis_ringring_minus(n, r, k, ctx)
    if base == "kernel_iU":
        if ctx.kind != "ambient":
            raise ValueError("kernel_iU is an ambient space")
        return kernel_iU(n, r, k)
    raise ValueError(f"unknown flavor {flavor!r}")


FLAVORS = (
    "P",
    "Pminus",
    "ring_P",
    "ring_Pminus",
    "ringring_P",
    "ringring_Pminus",
    "P_even",
    "P_odd",
    "Pminus_even",
    "Pminus_odd",
    "Pminus_afw",
    "kernel_iU",
)
