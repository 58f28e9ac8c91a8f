"""Integration over T^n, the duality pairing, and executable theorem checks.

Every checker returns a :class:`VerificationReport`.  Failed reports always
carry a witness: the offending form, a dimension mismatch or a matrix minor.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import oracle
from .chart import duality_map, duality_trace, hodge_sphere, phi_pullback, sphere_volume_sign
from .exactpoly import DimensionError, Polynomial, monomials_up_to
from .forms import (
    Form,
    bubble,
    conormal,
    even_part,
    hodge_euclid,
    index_sets,
    interior_product,
    odd_part,
    pullback,
    radial_field,
    wedge,
)
from .linalg import Echelon, leading_principal_minors
from .notation import format_form, parse_form
from .spaces import (
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
    equal_spans,
    independent,
    is_zero_on,
    kernel_iU,
    membership,
    monomial_forms,
    pminus_generators,
    reduce_mod,
    span_contains,
    span_rank,
    sphere_volume,
)


class ConsistencyError(ValueError):
    """A matrix that must be symmetric is not."""


# reports


@dataclass
class VerificationReport:
    check_name: str
    parameters: dict
    verdict: str  # "pass" or "fail"
    witness: Optional[str] = None
    details: dict = field(default_factory=dict)
    timing: float = 0.0

    def __post_init__(self):
        if self.verdict not in ("pass", "fail"):
            raise ValueError("verdict must be 'pass' or 'fail'")
        if self.verdict == "fail" and not self.witness:
            raise ValueError("a failed report needs a witness")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        # timing is left out so that documents are reproducible byte for byte
        return {
            "check_name": self.check_name,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "witness": self.witness,
            "details": self.details,
        }

    def line(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        text = f"[{self.verdict.upper()}] {self.check_name}({params})"
        if self.witness:
            text += f": {self.witness}"
        return text


class _Report:
    """Collects failures while a check runs."""

    def __init__(self, name: str, **params):
        self.name = name
        self.params = params
        self.failures: list[str] = []
        self.details: dict = {}
        self.start = time.perf_counter()

    def require(self, ok: bool, witness: str) -> bool:
        if not ok:
            self.failures.append(witness)
        return ok

    def done(self) -> VerificationReport:
        witness = "; ".join(self.failures[:5]) if self.failures else None
        return VerificationReport(
            self.name,
            self.params,
            "fail" if self.failures else "pass",
            witness,
            self.details,
            time.perf_counter() - self.start,
        )


def _fmt(f: Form, coords: str = "u") -> str:
    return format_form(f, coords)


# integration and pairing


def _chart_subs(dim: int) -> list[Polynomial]:
    last = dim - 1
    subs = [Polynomial.variable(dim, i) for i in range(last)]
    p = Polynomial.constant(dim, 1)
    for i in range(last):
        p = p - Polynomial.variable(dim, i)
    return subs + [p]


def monomial_integral(exps: Sequence[int]) -> Fraction:
    """Integral of x^a over the chart of T^n (x_last = 1 - sum): prod a_i! / (n + |a|)!."""
    n = len(exps) - 1
    num = 1
    for a in exps:
        num *= math.factorial(a)
    return Fraction(num, math.factorial(n + sum(exps)))


def integrate_simplex(omega: Form) -> Fraction:
    """Integral over T^n, with the chart (x_1, ..., x_n) positively oriented."""
    dim = omega.dim
    n = dim - 1
    if omega.degree != n:
        raise DimensionError(f"only {n}-forms can be integrated over T^{n}")
    subs = _chart_subs(dim)
    total = Fraction(0)
    zero = (0,) * dim
    for I, p in omega.items():
        # only the differential is pulled back; x_last stays in the integrand
        dI = pullback(Form.monomial(zero, I), subs)
        sign = dI.coefficient(tuple(range(n))).coefficient(zero)
        if not sign:
            continue
        for e, c in p.items():
            total += sign * c * monomial_integral(e)
    return total


def pairing(a: Form, b: Form) -> Fraction:
    """sigma_n times the integral of a ^ b over T^n.

    sigma_n = (-1)^n converts the chart orientation into the one induced from
    the sphere through Phi, under which the duality pairing is positive.
    """
    n = a.dim - 1
    if a.degree + b.degree != n:
        raise DimensionError(f"degrees {a.degree} + {b.degree} do not add up to {n}")
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    ab = reduce_mod(wedge(a, b), QuotientContext.simplex(n))
    return sphere_volume_sign(n) * integrate_simplex(ab)


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple  # tuple of tuples of Fractions
    row_basis: SpaceBasis
    map_used: str

    @property
    def size(self) -> int:
        return len(self.entries)


def gram_matrix(basis: SpaceBasis) -> GramMatrix:
    """M_ij = pairing(b_i, D(b_j)) with D the forward duality map."""
    reps = basis.representatives
    duals = [duality_map(b) for b in reps]
    rows = tuple(tuple(pairing(bi, dj) for dj in duals) for bi in reps)
    return GramMatrix(rows, basis, "(Phi^*)^-1 (u_N *_S) Phi^*")


def is_positive_definite(M) -> bool:
    entries = M.entries if isinstance(M, GramMatrix) else M
    n = len(entries)
    for i in range(n):
        for j in range(i + 1, n):
            if entries[i][j] != entries[j][i]:
                raise ConsistencyError(f"matrix is not symmetric at ({i + 1}, {j + 1})")
    return all(m > 0 for m in leading_principal_minors([list(r) for r in entries]))


# theorem checks


def tsiso_right_space(n: int, r: int, k: int, which: int) -> SpaceBasis:
    """The sphere space on the right of correspondence ``which``."""
    S = QuotientContext.sphere(n)
    uN = bubble(n + 1)
    if which == 1:
        return basis_P(n, 2 * r + k, k, S, "even")
    if which == 2:
        s = 2 * r + k - 1
        gens = [hodge_sphere(g) for g in basis_P(n, s, n - k, S, "odd")] if s >= 0 else []
        return SpaceBasis(S, n, s, k, "star_P_odd", tuple(independent(gens, S)))
    if which == 3:
        s = 2 * r + k - n - 1
        gens = [g.times(uN) for g in basis_P(n, s, k, S, "odd")] if s >= 0 else []
        return SpaceBasis(S, n, s, k, "bubble_P_odd", tuple(independent(gens, S)))
    if which == 4:
        s = 2 * r + k - n - 2
        gens = [hodge_sphere(g).times(uN) for g in basis_P(n, s, n - k, S, "even")] if s >= 0 else []
        return SpaceBasis(S, n, s, k, "bubble_star_P_even", tuple(independent(gens, S)))
    raise ValueError("correspondence number must be 1..4")


def tsiso_left_space(n: int, r: int, k: int, which: int) -> SpaceBasis:
    T = QuotientContext.simplex(n)
    if which == 1:
        return basis_P(n, r, k, T)
    if which == 2:
        return basis_Pminus(n, r, k, T)
    if which == 3:
        return basis_ring(n, r, k)
    if which == 4:
        return basis_ring_minus(n, r, k)
    raise ValueError("correspondence number must be 1..4")


def check_tsiso(n: int, r: int, k: int, which: int) -> VerificationReport:
    rep = _Report("tsiso", n=n, r=r, k=k, which=which)
    if r < (0 if which == 1 else 1):
        raise ValueError("the first correspondence needs r >= 0, the others r >= 1")
    left = tsiso_left_space(n, r, k, which)
    right = tsiso_right_space(n, r, k, which)
    S = QuotientContext.sphere(n)
    images = [phi_pullback(a) for a in left]
    for a, img in zip(left, images):
        rep.require(not is_zero_on(img, S), f"image of {_fmt(a, 'x')} vanishes on the sphere")
        rep.require(membership(img, right) is not None, f"image of {_fmt(a, 'x')} is outside the right space")
    rank = span_rank(images, S)
    rep.require(rank == left.dim, f"images have rank {rank}, left dimension {left.dim}")
    rep.require(right.dim == left.dim, f"dim left {left.dim} != dim right {right.dim}")
    rep.details = {"dim_left": left.dim, "dim_right": right.dim, "rank_images": rank}
    return rep.done()


def random_form(dim: int, k: int, rng: random.Random, max_degree: int = 3, terms: int = 4) -> Form:
    f = Form.zero(dim, k)
    monos = list(monomials_up_to(dim, max_degree))
    idx = index_sets(dim, k)
    for _ in range(terms):
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        f = f + Form.monomial(rng.choice(monos), rng.choice(idx), c)
    return f


PARITY_LAWS: dict[str, tuple] = {
    # name: (operation, projector applied to the input, projector on the output)
    "nu_wedge_even": ("nu", even_part, even_part),
    "nu_wedge_odd": ("nu", odd_part, odd_part),
    "iU_even": ("iU", even_part, even_part),
    "iU_odd": ("iU", odd_part, odd_part),
    "star_R_even": ("starR", even_part, odd_part),
    "star_R_odd": ("starR", odd_part, even_part),
    "star_S_even": ("starS", even_part, odd_part),
    "star_S_odd": ("starS", odd_part, even_part),
    "bubble_even": ("bubble", even_part, odd_part),
    "bubble_odd": ("bubble", odd_part, even_part),
}


def _apply(op: str, a: Form) -> Form:
    dim = a.dim
    if op == "nu":
        return wedge(conormal(dim), a)
    if op == "iU":
        return interior_product(radial_field(dim), a)
    if op == "starR":
        return hodge_euclid(a)
    if op == "starS":
        return hodge_sphere(a)
    return a.times(bubble(dim))


def check_parity_laws(n: int, trials: int = 100, seed: int = 0) -> VerificationReport:
    """All ten parity identities on seeded random forms."""
    rep = _Report("parity", n=n, trials=trials, seed=seed)
    rng = random.Random(seed)
    dim = n + 1
    counts = {name: 0 for name in PARITY_LAWS}
    for _ in range(trials):
        k = rng.randint(0, dim)
        a = random_form(dim, k, rng)
        for name, (op, pin, pout) in PARITY_LAWS.items():
            if op == "starS" and k > n:
                continue
            lhs = _apply(op, pin(a))
            rhs = pout(_apply(op, a))
            counts[name] += 1
            rep.require(lhs == rhs, f"{name} fails for {_fmt(a)}")
    rep.details = {"instances": counts}
    return rep.done()


def check_pm_equivalence(n: int, r: int, k: int) -> VerificationReport:
    rep = _Report("pm_equivalence", n=n, r=r, k=k)
    T = QuotientContext.simplex(n)
    A = basis_Pminus(n, r, k, T)
    B = basis_Pminus_afw(n, r, k, T)
    rep.require(equal_spans(A, B), f"spans differ (dims {A.dim}, {B.dim})")
    rep.details = {"dim": A.dim}
    return rep.done()


def frame_hodge_values(alpha: Form, u: Sequence[Fraction]) -> dict:
    """(*_S alpha)(f_J) computed intrinsically from alpha's values on an orthonormal frame."""
    from .forms import merge_sign

    frame = oracle.orthonormal_frame(u)
    n = len(frame)
    k = alpha.degree
    out = {}
    for I in itertools.combinations(range(n), k):
        J = tuple(j for j in range(n) if j not in I)
        val = oracle.evaluate(alpha, u, [frame[i] for i in I])
        out[J] = merge_sign(I, J) * val
    return out


def check_appendix_b(n: int, points: int = 10) -> VerificationReport:
    rep = _Report("appendix_b", n=n, points=points)
    dim = n + 1
    U = radial_field(dim)
    nu = conormal(dim)
    count = 0
    for k in range(dim + 1):
        for a in monomial_forms(dim, 2, k):
            lhs = interior_product(U, hodge_euclid(a))
            count += 1
            if k == dim:
                # a ^ nu = 0 in top degree, and i_X of a 0-form is zero
                rep.require(lhs.is_zero(), f"interior-star identity fails for {_fmt(a)}")
                continue
            rhs = hodge_euclid(wedge(a, nu))
            rep.require(lhs == rhs, f"interior-star identity fails for {_fmt(a)}")
    pts = oracle.sphere_points(n, points, seed=7)
    if n == 1:
        pts[0] = (Fraction(3, 5), Fraction(4, 5))
    frames = 0
    for k in range(n + 1):
        for alpha in monomial_forms(dim, 1, k):
            star = hodge_sphere(alpha)
            for u in pts:
                frame = oracle.orthonormal_frame(u)
                expected = frame_hodge_values(alpha, u)
                for J, val in expected.items():
                    got = oracle.evaluate(star, u, [frame[j] for j in J])
                    frames += 1
                    rep.require(got == val, f"frame star fails for {_fmt(alpha)} at {tuple(str(c) for c in u)}")
    rep.details = {"identity_instances": count, "frame_comparisons": frames}
    return rep.done()


def check_pmker(n: int, s: int, k: int) -> VerificationReport:
    rep = _Report("pmker", n=n, s=s, k=k)
    A = QuotientContext.ambient(n)
    K = kernel_iU(n, s, k)
    if k == 0:
        full = basis_P(n, s, 0, A)
        rep.require(equal_spans(K, full), "kernel is not all of P_s Lambda^0")
        if s >= 1:
            gens = list(basis_Pminus(n, s, 0, A).representatives) + [Form.constant(n + 1, 1)]
            plus = SpaceBasis(A, n, s, 0, "Pminus_plus_constants", tuple(independent(gens, A)))
            rep.require(equal_spans(K, plus), "kernel differs from P^- + constants")
    else:
        if s >= 1:
            target = basis_Pminus(n, s, k, A)
        else:
            target = SpaceBasis(A, n, s, k, "zero", ())
        rep.require(equal_spans(K, target), f"kernel (dim {K.dim}) differs from P^- (dim {target.dim})")
    rep.details = {"dim_kernel": K.dim}
    return rep.done()


def check_ringring_ambient(n: int, s: int, k: int) -> VerificationReport:
    """Divisibility by u_N of ambient double-ring bases and the quotient spaces."""
    rep = _Report("ringring_ambient", n=n, s=s, k=k)
    A = QuotientContext.ambient(n)
    dim = n + 1
    uN = (1,) * dim
    P = basis_ringring(n, s, k, A)
    direct = _ambient_ringring_direct(n, s, k)
    rep.require(P.dim == len(direct) and span_contains(P, direct), "u_N P_{s-n-1} differs from the vanishing forms")
    for b in P:
        ok = all(p.divisible_by(uN) for _, p in b.items())
        if rep.require(ok, f"{_fmt(b)} is not divisible by u_N"):
            q = b.map_coefficients(lambda p: p.divide_exact(uN))
            rep.require(q.poly_degree() <= s - n - 1, f"quotient of {_fmt(b)} has degree above {s - n - 1}")
    if s >= 1:
        M = basis_ringring_minus(n, s, k, A)
        if s - n - 1 >= 0:
            K = kernel_iU(n, s - n - 1, k)
            expected = [g.times(bubble(dim)) for g in K]
        else:
            expected = []
        ref = SpaceBasis(A, n, s, k, "bubble_kernel_iU", tuple(independent(expected, A)))
        rep.require(equal_spans(M, ref), f"P^- double-ring (dim {M.dim}) != u_N ker i_U (dim {ref.dim})")
        for b in M:
            ok = all(p.divisible_by(uN) for _, p in b.items())
            if rep.require(ok, f"{_fmt(b)} is not divisible by u_N"):
                q = b.map_coefficients(lambda p: p.divide_exact(uN))
                if k > 0:
                    rep.require(interior_product(radial_field(dim), q).is_zero(), f"quotient of {_fmt(b)} is not in ker i_U")
        rep.details["dim_minus"] = M.dim
    rep.details["dim"] = P.dim
    return rep.done()


def _ambient_ringring_direct(n: int, s: int, k: int) -> list[Form]:
    """Ambient forms of degree <= s whose coefficients vanish on every u_i = 0."""
    from .linalg import nullspace

    dim = n + 1
    gens = monomial_forms(dim, s, k)
    rows = []
    for g in gens:
        row = {}
        for i in range(dim):
            for I, p in g.items():
                for e, c in p.items():
                    if e[i] == 0:
                        row[(i, I, e)] = c
        rows.append(row)
    out = []
    for combo in nullspace(rows):
        f = Form.zero(dim, k)
        for j, c in sorted(combo.items()):
            f = f + gens[j].scale(c)
        out.append(f)
    return out


def check_ringring_sphere(n: int, s: int, k: int, minus: bool = False) -> VerificationReport:
    """Characterized double-ring sphere basis against the defining vanishing conditions."""
    rep = _Report("ringring_sphere", n=n, s=s, k=k, minus=minus)
    S = QuotientContext.sphere(n)
    B = basis_ringring_minus(n, s, k, S) if minus else basis_ringring(n, s, k, S)
    D = basis_ringring_direct(n, s, k, minus)
    rep.require(equal_spans(B, D), f"characterization (dim {B.dim}) != direct (dim {D.dim})")
    for b in B:
        rep.require(oracle.vanishes_on_hyperplanes_pointwise(b), f"{_fmt(b)} does not vanish on the hyperplanes")
    base = basis_Pminus(n, s, k, S) if minus else basis_P(n, s, k, S)
    rep.require(span_contains(base, B.representatives), "a member has too high degree")
    rep.details = {"dim": B.dim}
    return rep.done()


def check_no_extension_example(n: int) -> VerificationReport:
    """u_N vol_{S^n} lies in the degree-n double-ring sphere space but has no ambient extension."""
    rep = _Report("no_extension", n=n)
    dim = n + 1
    S = QuotientContext.sphere(n)
    A = QuotientContext.ambient(n)
    low = Form.monomial((0,) + (1,) * n, tuple(range(1, dim)))
    target = sphere_volume(dim).times(bubble(dim))
    sign = None
    for c in (1, -1):
        if is_zero_on(low - target.scale(c), S):
            sign = c
    rep.require(sign is not None, f"{_fmt(low)} is not +-u_N vol on the sphere")
    rep.require(membership(low, basis_ringring(n, n, n, S)) is not None, f"{_fmt(low)} not in the double-ring space")
    rep.require(oracle.vanishes_on_hyperplanes_pointwise(low), "representative does not vanish on the hyperplanes")
    amb = basis_ringring(n, n, n, A)
    direct = _ambient_ringring_direct(n, n, n)
    rep.require(amb.dim == 0 and not direct, f"ambient double-ring space has dimension {amb.dim}")
    # no ambient extension of degree n: the ambient space is zero, and the form is not
    rep.require(not is_zero_on(low, S), "the sphere form is zero")
    rep.details = {"sign": sign, "ambient_dim": amb.dim}
    return rep.done()


def check_example(which: str) -> VerificationReport:
    """The two worked n = 2 examples, all intermediates exact."""
    rep = _Report("example", which=which)
    n = 2
    if which == "P":
        a = parse_form("y*dy", n)
        want = {
            "alpha": "2*v^3*dv",
            "star": "2*u*v^3*dw - 2*v^3*w*du",
            "star_reduced": "2*u*v^3*dw - 2*v^3*w*du",
            "beta": "2*u^2*v^4*w*dw - 2*u*v^4*w^2*du",
            "b": "x*y^2*dz - y^2*z*dx",
        }
        space = basis_ring_minus(n, 3, 1)
    else:
        a = parse_form("x*dy - y*dx", n)
        want = {
            "alpha": "2*u^2*v*dv - 2*u*v^2*du",
            "star": "(2*u^3*v + 2*u*v^3)*dw - 2*u^2*v*w*du - 2*u*v^2*w*dv",
            "star_reduced": "2*u*v*dw",
            "beta": "2*u^2*v^2*w*dw",
            "b": "x*y*dz",
        }
        space = basis_ring(n, 2, 1)
    tr = duality_trace(a)
    for name, text in want.items():
        got = getattr(tr, name)
        rep.require(got == parse_form(text, n), f"{name} = {_fmt(got, 'x' if name == 'b' else 'u')}, expected {text}")
    rep.require(membership(tr.b, space) is not None, "output is not in the ring space")
    back = duality_map(tr.b, inverse=True)
    rep.require(is_zero_on(back - a, QuotientContext.simplex(n)), "inverse does not recover the input")
    value = pairing(a, tr.b)
    rep.require(value > 0, f"pairing {value} is not positive")
    rep.details = {"pairing": str(value)}
    return rep.done()


def dual_target(flavor: str, n: int, r: int, k: int) -> tuple[str, int, int]:
    """(flavor, r, k) of the ring space hit by the duality map.

    P_r Lambda^k goes to ring P^-_{r+k+1} Lambda^{n-k}, and P^-_r Lambda^k to
    ring P_{r+k} Lambda^{n-k}.
    """
    if flavor == "P":
        return "ring_Pminus", r + k + 1, n - k
    if flavor == "Pminus":
        return "ring_P", r + k, n - k
    raise ValueError(f"duality is defined on P and Pminus, not {flavor!r}")


def check_gram(n: int, r: int, k: int, flavor: str) -> VerificationReport:
    rep = _Report("gram", n=n, r=r, k=k, flavor=flavor)
    T = QuotientContext.simplex(n)
    basis = basis_P(n, r, k, T) if flavor == "P" else basis_Pminus(n, r, k, T)
    tf, tr, tk = dual_target(flavor, n, r, k)
    target = computed_basis(tf, n, tr, tk)
    for b in basis:
        d = duality_map(b)
        rep.require(membership(d, target) is not None, f"dual of {_fmt(b, 'x')} is outside {tf}_{tr}")
    M = gram_matrix(basis)
    try:
        pd = is_positive_definite(M)
    except ConsistencyError as exc:
        rep.require(False, str(exc))
        return rep.done()
    if not pd:
        minors = leading_principal_minors([list(r_) for r_ in M.entries])
        bad = next(i for i, m in enumerate(minors) if m <= 0)
        rep.require(False, f"leading minor {bad + 1} is {minors[bad]}")
    rep.details = {"size": M.size}
    return rep.done()


# dimensions


def formula_dimension(flavor: str, n: int, r: int, k: int) -> int:
    """Closed forms for the four simplex families (zero outside their ranges)."""
    C = _binom
    if flavor == "P":
        return C(r + n, r + k) * C(r + k, k)
    if flavor == "Pminus":
        return C(r + n, r + k) * C(r + k - 1, k) if r >= 1 else 0
    if flavor == "ring_P":
        return C(r + k, r) * C(r - 1, n - k) if r >= 1 else 0
    if flavor == "ring_Pminus":
        return C(r + k - 1, r - 1) * C(r - 1, n - k) if r >= 1 else 0
    raise ValueError(flavor)


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _eval_rows(gens: Sequence[Form], pts, tangents, k: int, tag) -> list[dict]:
    rows = []
    subsets = list(itertools.combinations(range(len(tangents)), k))
    for g in gens:
        row = {}
        for pi, p in enumerate(pts):
            for si, sub in enumerate(subsets):
                v = oracle.evaluate(g, p, [tangents[i] for i in sub])
                if v:
                    row[(tag, pi, si)] = v
        rows.append(row)
    return rows


def _rank(rows: Sequence[dict]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def oracle_dimension(flavor: str, n: int, r: int, k: int) -> int:
    """Brute-force dimension by evaluating generators at rational points."""
    dim = n + 1
    if k > n or (flavor != "P" and r < 1):
        return 0
    if flavor in ("P", "ring_P"):
        gens = monomial_forms(dim, r, k)
    else:
        gens = pminus_generators(dim, r, k)
    if not gens:
        return 0
    npts = len(gens) + 3
    whole = _rank(_eval_rows(gens, oracle.simplex_points(dim, None, npts, seed=11), oracle.simplex_tangents(dim), k, "T"))
    if flavor in ("P", "Pminus"):
        return whole
    face_rows = [dict() for _ in gens]
    for i in range(dim):
        act = [j for j in range(dim) if j != i]
        if k > len(act) - 1:
            continue
        rows = _eval_rows(gens, oracle.simplex_points(dim, act, npts, seed=13 + i), oracle.simplex_tangents(dim, act), k, i)
        for acc, row in zip(face_rows, rows):
            acc.update(row)
    return whole - _rank(face_rows)


def computed_basis(flavor: str, n: int, r: int, k: int) -> SpaceBasis:
    """One of the four simplex families; r < 1 gives the zero space for the last three."""
    T = QuotientContext.simplex(n)
    if flavor == "P":
        return basis_P(n, r, k, T)
    if flavor not in TABLE_FLAVORS:
        raise ValueError(flavor)
    if r < 1:
        return SpaceBasis(T, n, r, k, flavor, ())
    if flavor == "Pminus":
        return basis_Pminus(n, r, k, T)
    if flavor == "ring_P":
        return basis_ring(n, r, k)
    return basis_ring_minus(n, r, k)


def computed_dimension(flavor: str, n: int, r: int, k: int) -> int:
    return computed_basis(flavor, n, r, k).dim


TABLE_FLAVORS = ("P", "Pminus", "ring_P", "ring_Pminus")


def dim_table(n: int, r_max: int, with_oracle: bool = True) -> list[dict]:
    """One row per (flavor, r, k); discrepancies are flagged, never hidden."""
    rows = []
    for flavor in TABLE_FLAVORS:
        for r in range(0 if flavor == "P" else 1, r_max + 1):
            for k in range(n + 1):
                row = {
                    "flavor": flavor,
                    "n": n,
                    "r": r,
                    "k": k,
                    "computed": computed_dimension(flavor, n, r, k),
                    "formula": formula_dimension(flavor, n, r, k),
                }
                if with_oracle:
                    row["oracle"] = oracle_dimension(flavor, n, r, k)
                row["agree"] = row["computed"] == row["formula"] and row.get("oracle", row["computed"]) == row["computed"]
                rows.append(row)
    return rows


def check_dims(n: int, r_max: int) -> VerificationReport:
    rep = _Report("dims", n=n, r_max=r_max)
    table = dim_table(n, r_max)
    for row in table:
        rep.require(row["agree"], f"{row['flavor']} r={row['r']} k={row['k']}: computed {row['computed']}, formula {row['formula']}, oracle {row.get('oracle')}")
    rep.details = {"cells": len(table)}
    return rep.done()


# suites


SUITES = ("tsiso", "parity", "appendixA", "appendixB", "pmker", "examples", "gram", "ringring", "dims")


def suite_checks(suite: str, n: int, r_max: int = 3) -> list[tuple[str, Callable[[], VerificationReport]]]:
    """The (label, thunk) pairs making up one suite; ``all`` concatenates every suite."""
    if suite == "all":
        out = []
        for s in SUITES:
            out.extend(suite_checks(s, n, r_max))
        return out
    checks: list = []
    if suite == "tsiso":
        for which in (1, 2, 3, 4):
            for r in range(0 if which == 1 else 1, r_max + 1):
                for k in range(n + 1):
                    checks.append((f"tsiso{which}", lambda r=r, k=k, w=which: check_tsiso(n, r, k, w)))
    elif suite == "parity":
        checks.append(("parity", lambda: check_parity_laws(n, 100)))
    elif suite == "appendixA":
        for r in range(1, r_max + 1):
            for k in range(n + 1):
                checks.append(("pm_equivalence", lambda r=r, k=k: check_pm_equivalence(n, r, k)))
    elif suite == "appendixB":
        checks.append(("appendix_b", lambda: check_appendix_b(n)))
    elif suite == "pmker":
        for s in range(0, r_max + 2):
            for k in range(n + 2):
                checks.append(("pmker", lambda s=s, k=k: check_pmker(n, s, k)))
    elif suite == "examples":
        if n == 2:
            checks.append(("example", lambda: check_example("P")))
            checks.append(("example", lambda: check_example("Pminus")))
        checks.append(("no_extension", lambda: check_no_extension_example(n)))
    elif suite == "gram":
        for flavor in ("P", "Pminus"):
            for r in range(0 if flavor == "P" else 1, min(r_max, 2) + 1):
                for k in range(n + 1):
                    checks.append(("gram", lambda r=r, k=k, f=flavor: check_gram(n, r, k, f)))
    elif suite == "ringring":
        for s in range(0, n + 4):
            for k in range(n + 1):
                checks.append(("ringring_ambient", lambda s=s, k=k: check_ringring_ambient(n, s, k)))
                checks.append(("ringring_sphere", lambda s=s, k=k: check_ringring_sphere(n, s, k)))
                if s >= 1:
                    checks.append(("ringring_sphere", lambda s=s, k=k: check_ringring_sphere(n, s, k, True)))
    elif suite == "dims":
        checks.append(("dims", lambda: check_dims(n, r_max)))
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return checks


def run_suite(suite: str, n: int, r_max: int = 3) -> list[VerificationReport]:
    return [thunk() for _, thunk in suite_checks(suite, n, r_max)]
