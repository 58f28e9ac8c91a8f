"""Polynomial differential forms on R^(n+1).

A :class:`Form` of degree ``k`` maps strictly increasing index tuples
``I`` (0-based) to :class:`~feecsphere.exactpoly.Polynomial` coefficients,
representing ``sum_I p_I du_I``.  The positive orientation is
``du_0 ^ ... ^ du_n`` and the Hodge star is fixed by ``e_I ^ *e_I = vol``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .exactpoly import DimensionError, Polynomial, Rational

Index = tuple  # strictly increasing tuple of 0-based coordinate indices


def merge_sign(I: Sequence[int], J: Sequence[int]) -> int:
    """Sign of the shuffle sorting ``I + J``; 0 when they share an index."""
    # I and J sorted; count pairs (i in I, j in J) with i > j
    pos = 0
    inversions = 0
    for i in I:
        while pos < len(J) and J[pos] < i:
            pos += 1
        if pos < len(J) and J[pos] == i:
            return 0
        inversions += pos
    return -1 if inversions % 2 else 1


def complement(I: Sequence[int], dim: int) -> Index:
    s = set(I)
    return tuple(j for j in range(dim) if j not in s)


def index_sets(dim: int, k: int) -> list[Index]:
    return list(itertools.combinations(range(dim), k))


class Form:
    """Immutable homogeneous-degree differential form with polynomial coefficients."""

    __slots__ = ("dim", "degree", "_coeffs", "_hash")

    def __init__(self, dim: int, degree: int, coeffs: Mapping[Sequence[int], Polynomial] | None = None):
        if degree < 0 or (degree > dim and coeffs):
            raise DimensionError(f"form degree {degree} outside [0, {dim}]")
        self.dim = dim
        self.degree = degree
        clean: dict = {}
        for I, p in (coeffs or {}).items():
            I = tuple(I)
            if len(I) != degree or list(I) != sorted(set(I)) or (I and not 0 <= I[0] <= I[-1] < dim):
                raise DimensionError(f"bad index set {I} for a {degree}-form in {dim} variables")
            if p.nvars != dim:
                raise DimensionError("coefficient lives in the wrong number of variables")
            if p:
                clean[I] = p
        self._coeffs = clean
        self._hash = None

    @classmethod
    def _raw(cls, dim: int, degree: int, coeffs: dict) -> "Form":
        f = cls.__new__(cls)
        f.dim = dim
        f.degree = degree
        f._coeffs = coeffs
        f._hash = None
        return f

    @classmethod
    def zero(cls, dim: int, degree: int) -> "Form":
        return cls._raw(dim, degree, {})

    @classmethod
    def scalar(cls, p: Polynomial) -> "Form":
        return cls(p.nvars, 0, {(): p})

    @classmethod
    def constant(cls, dim: int, c: Rational) -> "Form":
        return cls.scalar(Polynomial.constant(dim, c))

    @classmethod
    def differential(cls, dim: int, *indices: int, coeff: Polynomial | Rational = 1) -> "Form":
        """``coeff * du_{i1} ^ du_{i2} ^ ...`` with the indices in the given order."""
        if not isinstance(coeff, Polynomial):
            coeff = Polynomial.constant(dim, coeff)
        order = sorted(indices)
        if len(set(order)) != len(order):
            return cls.zero(dim, len(indices))
        sign = _permutation_sign(indices)
        return cls(dim, len(order), {tuple(order): coeff.scale(sign)})

    @classmethod
    def monomial(cls, exps: Sequence[int], I: Sequence[int], c: Rational = 1) -> "Form":
        return cls(len(exps), len(I), {tuple(I): Polynomial.monomial(exps, c)})

    # inspection

    def items(self) -> Iterator[tuple[Index, Polynomial]]:
        return iter(self._coeffs.items())

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, I: Sequence[int]) -> Polynomial:
        return self._coeffs.get(tuple(I), Polynomial.zero(self.dim))

    def terms(self) -> Iterator[tuple[Index, tuple, Rational]]:
        """Flat iteration over ``(I, exponents, coefficient)``."""
        for I, p in self._coeffs.items():
            for e, c in p.items():
                yield I, e, c

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def poly_degree(self) -> int:
        return max((p.degree() for p in self._coeffs.values()), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, Form):
            return self.dim == other.dim and self.degree == other.degree and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, self.degree, frozenset(self._coeffs.items())))
        return self._hash

    def _check(self, other: "Form") -> None:
        if not isinstance(other, Form):
            raise TypeError(f"expected Form, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionError(f"ambient dimensions {self.dim} and {other.dim} differ")

    # vector space structure

    def __add__(self, other: "Form") -> "Form":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        if other.degree != self.degree:
            raise DimensionError(f"cannot add a {self.degree}-form and a {other.degree}-form")
        out = dict(self._coeffs)
        for I, p in other._coeffs.items():
            s = out[I] + p if I in out else p
            if s:
                out[I] = s
            else:
                out.pop(I, None)
        return Form._raw(self.dim, self.degree, out)

    __radd__ = __add__

    def __neg__(self) -> "Form":
        return Form._raw(self.dim, self.degree, {I: -p for I, p in self._coeffs.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def scale(self, c: Rational) -> "Form":
        if not c:
            return Form.zero(self.dim, self.degree)
        return Form._raw(self.dim, self.degree, {I: p.scale(c) for I, p in self._coeffs.items()})

    def times(self, p: Polynomial) -> "Form":
        """Multiply every coefficient by the scalar polynomial ``p``."""
        out = {}
        for I, q in self._coeffs.items():
            r = q * p
            if r:
                out[I] = r
        return Form._raw(self.dim, self.degree, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return self.times(other)
        if isinstance(other, Form):
            return wedge(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return self.times(other)
        return NotImplemented

    def __xor__(self, other: "Form") -> "Form":
        return wedge(self, other)

    def map_coefficients(self, fn) -> "Form":
        out = {}
        for I, p in self._coeffs.items():
            q = fn(p)
            if q:
                out[I] = q
        return Form._raw(self.dim, self.degree, out)

    def __repr__(self) -> str:
        return f"Form(dim={self.dim}, degree={self.degree}, {self._coeffs!r})"

    def __str__(self) -> str:
        from .notation import format_form

        return format_form(self, "u")


def _permutation_sign(seq: Sequence[int]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class PolyVectorField:
    """Vector field ``sum_i components[i] d/du_i`` with polynomial components."""

    components: tuple

    def __post_init__(self):
        dims = {p.nvars for p in self.components}
        if dims != {len(self.components)}:
            raise DimensionError("vector field needs one component per variable")

    @property
    def dim(self) -> int:
        return len(self.components)


def wedge(a: Form, b: Form) -> Form:
    a._check(b)
    k = a.degree + b.degree
    if k > a.dim:
        return Form.zero(a.dim, k)
    out: dict = {}
    for I, p in a._coeffs.items():
        for J, q in b._coeffs.items():
            s = merge_sign(I, J)
            if not s:
                continue
            K = tuple(sorted(I + J))
            term = p * q
            if s < 0:
                term = -term
            out[K] = out[K] + term if K in out else term
    return Form._raw(a.dim, k, {K: p for K, p in out.items() if p})


def exterior_derivative(a: Form) -> Form:
    k = a.degree + 1
    if k > a.dim:
        return Form.zero(a.dim, k)
    out: dict = {}
    for I, p in a._coeffs.items():
        for j in range(a.dim):
            if j in I:
                continue
            dp = p.diff(j)
            if not dp:
                continue
            # du_j ^ du_I: move j past the indices smaller than it
            pos = sum(1 for i in I if i < j)
            K = tuple(sorted(I + (j,)))
            if pos % 2:
                dp = -dp
            out[K] = out[K] + dp if K in out else dp
    return Form._raw(a.dim, k, {K: p for K, p in out.items() if p})


def interior_product(V: PolyVectorField, a: Form) -> Form:
    if V.dim != a.dim:
        raise DimensionError("vector field and form live in different dimensions")
    if a.degree == 0:
        return Form.zero(a.dim, 0)
    out: dict = {}
    for I, p in a._coeffs.items():
        for m, i in enumerate(I):
            comp = V.components[i]
            if not comp:
                continue
            term = p * comp
            if m % 2:
                term = -term
            K = I[:m] + I[m + 1:]
            out[K] = out[K] + term if K in out else term
    return Form._raw(a.dim, a.degree - 1, {K: p for K, p in out.items() if p})


def hodge_euclid(a: Form) -> Form:
    out = {}
    for I, p in a._coeffs.items():
        J = complement(I, a.dim)
        out[J] = p if merge_sign(I, J) > 0 else -p
    return Form._raw(a.dim, a.dim - a.degree, out)


def reflect(i: int, a: Form) -> Form:
    """Pullback under the reflection ``u_i -> -u_i``."""
    if not 0 <= i < a.dim:
        raise DimensionError(f"coordinate index {i} out of range")
    out = {}
    for I, p in a._coeffs.items():
        q = p.negate_variable(i)
        out[I] = -q if i in I else q
    return Form._raw(a.dim, a.degree, out)


def character(I: Sequence[int], exps: Sequence[int]) -> tuple:
    """Reflection character: entry i is 1 when the term flips sign under R_i."""
    s = set(I)
    return tuple((e + (j in s)) % 2 for j, e in enumerate(exps))


def _filter_terms(a: Form, keep) -> Form:
    out = {}
    for I, p in a._coeffs.items():
        q = Polynomial._raw(a.dim, {e: c for e, c in p.items() if keep(character(I, e))})
        if q:
            out[I] = q
    return Form._raw(a.dim, a.degree, out)


def even_part(a: Form) -> Form:
    return _filter_terms(a, lambda ch: not any(ch))


def odd_part(a: Form) -> Form:
    return _filter_terms(a, all)


def reflection_average(a: Form, signed: bool = False) -> Form:
    """Average of ``a`` over all 2^(n+1) reflection combinations (optionally signed)."""
    total = Form.zero(a.dim, a.degree)
    for eps in itertools.product((0, 1), repeat=a.dim):
        b = a
        for i, flag in enumerate(eps):
            if flag:
                b = reflect(i, b)
        if signed and sum(eps) % 2:
            b = -b
        total = total + b
    return total.scale(Fraction(1, 2**a.dim))


def is_even(a: Form) -> bool:
    return all(not any(character(I, e)) for I, e, _ in a.terms())


def is_odd(a: Form) -> bool:
    return all(all(character(I, e)) for I, e, _ in a.terms())


# standard fields and forms


def coordinate(dim: int, i: int) -> Polynomial:
    return Polynomial.variable(dim, i)


def radial_field(dim: int) -> PolyVectorField:
    """X = sum x_i d/dx_i (equivalently U in u-coordinates)."""
    return PolyVectorField(tuple(Polynomial.variable(dim, i) for i in range(dim)))


def gradient_of_sum(dim: int) -> PolyVectorField:
    return PolyVectorField(tuple(Polynomial.constant(dim, 1) for _ in range(dim)))


def coordinate_sum(dim: int) -> Polynomial:
    """t = x_1 + ... + x_(n+1)."""
    t = Polynomial.zero(dim)
    for i in range(dim):
        t = t + Polynomial.variable(dim, i)
    return t


def koszul_field(dim: int) -> PolyVectorField:
    """V_kappa = X - t/(n+1) grad t, tangent to the slices t = const."""
    shift = coordinate_sum(dim).scale(Fraction(1, dim))
    return PolyVectorField(tuple(Polynomial.variable(dim, i) - shift for i in range(dim)))


def conormal(dim: int) -> Form:
    """nu = sum u_i du_i."""
    return Form(dim, 1, {(i,): Polynomial.variable(dim, i) for i in range(dim)})


def bubble(dim: int) -> Polynomial:
    """u_N = u_1 * ... * u_(n+1)."""
    return Polynomial.monomial((1,) * dim)


def volume(dim: int) -> Form:
    return Form(dim, dim, {tuple(range(dim)): Polynomial.constant(dim, 1)})


def standard_fields(n: int) -> dict:
    dim = n + 1
    X = radial_field(dim)
    return {"X": X, "U": X, "grad_t": gradient_of_sum(dim), "V_kappa": koszul_field(dim)}


def standard_forms(n: int) -> dict:
    dim = n + 1
    return {"nu": conormal(dim), "bubble": Form.scalar(bubble(dim)), "vol": volume(dim)}


def lie_derivative_radial(a: Form) -> Form:
    """Cartan formula i_U d a + d i_U a for the radial field U."""
    U = radial_field(a.dim)
    first = interior_product(U, exterior_derivative(a)) if a.degree < a.dim else Form.zero(a.dim, a.degree)
    second = exterior_derivative(interior_product(U, a)) if a.degree > 0 else Form.zero(a.dim, a.degree)
    return first + second


def pullback(a: Form, subs: Sequence[Polynomial]) -> Form:
    """Pullback along the polynomial map ``x_j = subs[j](y)``.

    ``subs`` has one entry per variable of ``a``; the result lives in the
    variables of the substitution polynomials.
    """
    if len(subs) != a.dim:
        raise DimensionError("need one component per source variable")
    target = subs[0].nvars
    dF = [exterior_derivative(Form.scalar(s)) for s in subs]
    out = Form.zero(target, a.degree)
    for I, p in a._coeffs.items():
        piece = Form.scalar(p.compose(subs))
        for i in I:
            piece = wedge(piece, dF[i])
        out = out + piece
    return out
