"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` lives in a fixed number of variables and stores a map
from exponent tuples to coefficients.  Coefficients are kept as ``int`` when
integral and :class:`fractions.Fraction` otherwise; both compare and hash
exactly, so the distinction is invisible to callers.

Whether the variables mean ``x_i`` or ``u_i`` is not recorded here.  The chart
module decides that.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Exps = Tuple[int, ...]
Rational = Union[int, Fraction]


class DimensionError(ValueError):
    """Operands live in different numbers of variables."""


class ParityError(ValueError):
    """A polynomial or form does not have the parity an operation requires."""


class DivisibilityError(ValueError):
    """Exact division was requested but some term is not divisible."""


def _norm(c) -> Rational:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def grlex_key(exps: Exps):
    """Sort key for graded lexicographic order (larger key = larger monomial)."""
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial over the rationals in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exps, Rational] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise DimensionError(f"exponent {e} does not have length {nvars}")
                if c:
                    clean[tuple(e)] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Rational) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: Rational = 1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): c})

    # inspection

    @property
    def terms(self) -> dict:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exps, Rational]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Exps, Rational]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return Fraction(self._terms.get(tuple(exps), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    # equality

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # ring operations

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionError(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Rational) -> "Polynomial":
        c = _norm(c)
        if not c:
            return Polynomial.zero(self.nvars)
        if c == 1:
            return self
        return Polynomial._raw(self.nvars, {e: _norm(v * c) for e, v in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.nvars != self.nvars:
            raise DimensionError(f"{self.nvars} vs {other.nvars} variables")
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "Polynomial":
        if m < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def mul_monomial(self, exps: Sequence[int], c: Rational = 1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise DimensionError("monomial length mismatch")
        c = _norm(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): _norm(v * c) for e, v in self._terms.items()},
        )

    # calculus and substitution

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial._raw(self.nvars, out)

    def eval(self, point: Sequence) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.nvars:
            raise DimensionError(f"point has length {len(point)}, expected {self.nvars}")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, k in zip(pt, e):
                if k:
                    term *= v**k
            total += term
        return total

    def compose(self, subs: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``subs[i]`` for variable ``i``; the result lives in ``subs``' ring."""
        if len(subs) != self.nvars:
            raise DimensionError("need one substitution per variable")
        target = subs[0].nvars if subs else 0
        powers: dict = {}

        def power(i: int, k: int) -> Polynomial:
            key = (i, k)
            if key not in powers:
                powers[key] = subs[i] ** k
            return powers[key]

        out = Polynomial.zero(target)
        for e, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def substitute_squares(self) -> "Polynomial":
        """Return p(u_1^2, ..., u_m^2)."""
        return Polynomial._raw(
            self.nvars, {tuple(2 * a for a in e): c for e, c in self._terms.items()}
        )

    def unsquare(self) -> "Polynomial":
        """Inverse of :meth:`substitute_squares`; every exponent must be even."""
        out = {}
        for e, c in self._terms.items():
            if any(a % 2 for a in e):
                raise ParityError(f"term with exponents {e} is not even in every variable")
            out[tuple(a // 2 for a in e)] = c
        return Polynomial._raw(self.nvars, out)

    def negate_variable(self, i: int) -> "Polynomial":
        return Polynomial._raw(
            self.nvars, {e: (-c if e[i] % 2 else c) for e, c in self._terms.items()}
        )

    def homogeneous_components(self) -> list["Polynomial"]:
        """``[p_0, ..., p_s]`` with ``p_j`` homogeneous of degree ``j``; ``[]`` for zero."""
        s = self.degree()
        buckets: list[dict] = [{} for _ in range(s + 1)]
        for e, c in self._terms.items():
            buckets[sum(e)][e] = c
        return [Polynomial._raw(self.nvars, b) for b in buckets]

    def homogenize_parity(self, s: int) -> "Polynomial":
        """Multiply each degree-j component by (u_1^2+...+u_m^2)^((s-j)/2).

        The result is homogeneous of degree ``s`` and agrees with ``self`` on the
        unit sphere.  Every term must have degree <= s of the same parity as s.
        """
        for e in self._terms:
            d = sum(e)
            if d > s or (s - d) % 2:
                raise ParityError(f"term {e} of degree {d} cannot be homogenized to degree {s}")
        out = Polynomial.zero(self.nvars)
        for j, comp in enumerate(self.homogeneous_components()):
            if comp:
                out = out + comp * radius_squared_power(self.nvars, (s - j) // 2)
        return out

    def divide_exact(self, exps: Sequence[int]) -> "Polynomial":
        """Exact quotient by the monomial with exponents ``exps``."""
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise DimensionError("monomial length mismatch")
        out = {}
        for e, c in self._terms.items():
            q = tuple(a - b for a, b in zip(e, exps))
            if min(q, default=0) < 0:
                raise DivisibilityError(f"term {c}*{e} is not divisible by monomial {exps}")
            out[q] = c
        return Polynomial._raw(self.nvars, out)

    def divisible_by(self, exps: Sequence[int]) -> bool:
        return all(all(a >= b for a, b in zip(e, exps)) for e in self._terms)

    def content_denominator(self) -> int:
        """Least common multiple of coefficient denominators."""
        d = 1
        for c in self._terms.values():
            if isinstance(c, Fraction):
                d = d * c.denominator // math.gcd(d, c.denominator)
        return d

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {dict(self.sorted_terms())!r})"

    def __str__(self) -> str:
        names = [f"u{i + 1}" for i in range(self.nvars)]
        return format_polynomial(self, names)


@lru_cache(maxsize=None)
def radius_squared_power(nvars: int, m: int) -> Polynomial:
    """(u_1^2 + ... + u_nvars^2)^m."""
    rsq = Polynomial(
        nvars, {tuple(2 if j == i else 0 for j in range(nvars)): 1 for i in range(nvars)}
    )
    return rsq**m


def format_monomial(exps: Exps, names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, exps):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_coefficient(c: Rational) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, names: Sequence[str]) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for i, (e, c) in enumerate(p.sorted_terms()):
        mono = format_monomial(e, names)
        mag = abs(Fraction(c))
        if mono:
            body = mono if mag == 1 else f"{format_coefficient(mag)}*{mono}"
        else:
            body = format_coefficient(mag)
        if i == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


def monomials_up_to(nvars: int, degree: int) -> Iterable[Exps]:
    """All exponent tuples of total degree <= ``degree``, by ascending degree."""
    for d in range(degree + 1):
        yield from monomials_of_degree(nvars, d)


def monomials_of_degree(nvars: int, d: int) -> Iterable[Exps]:
    # ascending in reversed-lex so that x1 comes before x2 at degree one
    if nvars == 0:
        if d == 0:
            yield ()
        return
    out = []

    def rec(prefix: list, remaining: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for a in range(remaining, -1, -1):
            rec(prefix + [a], remaining - a, slots - 1)

    rec([], d, nvars)
    yield from out
