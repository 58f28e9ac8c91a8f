"""Text and JSON notation for forms.

Grammar accepted by :func:`parse_form` (whitespace is ignored)::

    expr    := term (("+" | "-") term)*
    term    := factor (("*" | "^") factor)*
    factor  := ("-" | "+") factor | power
    power   := primary ("^" INT)*
    primary := INT ("/" INT)? | VAR | DIFF | "(" expr ")"

``^`` followed by an integer literal is a power, otherwise it is the wedge
product (as is ``*``).  Variables are ``x1..x9`` or ``u1..u9``; for n <= 2 the
letters ``x, y, z`` and ``u, v, w`` are accepted as aliases.  Differentials
are written ``dx1``, ``dy``, ``du2`` and so on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactpoly import Polynomial, format_coefficient, format_monomial, grlex_key
from .forms import Form, wedge

ALIASES = {"x": ("x", "y", "z"), "u": ("u", "v", "w")}


class ParseError(ValueError):
    """Malformed expression; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class CoordinateError(ValueError):
    """An expression mixes x- and u-coordinates, or names a missing coordinate."""


def variable_names(dim: int, coords: str) -> list[str]:
    """Output names: letters for n = 2, indexed names otherwise."""
    if dim == 3:
        return list(ALIASES[coords][:dim])
    return [f"{coords}{i + 1}" for i in range(dim)]


def differential_names(dim: int, coords: str) -> list[str]:
    return ["d" + v for v in variable_names(dim, coords)]


def format_form(f: Form, coords: str = "x") -> str:
    """Canonical text: terms by descending graded-lex monomial, then index set."""
    if f.is_zero():
        return "0"
    names = variable_names(f.dim, coords)
    dnames = differential_names(f.dim, coords)
    terms = sorted(f.terms(), key=lambda t: (_neg_key(grlex_key(t[1])), t[0]))
    pieces = []
    for pos, (I, e, c) in enumerate(terms):
        factors = []
        mag = abs(Fraction(c))
        mono = format_monomial(e, names)
        diff = "^".join(dnames[i] for i in I)
        if mag != 1 or (not mono and not diff):
            factors.append(format_coefficient(mag))
        if mono:
            factors.append(mono)
        if diff:
            factors.append(diff)
        body = "*".join(factors)
        if pos == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


def _neg_key(key):
    total, exps = key
    return (-total, tuple(-a for a in exps))


# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z]+\d*)|(?P<op>[-+*^/()]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


@dataclass(frozen=True)
class FormExpression:
    """A parsed expression together with the coordinate system it used."""

    source: str
    form: Form
    coords: Optional[str]  # "x", "u", or None when no variable appears


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.dim = n + 1
        self.toks = _tokenize(text)
        self.i = 0
        self.coords: Optional[str] = None

    def peek(self, offset: int = 0) -> _Tok:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text:
            raise ParseError(f"expected {text!r}", t.pos)
        return self.take()

    def parse(self) -> Form:
        if self.peek().kind == "end":
            raise ParseError("empty expression", 0)
        f = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", t.pos)
        return f

    def _add(self, a: Form, b: Form, pos: int) -> Form:
        if a.degree != b.degree:
            if a.is_zero() and a.degree == 0:
                return b
            if b.is_zero() and b.degree == 0:
                return a
            raise ParseError(f"cannot add a {a.degree}-form and a {b.degree}-form", pos)
        return a + b

    def expr(self) -> Form:
        f = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take()
            g = self.term()
            f = self._add(f, g if op.text == "+" else -g, op.pos)
        return f

    def term(self) -> Form:
        f = self.factor()
        while self.peek().text in ("*", "^"):
            self.take()
            g = self.factor()
            if f.degree + g.degree > self.dim:
                f = Form.zero(self.dim, f.degree + g.degree)
            else:
                f = wedge(f, g)
        return f

    def factor(self) -> Form:
        t = self.peek()
        if t.text == "-":
            self.take()
            return -self.factor()
        if t.text == "+":
            self.take()
            return self.factor()
        return self.power()

    def power(self) -> Form:
        f = self.primary()
        while self.peek().text == "^" and self.peek(1).kind == "num":
            op = self.take()
            k = int(self.take().text)
            if f.degree != 0:
                raise ParseError("a differential cannot be raised to a power", op.pos)
            f = Form.scalar(f.coefficient(()) ** k)
        return f

    def primary(self) -> Form:
        t = self.peek()
        if t.kind == "num":
            self.take()
            value = Fraction(int(t.text))
            if self.peek().text == "/" and self.peek(1).kind == "num":
                self.take()
                den = self.take()
                if int(den.text) == 0:
                    raise ParseError("division by zero", den.pos)
                value /= int(den.text)
            return Form.constant(self.dim, value)
        if t.kind == "name":
            self.take()
            return self.name(t)
        if t.text == "(":
            self.take()
            f = self.expr()
            self.expect(")")
            return f
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected {t.text!r}", t.pos)

    def _coordinate(self, name: str, pos: int) -> tuple[str, int]:
        if len(name) > 1:
            if name[0] not in ("x", "u") or not name[1:].isdigit():
                raise ParseError(f"unknown name {name!r}", pos)
            coords, idx = name[0], int(name[1:]) - 1
        else:
            for coords, letters in ALIASES.items():
                if name in letters:
                    idx = letters.index(name)
                    break
            else:
                raise ParseError(f"unknown name {name!r}", pos)
            if self.dim > 3:
                raise CoordinateError(f"letter {name!r} is only an alias when n <= 2")
        if not 0 <= idx < self.dim:
            raise CoordinateError(f"coordinate {name!r} does not exist for n = {self.dim - 1}")
        if self.coords is None:
            self.coords = coords
        elif self.coords != coords:
            raise CoordinateError("expression mixes x- and u-coordinates")
        return coords, idx

    def name(self, t: _Tok) -> Form:
        text = t.text
        if text.startswith("d") and len(text) > 1:
            _, idx = self._coordinate(text[1:], t.pos + 1)
            return Form.differential(self.dim, idx)
        _, idx = self._coordinate(text, t.pos)
        return Form.scalar(Polynomial.variable(self.dim, idx))


def parse_expression(text: str, n: int) -> FormExpression:
    p = _Parser(text, n)
    form = p.parse()
    return FormExpression(text, form, p.coords)


def parse_form(text: str, n: int) -> Form:
    """Parse ``text`` into a form on R^(n+1)."""
    return parse_expression(text, n).form


# JSON encoding


def form_to_json(f: Form) -> list:
    """Canonical JSON-ready list; indices are 1-based, rationals are strings."""
    out = []
    for I in sorted(I for I, _ in f.items()):
        p = f.coefficient(I)
        coeff = []
        for e, c in p.sorted_terms():
            c = Fraction(c)
            coeff.append({"exps": list(e), "num": str(c.numerator), "den": str(c.denominator)})
        out.append({"indices": [i + 1 for i in I], "coeff": coeff})
    return out


def form_from_json(data: list, dim: int, degree: int) -> Form:
    coeffs = {}
    for entry in data:
        I = tuple(i - 1 for i in entry["indices"])
        terms = {tuple(t["exps"]): Fraction(int(t["num"]), int(t["den"])) for t in entry["coeff"]}
        coeffs[I] = Polynomial(dim, terms)
    return Form(dim, degree, coeffs)
