"""Exact sparse row echelon forms over the rationals.

Rows are dicts ``column -> value``.  Internally every row is scaled to a
primitive integer vector and elimination is fraction-free (cross
multiplication followed by content removal), which is far cheaper in Python
than :class:`~fractions.Fraction` arithmetic.

The pivot of a row is its largest column under ``key``; with a graded column
order this makes :meth:`Echelon.reduce` return the canonical smallest member
of a coset.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping


def _integerize(row: Mapping) -> tuple[dict, int]:
    """Scale ``row`` to integers; returns (int_row, scale) with int_row = scale * row."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // math.gcd(den, v.denominator)
    out = {}
    for c, v in row.items():
        if v:
            w = v * den
            out[c] = int(w) if isinstance(w, int) or w.denominator == 1 else w
    return out, den


def _content(row: dict) -> int:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


class Echelon:
    """Incrementally built echelon basis of a row space.

    With ``track=True`` each stored row remembers which combination of the
    inserted rows produced it, so membership queries can report coordinates.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None, track: bool = False):
        self.key = key or (lambda c: c)
        self.track = track
        self.rows: dict = {}  # pivot column -> (row, combo)
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _lead(self, row: dict):
        return max(row, key=self.key)

    def _eliminate(self, row: dict, combo: dict | None, scale):
        """Reduce ``row`` against the stored pivots; returns (row, combo, scale).

        Maintains ``row == scale * start + sum(combo[t] * inserted[t])`` where
        ``start`` is the row passed in; ``combo`` is skipped when None.
        """
        key = self.key
        scale = Fraction(scale)
        while row:
            candidates = [c for c in row if c in self.rows]
            if not candidates:
                break
            c = max(candidates, key=key)
            prow, pcombo = self.rows[c]
            a = prow[c]
            b = row[c]
            g = math.gcd(a, b)
            fa, fb = a // g, b // g
            new = {col: v * fa for col, v in row.items()}
            for col, v in prow.items():
                w = new.get(col, 0) - fb * v
                if w:
                    new[col] = w
                else:
                    new.pop(col, None)
            if combo is not None:
                nc = {t: v * fa for t, v in combo.items()}
                for t, v in pcombo.items():
                    w = nc.get(t, 0) - fb * v
                    if w:
                        nc[t] = w
                    else:
                        nc.pop(t, None)
                combo = nc
            scale *= fa
            row = new
            if row:
                g = _content(row)
                if combo is not None and g > 1:
                    for v in combo.values():
                        g = math.gcd(g, v)
                if g > 1:
                    row = {col: v // g for col, v in row.items()}
                    if combo is not None:
                        combo = {t: v // g for t, v in combo.items()}
                    scale /= g
        return row, combo, scale

    def add(self, row: Mapping, tag: Hashable | None = None) -> bool:
        """Insert a row; returns True when it increases the rank."""
        irow, den = _integerize(row)
        if tag is None:
            tag = self.count
        self.count += 1
        combo = {tag: den} if self.track else None
        red, combo, _ = self._eliminate(irow, combo, 1)
        if not red:
            return False
        g = _content(red)
        if combo is not None:
            for v in combo.values():
                g = math.gcd(g, v)
        if g > 1:
            red = {c: v // g for c, v in red.items()}
            if combo is not None:
                combo = {t: v // g for t, v in combo.items()}
        lead = self._lead(red)
        if red[lead] < 0:
            red = {c: -v for c, v in red.items()}
            if combo is not None:
                combo = {t: -v for t, v in combo.items()}
        self.rows[lead] = (red, combo or {})
        return True

    def reduce(self, row: Mapping) -> dict:
        """Canonical remainder of ``row`` modulo the stored row space (exact rationals)."""
        irow, den = _integerize(row)
        red, _, scale = self._eliminate(irow, None, 1)
        return {c: Fraction(v) / (scale * den) for c, v in red.items()}

    def contains(self, row: Mapping) -> bool:
        irow, _ = _integerize(row)
        red, _, _ = self._eliminate(irow, None, 1)
        return not red

    def solve(self, row: Mapping) -> dict | None:
        """Coefficients ``c`` (by tag) with ``row = sum c[tag] * inserted[tag]``, or None."""
        if not self.track:
            raise ValueError("solve() needs an Echelon built with track=True")
        irow, den = _integerize(row)
        red, combo, scale = self._eliminate(irow, {}, 1)
        if red:
            return None
        # 0 = scale*den*row + sum combo  =>  row = -sum combo / (scale*den)
        return {t: -Fraction(v) / (scale * den) for t, v in combo.items() if v}

    def basis_rows(self) -> list[dict]:
        return [dict(r) for r, _ in self.rows.values()]


def rank(rows: Iterable[Mapping]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def independent_subset(rows: Iterable[Mapping]) -> list[int]:
    """Indices of a greedily chosen maximal independent subset, in input order."""
    ech = Echelon()
    return [i for i, r in enumerate(rows) if ech.add(r)]


def nullspace(rows: list[Mapping]) -> list[dict]:
    """Basis of ``{c : sum_i c[i] * rows[i] = 0}`` as dicts ``i -> Fraction``."""
    ech = Echelon(track=True)
    kernel = []
    for i, r in enumerate(rows):
        irow, den = _integerize(r)
        red, combo, scale = ech._eliminate(irow, {i: den}, 1)
        if red:
            # independent: store it
            g = _content(red)
            for v in combo.values():
                g = math.gcd(g, v)
            if g > 1:
                red = {c: v // g for c, v in red.items()}
                combo = {t: v // g for t, v in combo.items()}
            lead = ech._lead(red)
            ech.rows[lead] = (red, combo)
        else:
            kernel.append({t: Fraction(v) for t, v in combo.items() if v})
    return kernel


def leading_principal_minors(matrix: list[list]) -> list[Fraction]:
    """Exact leading principal minors via fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return []
    den = 1
    for row in matrix:
        for v in row:
            v = Fraction(v)
            den = den * v.denominator // math.gcd(den, v.denominator)
    a = [[int(Fraction(v) * den) for v in row] for row in matrix]
    minors = []
    prev = 1
    for k in range(n):
        if k > 0:
            for i in range(k, n):
                for j in range(k, n):
                    a[i][j] = (a[i][j] * a[k - 1][k - 1] - a[i][k - 1] * a[k - 1][j]) // prev
            prev = a[k - 1][k - 1]
        # a[k][k] is now the (k+1)-th leading minor of the scaled matrix
        minors.append(Fraction(a[k][k], den ** (k + 1)))
        if a[k][k] == 0:
            # later minors would need a pivot; compute them directly instead
            for m in range(k + 2, n + 1):
                minors.append(determinant([row[:m] for row in matrix[:m]]))
            return minors
    return minors


def determinant(matrix: list[list]) -> Fraction:
    n = len(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det
