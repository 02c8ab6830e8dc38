"""Hilbert series and Hilbert polynomial of S/I from the leading monomials of I.

The numerator N(t) of ``HS(S/I) = N(t) / (1-t)^n`` is computed by pivoting on
a variable: ``N(I) = N(I + (x)) + t * N(I : x)``, with the base case of
pairwise coprime generators ``N = prod (1 - t^deg m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import BudgetExceeded
from .poly import Monomial, monomials_of_degree

IntPoly = list  # coefficient list, index = power of t


def _padd(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pmul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _trim(a: IntPoly) -> IntPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generators of the monomial ideal, sorted."""
    gens = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def _numerator(gens: list[Monomial], n: int) -> IntPoly:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    counts = [0] * n
    for s in supports:
        for i in s:
            counts[i] += 1
    if max(counts) <= 1:
        out = [1]
        for g in gens:
            d = sum(g)
            factor = [1] + [0] * (d - 1) + [-1]
            out = _pmul(out, factor)
        return out
    # pivot on the variable shared by the most generators
    v = max(range(n), key=lambda i: (counts[i], -i))
    x = tuple(int(i == v) for i in range(n))
    plus = minimalize(gens + [x])
    colon = minimalize(tuple(max(e - (i == v), 0) for i, e in enumerate(g)) for g in gens)
    return _padd(_numerator(plus, n), _pmul([0, 1], _numerator(colon, n)))


@dataclass
class HilbertData:
    series_numerator: list[int]
    nvars: int
    reduced_numerator: list[int]
    pole_order: int
    hilbert_polynomial: list[Fraction]  # coefficients in the variable d, index = power

    @property
    def dimension(self) -> int:
        """Projective dimension; -1 for the irrelevant or unit ideal."""
        return len(self.hilbert_polynomial) - 1 if self.hilbert_polynomial else -1

    @property
    def genus(self) -> int | None:
        """Arithmetic genus (-1)^dim (P(0) - 1); None for the empty variety."""
        if self.dimension < 0:
            return None
        p0 = self.hilbert_polynomial[0]
        return int((-1) ** self.dimension * (p0 - 1))

    @property
    def regularity_index(self) -> int:
        """The Hilbert function equals the polynomial for every degree >= this."""
        return max(0, len(self.reduced_numerator) - self.pole_order)

    def polynomial_value(self, d: int) -> int:
        v = sum(c * d**k for k, c in enumerate(self.hilbert_polynomial))
        return int(v)

    def series_coefficients(self, upto: int) -> list[int]:
        """Hilbert function values h(0..upto) from the series."""
        n = self.nvars
        return [
            sum(c * comb(d - k + n - 1, n - 1) for k, c in enumerate(self.series_numerator) if k <= d)
            for d in range(upto + 1)
        ]


def _binomial_poly(shift: int, r: int) -> list[Fraction]:
    # C(d + shift + r, r) as a polynomial in d
    out = [Fraction(1)]
    for i in range(1, r + 1):
        out = [Fraction(0)] + out
        a = shift + i
        for k in range(len(out) - 1):
            out[k] += a * out[k + 1]
    fact = 1
    for i in range(2, r + 1):
        fact *= i
    return [c / fact for c in out]


def hilbert_series(leading_monomials: Sequence[Monomial], nvars: int) -> HilbertData:
    gens = minimalize(leading_monomials)
    num = _numerator(gens, nvars)
    red = list(num)
    pole = nvars
    # divide out (1 - t) while it divides
    while red and pole > 0 and sum(red) == 0:
        q, acc = [], 0
        for c in red[:-1]:
            acc += c
            q.append(acc)
        red = _trim(q)
        pole -= 1
    poly: list[Fraction] = []
    if red and pole > 0:
        poly = [Fraction(0)] * pole
        for k, c in enumerate(red):
            for i, b in enumerate(_binomial_poly(-k, pole - 1)):
                poly[i] += c * b
        while poly and poly[-1] == 0:
            poly.pop()
    return HilbertData(num, nvars, red, pole, poly)


def hilbert_function_bruteforce(
    leading_monomials: Sequence[Monomial], nvars: int, d: int, budget: int = 2_000_000
) -> int:
    """Count degree-d monomials outside the monomial ideal."""
    if comb(nvars + d - 1, d) > budget:
        raise BudgetExceeded(f"{comb(nvars + d - 1, d)} monomials exceed the budget of {budget}")
    gens = minimalize(leading_monomials)
    return sum(
        1 for m in monomials_of_degree(nvars, d) if not any(all(a <= b for a, b in zip(g, m)) for g in gens)
    )
