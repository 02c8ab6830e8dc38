"""Buchberger's algorithm, reduced Groebner bases and normal forms (glex).

Internally monomials are packed into single integers: the total degree sits
in the most significant field, followed by the exponents with the first
variable most significant. Integer order is then glex order, multiplication
is addition, and divisibility is one subtraction against guard bits.
"""

from __future__ import annotations

import heapq
import logging
from typing import Sequence

from .errors import EmptyInput, RingMismatch
from .poly import Monomial, Poly, Ring
from .scalar import Field

log = logging.getLogger(__name__)

FIELD_BITS = 16  # per exponent; the top bit of each field is a guard bit


class Packing:
    def __init__(self, nvars: int):
        self.nvars = nvars
        self.shifts = [FIELD_BITS * (nvars - 1 - i) for i in range(nvars)]
        self.deg_shift = FIELD_BITS * nvars
        guard = 1 << (FIELD_BITS - 1)
        self.guard = sum(guard << (FIELD_BITS * k) for k in range(nvars + 1))
        self.limit = guard

    def pack(self, m: Monomial) -> int:
        d = sum(m)
        if d >= self.limit:
            raise OverflowError(f"degree {d} too large for packed monomials")
        k = d << self.deg_shift
        for e, s in zip(m, self.shifts):
            k |= e << s
        return k

    def unpack(self, k: int) -> Monomial:
        mask = (1 << FIELD_BITS) - 1
        return tuple((k >> s) & mask for s in self.shifts)

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.pack(tuple(max(x, y) for x, y in zip(self.unpack(a), self.unpack(b))))

    def coprime(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.unpack(a), self.unpack(b)))


def _pack_terms(pk: Packing, terms: dict) -> dict:
    return {pk.pack(m): c for m, c in terms.items()}


def _unpack_terms(pk: Packing, terms: dict) -> dict:
    return {pk.unpack(k): c for k, c in terms.items()}


class _Reducer:
    """Monic divisors ``(lm, tail)`` prepared for repeated division; all monomials packed."""

    def __init__(self, field: Field, pk: Packing, polys: Sequence[dict] = ()):
        self.field = field
        self.pk = pk
        self.lms: list[int] = []
        self.tails: list[list] = []
        for terms in polys:
            self.add(terms)

    def add(self, terms: dict):
        lm = max(terms)
        self.lms.append(lm)
        self.tails.append([(m, c) for m, c in terms.items() if m != lm])

    def find_divisor(self, m: int, skip: int = -1) -> int:
        g = self.pk.guard
        mg = m | g
        for idx, lm in enumerate(self.lms):
            if (mg - lm) & g == g and idx != skip:
                return idx
        return -1

    def reduce(self, terms: dict, skip: int = -1) -> dict:
        """Full remainder of ``terms``; the largest reducible term is always rewritten first."""
        p = self.field.modulus
        poly = dict(terms)
        rem: dict = {}
        heap = [-m for m in poly]
        heapq.heapify(heap)
        lms, tails = self.lms, self.tails
        g = self.pk.guard
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            m = -pop(heap)
            c = poly.pop(m, None)
            if c is None:
                continue
            mg = m | g
            for idx, lm in enumerate(lms):
                if (mg - lm) & g == g and idx != skip:
                    break
            else:
                rem[m] = c
                continue
            q = m - lms[idx]
            for tm, tc in tails[idx]:
                t = tm + q
                old = poly.get(t)
                if p is None:
                    new = -c * tc if old is None else old - c * tc
                else:
                    new = (-c * tc if old is None else old - c * tc) % p
                if old is None:
                    push(heap, -t)
                    poly[t] = new
                elif new:
                    poly[t] = new
                else:
                    del poly[t]
        return rem


def _monic(field: Field, terms: dict) -> dict:
    lc = terms[max(terms)]
    if lc == field.one:
        return dict(terms)
    inv = field.inv(lc)
    return {m: field.mul(inv, c) for m, c in terms.items()}


def _s_polynomial(field: Field, pk: Packing, a: dict, b: dict) -> dict:
    la, lb = max(a), max(b)
    lcm = pk.lcm(la, lb)
    qa, qb = lcm - la, lcm - lb
    ca, cb = field.inv(a[la]), field.inv(b[lb])
    out = {m + qa: field.mul(ca, c) for m, c in a.items()}
    for m, c in b.items():
        t = m + qb
        v = field.sub(out.get(t, field.zero), field.mul(cb, c))
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def s_polynomial(f: Poly, g: Poly) -> Poly:
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    pk = Packing(f.ring.nvars)
    s = _s_polynomial(f.ring.field, pk, _pack_terms(pk, f.terms), _pack_terms(pk, g.terms))
    return Poly(f.ring, _unpack_terms(pk, s), _trusted=True)


class GroebnerIdeal:
    """An ideal together with its reduced Groebner basis (monic, sorted by leading term)."""

    def __init__(self, ring: Ring, generators: Sequence[Poly], reduced_basis: Sequence[Poly]):
        self.ring = ring
        self.generators = list(generators)
        self.reduced_basis = list(reduced_basis)
        self._pk = Packing(ring.nvars)
        self._reducer = _Reducer(ring.field, self._pk, [_pack_terms(self._pk, g.terms) for g in self.reduced_basis])

    def __getstate__(self):
        return {"ring": self.ring, "generators": self.generators, "reduced_basis": self.reduced_basis}

    def __setstate__(self, state):
        self.__init__(state["ring"], state["generators"], state["reduced_basis"])

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.reduced_basis]

    @property
    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    def normal_form(self, f: Poly) -> Poly:
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring} vs {self.ring}")
        pk = self._pk
        rem = self._reducer.reduce(_pack_terms(pk, f.terms))
        return Poly(self.ring, _unpack_terms(pk, rem), _trusted=True)

    def contains(self, f: Poly) -> bool:
        return not self.normal_form(f)

    def is_basis_elt(self, mon: Poly) -> bool:
        """A monomial is a quotient-basis element iff it is its own normal form."""
        if len(mon.terms) != 1 or mon.leading_coefficient() != self.ring.field.one:
            raise ValueError("is_basis_elt expects a single monic monomial")
        return self.normal_form(mon) == mon

    def to_json(self) -> list:
        return [g.to_json() for g in self.reduced_basis]


def normal_form(f: Poly, ideal: GroebnerIdeal) -> Poly:
    return ideal.normal_form(f)


def is_basis_elt(mon: Poly, ideal: GroebnerIdeal) -> bool:
    return ideal.is_basis_elt(mon)


def buchberger(gens: Sequence[Poly]) -> GroebnerIdeal:
    """Reduced Groebner basis via Buchberger with the normal selection strategy.

    Pairs are taken smallest-lcm first; the product criterion and the chain
    criterion discard useless pairs.
    """
    gens = list(gens)
    if not gens:
        raise EmptyInput("buchberger needs at least one generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch(f"{g.ring} vs {ring}")
    field = ring.field
    pk = Packing(ring.nvars)

    nonzero = [_pack_terms(pk, g.terms) for g in gens if g.terms]
    if not nonzero:
        return GroebnerIdeal(ring, gens, [])

    basis: list[dict] = []
    lms: list[int] = []
    red = _Reducer(field, pk)
    pairs: dict[tuple[int, int], int] = {}
    heap: list = []

    def insert(terms: dict):
        terms = _monic(field, terms)
        k = len(basis)
        lm = max(terms)
        basis.append(terms)
        lms.append(lm)
        red.add(terms)
        for i in range(k):
            lcm = pk.lcm(lms[i], lm)
            pairs[(i, k)] = lcm
            heapq.heappush(heap, (lcm, i, k))

    def chain_skippable(i: int, j: int, lcm: int) -> bool:
        for k, lk in enumerate(lms):
            if k == i or k == j or not pk.divides(lk, lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                return True
        return False

    for terms in sorted(nonzero, key=max):
        r = red.reduce(terms)
        if r:
            insert(r)

    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        lcm = pairs.pop((i, j), None)
        if lcm is None:
            continue
        if pk.coprime(lms[i], lms[j]) or chain_skippable(i, j, lcm):
            continue
        processed += 1
        r = red.reduce(_s_polynomial(field, pk, basis[i], basis[j]))
        if r:
            insert(r)
            if max(r) >> pk.deg_shift == 0:
                break
    log.debug("buchberger: %d S-pairs reduced, %d basis elements", processed, len(basis))

    reduced = _interreduce(field, pk, basis)
    return GroebnerIdeal(ring, gens, [Poly(ring, _unpack_terms(pk, t), _trusted=True) for t in reduced])


def _interreduce(field: Field, pk: Packing, polys: Sequence[dict]) -> list[dict]:
    """Minimize, then fully reduce each tail; sorted descending by leading monomial."""
    polys = [_monic(field, p) for p in polys if p]
    polys.sort(key=max, reverse=True)
    lms = [max(p) for p in polys]
    keep = []
    for i, lm in enumerate(lms):
        if not any(j != i and pk.divides(o, lm) and (o != lm or j > i) for j, o in enumerate(lms)):
            keep.append(polys[i])
    red = _Reducer(field, pk, keep)
    out = []
    for idx, p in enumerate(keep):
        lm = max(p)
        r = red.reduce({m: c for m, c in p.items() if m != lm}, skip=idx)
        r[lm] = p[lm]
        out.append(r)
    return out


def interreduce(polys: Sequence[Poly]) -> list[Poly]:
    polys = [p for p in polys if p]
    if not polys:
        return []
    ring = polys[0].ring
    pk = Packing(ring.nvars)
    out = _interreduce(ring.field, pk, [_pack_terms(pk, p.terms) for p in polys])
    return [Poly(ring, _unpack_terms(pk, t), _trusted=True) for t in out]


def is_groebner_basis(ideal: GroebnerIdeal) -> bool:
    """Post-hoc Buchberger criterion: every S-polynomial reduces to zero."""
    pk = ideal._pk
    field = ideal.ring.field
    polys = [_pack_terms(pk, g.terms) for g in ideal.reduced_basis]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if ideal._reducer.reduce(_s_polynomial(field, pk, polys[i], polys[j])):
                return False
    return True
