"""Characteristic subvarieties in P^8: nine quadrics (first) and one cubic (second).

The multiplication map S^k(R_1) -> R_k is dualized; passing from the dual
basis (e_i e_j)^* to products e_i^* e_j^* multiplies a coefficient by the
number of distinct orderings of the index tuple (1 or 2 for pairs, 1, 3 or 6
for triples).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial
from collections import Counter

from .cohomology import Coordinates, GradedBasis, JacobianRing
from .errors import FieldMismatch
from .exactla import ExactMatrix
from .groebner import buchberger
from .hilbert import HilbertData, hilbert_series
from .poly import Poly, Ring
from .scalar import Field
from .symmetric import indexer

log = logging.getLogger(__name__)

ZNAMES = tuple(f"z{i}" for i in range(1, 10))
DEFAULT_INVARIANTS_PRIME = 32003


def char_ring(field: Field) -> Ring:
    return Ring(9, ZNAMES, field)


def multiplicity(idx: tuple) -> int:
    """Number of distinct orderings of an index tuple."""
    out = factorial(len(idx))
    for c in Counter(idx).values():
        out //= factorial(c)
    return out


@dataclass
class CharVariety:
    order: int  # 1 or 2
    equations: list[Poly]
    M: ExactMatrix
    C: ExactMatrix

    @property
    def ring(self) -> Ring:
        return self.equations[0].ring

    def evaluate(self, z) -> list:
        return [g.evaluate(z) for g in self.equations]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            **self.ring.field.to_json(),
            "variables": list(self.ring.varnames),
            "equations": [g.to_json() for g in self.equations],
        }


def _build(jr: JacobianRing, basis: GradedBasis, degree: int) -> CharVariety:
    coords = Coordinates(jr, basis)
    field = jr.field
    idx = indexer(basis.dims[1], degree)
    target = range(basis.offsets[degree], basis.offsets[degree] + basis.dims[degree])
    e = [coords.r1(i) for i in range(basis.dims[1])]
    rows = []
    for pos in range(1, idx.size + 1):
        prod = jr.ring.const(1)
        for i in idx.tuple_of(pos):
            prod = prod * e[i - 1]
        vec = coords(prod)
        rows.append([vec[k] for k in target])
    M = ExactMatrix(rows, field, cols=len(target))
    N = ExactMatrix(
        [[field.mul(field.coerce(multiplicity(idx.tuple_of(pos))), x) for x in row] for pos, row in enumerate(rows, 1)],
        field,
        cols=len(target),
    )
    C = N.transpose()
    csr = char_ring(field)
    eqs = []
    for row in C.data:
        terms = {}
        for pos, c in enumerate(row, 1):
            if c:
                exps = [0] * 9
                for i in idx.tuple_of(pos):
                    exps[i - 1] += 1
                terms[tuple(exps)] = c
        eqs.append(Poly(csr, terms))
    return CharVariety(degree - 1, eqs, M, C)


def charvar_first(jr: JacobianRing, basis: GradedBasis) -> CharVariety:
    return _build(jr, basis, 2)


def charvar_second(jr: JacobianRing, basis: GradedBasis) -> CharVariety:
    return _build(jr, basis, 3)


def reduce_equations(eqs: list[Poly], field: Field) -> list[Poly]:
    """Carry equations into another coefficient field (e.g. QQ -> GF(p))."""
    if eqs and not eqs[0].ring.field.is_rational and eqs[0].ring.field != field:
        raise FieldMismatch(f"cannot move equations from {eqs[0].ring.field} to {field}")
    ring = char_ring(field)
    return [Poly(ring, {m: field.coerce(c) for m, c in g.terms.items()}) for g in eqs]


def hilbert_data(eqs: list[Poly]) -> HilbertData:
    nonzero = [g for g in eqs if g]
    ring = eqs[0].ring
    if not nonzero:
        return hilbert_series([], ring.nvars)
    gb = buchberger(nonzero)
    log.info("characteristic variety: Groebner basis with %d elements", len(gb.reduced_basis))
    return hilbert_series(gb.leading_monomials, ring.nvars)


def charvar_dimension_genus(
    v: CharVariety, field: Field | None = None
) -> tuple[int, int | None, HilbertData]:
    """(projective dimension, arithmetic genus, Hilbert data), computed over ``field``.

    Defaults to GF(32003). An empty variety yields dimension -1 and genus None.
    """
    field = field or Field.gf(DEFAULT_INVARIANTS_PRIME)
    eqs = reduce_equations(v.equations, field)
    data = hilbert_data(eqs)
    return data.dimension, data.genus, data
