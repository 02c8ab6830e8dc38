"""The Jacobian ring of F = sum_i y_i f_i and its invariant graded basis.

Ring variables are x0..x7, y1..y4 (12 in total). The graded piece R_p is
spanned by standard monomials of x-degree 2p and y-degree p that pass the
parity filter :func:`is_h_invariant`.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import ResidueOffBasis, TopClassInvalid, UnexpectedDimensions
from .groebner import GroebnerIdeal, buchberger
from .matrixgen import CoeffMatrix
from .poly import Monomial, Poly, Ring, monomials_of_degree
from .scalar import Field, RawValue

log = logging.getLogger(__name__)

XNAMES = tuple(f"x{i}" for i in range(8))
YNAMES = tuple(f"y{i}" for i in range(1, 5))
EXPECTED_DIMS = (1, 9, 9, 1)
TOP_CLASS: Monomial = (0,) * 7 + (6,) + (0, 0, 0, 3)  # x7^6 * y4^3


def jacobian_poly_ring(field: Field) -> Ring:
    return Ring(12, XNAMES + YNAMES, field)


def is_h_invariant(mon: Monomial) -> bool:
    """Parity filter: x-exponents of cyclically adjacent variables sum to an even number."""
    return all((mon[i] + mon[(i + 1) % 8]) % 2 == 0 for i in range(8))


def bidegree(mon: Monomial) -> tuple[int, int]:
    return sum(mon[:8]), sum(mon[8:12])


@dataclass
class JacobianRing:
    ring: Ring
    A: CoeffMatrix
    f: list[Poly]
    F: Poly
    ideal: GroebnerIdeal

    @property
    def field(self) -> Field:
        return self.ring.field

    def x(self, i: int) -> Poly:
        return self.ring.gen(i)

    def y(self, i: int) -> Poly:
        return self.ring.gen(7 + i)

    def normal_form(self, g: Poly) -> Poly:
        return self.ideal.normal_form(g)


def build_jacobian_ring(A: CoeffMatrix, field: Field | None = None) -> JacobianRing:
    field = field or A.field
    ring = jacobian_poly_ring(field)
    x = [ring.gen(i) for i in range(8)]
    y = [ring.gen(8 + i) for i in range(4)]
    f = []
    for i in range(4):
        terms = {}
        for j in range(8):
            c = field.coerce(A.entries[i][j])
            if c:
                terms[(x[j] * x[j]).leading_monomial()] = c
        f.append(Poly(ring, terms))
    F = ring.zero()
    for i in range(4):
        F = F + y[i] * f[i]
    gens = [F.derivative(i) for i in range(12)]
    log.info("computing Groebner basis of the Jacobian ideal over %s", field)
    return JacobianRing(ring, A, f, F, buchberger(gens))


@dataclass
class GradedBasis:
    components: list[list[Monomial]]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    @property
    def offsets(self) -> list[int]:
        out, acc = [], 0
        for c in self.components:
            out.append(acc)
            acc += len(c)
        return out

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def elements(self) -> list[Monomial]:
        """b_1..b_N, in grading order."""
        return [m for c in self.components for m in c]

    def degree_of(self, k: int) -> int:
        """Grading degree of the k-th basis element (0-based)."""
        for p, off in reversed(list(enumerate(self.offsets))):
            if k >= off:
                return p
        raise IndexError(k)

    def index(self) -> dict[Monomial, int]:
        return {m: k for k, m in enumerate(self.elements())}

    def to_json(self) -> dict:
        return {"components": [[list(m) for m in c] for c in self.components], "dims": list(self.dims)}

    @classmethod
    def from_json(cls, d: dict) -> "GradedBasis":
        return cls([[tuple(m) for m in c] for c in d["components"]])


def bidegree_candidates(p: int) -> list[Monomial]:
    """x-degree 2p times y-degree p monomials, x part major, both glex-descending."""
    return [xm + ym for xm, ym in product(monomials_of_degree(8, 2 * p), monomials_of_degree(4, p))]


def _scan(args) -> list[Monomial]:
    ideal, mons = args
    ring = ideal.ring
    return [m for m in mons if is_h_invariant(m) and ideal.is_basis_elt(ring.monomial(m))]


def scan_candidates(ideal: GroebnerIdeal, candidates: Sequence[Monomial], workers: int = 1) -> list[Monomial]:
    if workers <= 1 or len(candidates) < 2 * workers:
        return _scan((ideal, candidates))
    step = -(-len(candidates) // workers)
    chunks = [candidates[i : i + step] for i in range(0, len(candidates), step)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(_scan, [(ideal, c) for c in chunks]))
    # chunks are contiguous, so concatenation keeps the canonical order
    return [m for part in parts for m in part]


def compute_graded_basis(
    jr: JacobianRing, compute_top: bool = False, workers: int = 1, check_dims: bool = True
) -> GradedBasis:
    comps = []
    for p in range(3):
        comps.append(scan_candidates(jr.ideal, bidegree_candidates(p), workers))
    if compute_top:
        comps.append(scan_candidates(jr.ideal, bidegree_candidates(3), workers))
    else:
        if not (is_h_invariant(TOP_CLASS) and jr.ideal.is_basis_elt(jr.ring.monomial(TOP_CLASS))):
            raise TopClassInvalid("x7^6*y4^3 is not a standard monomial for this matrix")
        comps.append([TOP_CLASS])
    basis = GradedBasis(comps)
    log.info("graded basis dimensions %s", basis.dims)
    if check_dims and basis.dims != EXPECTED_DIMS:
        raise UnexpectedDimensions(basis.dims)
    return basis


def poly2vec(g: Poly, jr: JacobianRing, basis: GradedBasis, index: dict | None = None) -> list[RawValue]:
    """Coordinates of the class of ``g`` in the graded basis.

    Any normal-form term outside the basis raises ``ResidueOffBasis``.
    """
    index = index if index is not None else basis.index()
    f = jr.field
    vec = [f.zero] * basis.total_dim
    nf = jr.normal_form(g)
    for m, c in nf.terms.items():
        k = index.get(m)
        if k is None:
            kind = "invariant" if is_h_invariant(m) else "non-invariant"
            raise ResidueOffBasis(f"normal form has {kind} term {m} outside the basis")
        vec[k] = c
    return vec


class Coordinates:
    """Cached ``poly2vec`` for one ring and basis."""

    def __init__(self, jr: JacobianRing, basis: GradedBasis):
        self.jr = jr
        self.basis = basis
        self._index = basis.index()

    def __call__(self, g: Poly) -> list[RawValue]:
        return poly2vec(g, self.jr, self.basis, self._index)

    def element(self, k: int) -> Poly:
        """b_{k+1} as a polynomial."""
        return self.jr.ring.monomial(self.basis.elements()[k])

    def r1(self, i: int) -> Poly:
        """e_{i+1}, the (i+1)-th basis element of R_1."""
        return self.jr.ring.monomial(self.basis.components[1][i])
