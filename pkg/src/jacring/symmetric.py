"""Symmetric powers: index bijections, the induced Higgs action on S^2(R), plethysm.

Positions and indices are 1-based throughout this module; a vector of length
``size`` stores the coefficient of position ``pos`` at list index ``pos - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .errors import DimensionMismatch, GradingViolation, IndexOutOfRange
from .exactla import ExactMatrix, Subspace, vec_mat
from .higgs import ThetaMatrices
from .scalar import QQ, RawValue


def _tri(p: int) -> int:
    return p * (p + 1) // 2


class SymIndexer:
    """Bijection between sorted index tuples over ``1..nvars`` and ``1..size``."""

    def __init__(self, nvars: int, degree: int):
        if degree not in (2, 3):
            raise ValueError("only symmetric squares and cubes are supported")
        self.nvars = nvars
        self.degree = degree
        self.size = comb(nvars + degree - 1, degree)
        table = [None] * self.size
        for t in combinations_with_replacement(range(1, nvars + 1), degree):
            pos = self._formula(t)
            if table[pos - 1] is not None:
                raise AssertionError(f"position {pos} hit twice")
            table[pos - 1] = t
        self.table = tuple(table)

    def _formula(self, t: tuple) -> int:
        n = self.nvars
        if self.degree == 2:
            i, j = t
            return _tri(n) - _tri(n - i + 1) + (j - i) + 1
        i, j, k = t
        offs = sum(_tri(n + 1 - l) for l in range(1, i))
        p0 = n - i + 1
        j0, k0 = j - i + 1, k - i + 1
        return offs + _tri(p0) - _tri(p0 - j0 + 1) + (k0 - j0) + 1

    def pos_of(self, *idx: int) -> int:
        if len(idx) != self.degree:
            raise ValueError(f"expected {self.degree} indices, got {len(idx)}")
        for i in idx:
            if not 1 <= i <= self.nvars:
                raise IndexOutOfRange(f"index {i} outside 1..{self.nvars}")
        return self._formula(tuple(sorted(idx)))

    def tuple_of(self, pos: int) -> tuple:
        if not 1 <= pos <= self.size:
            raise IndexOutOfRange(f"position {pos} outside 1..{self.size}")
        return self.table[pos - 1]

    def __repr__(self):
        return f"SymIndexer(nvars={self.nvars}, degree={self.degree})"


@lru_cache(maxsize=None)
def indexer(nvars: int, degree: int) -> SymIndexer:
    return SymIndexer(nvars, degree)


def pos_of_pair(idx: SymIndexer, i: int, j: int) -> int:
    if idx.degree != 2:
        raise ValueError("pos_of_pair needs a degree-2 indexer")
    return idx.pos_of(i, j)


def pos_of_triple(idx: SymIndexer, i: int, j: int, k: int) -> int:
    if idx.degree != 3:
        raise ValueError("pos_of_triple needs a degree-3 indexer")
    return idx.pos_of(i, j, k)


def tuple_of_pos(idx: SymIndexer, pos: int) -> tuple:
    return idx.tuple_of(pos)


# -- Higgs action on S^2(R) ------------------------------------------------


def symm2_im_theta(t: ThetaMatrices, th: int, pos: int) -> list[RawValue]:
    """mu(b_i b_j) = b_i mu(b_j) + mu(b_i) b_j, encoded in K^size."""
    n = t.basis.total_dim
    idx = indexer(n, 2)
    f = t.field
    i, j = idx.tuple_of(pos)
    mat = t[th]
    out = [f.zero] * idx.size
    for k, a in enumerate(mat.data[j - 1], 1):
        if a:
            q = idx.pos_of(i, k) - 1
            out[q] = f.add(out[q], a)
    for k, a in enumerate(mat.data[i - 1], 1):
        if a:
            q = idx.pos_of(k, j) - 1
            out[q] = f.add(out[q], a)
    return out


def symm2_action_matrix(t: ThetaMatrices, th: int) -> ExactMatrix:
    """The induced endomorphism of S^2(R); row ``pos - 1`` is ``symm2_im_theta(t, th, pos)``."""
    size = indexer(t.basis.total_dim, 2).size
    return ExactMatrix([symm2_im_theta(t, th, pos) for pos in range(1, size + 1)], t.field, cols=size)


class Symm2Action:
    """The nine induced endomorphisms of S^2(R), built once."""

    def __init__(self, t: ThetaMatrices):
        self.theta = t
        self.size = indexer(t.basis.total_dim, 2).size
        self.mats = [symm2_action_matrix(t, th) for th in range(1, len(t) + 1)]

    def apply(self, th: int, v: Sequence[RawValue]) -> list[RawValue]:
        return vec_mat(self.theta.field, v, self.mats[th - 1])

    def image(self, u: Subspace) -> Subspace:
        if u.ambient_dim != self.size:
            raise DimensionMismatch(f"subspace of K^{u.ambient_dim}, expected K^{self.size}")
        ims = [self.apply(th, b) for b in u.rref_basis for th in range(1, len(self.mats) + 1)]
        return Subspace.from_vectors(ims, self.size, self.theta.field)


def symm2_image(t: ThetaMatrices | Symm2Action, u: Subspace) -> Subspace:
    action = t if isinstance(t, Symm2Action) else Symm2Action(t)
    return action.image(u)


def grading_of_basis(dims: Sequence[int]) -> list[int]:
    """Grading degree of b_1..b_N given the component sizes."""
    return [p for p, d in enumerate(dims) for _ in range(d)]


def symm2_graded_indices(p: int, dims: Sequence[int] = (1, 9, 9, 1)) -> list[int]:
    top = 2 * (len(dims) - 1)
    if not 0 <= p <= top:
        raise IndexOutOfRange(f"degree {p} outside 0..{top}")
    deg = grading_of_basis(dims)
    n = len(deg)
    idx = indexer(n, 2)
    return sorted(
        idx.pos_of(a, b) for a in range(1, n + 1) for b in range(a, n + 1) if deg[a - 1] + deg[b - 1] == p
    )


def symm2_graded_subspace(p: int, dims: Sequence[int] = (1, 9, 9, 1), field=None) -> Subspace:
    field = field or QQ
    n = sum(dims)
    size = indexer(n, 2).size
    vecs = []
    for pos in symm2_graded_indices(p, dims):
        v = [field.zero] * size
        v[pos - 1] = field.one
        vecs.append(v)
    return Subspace.from_vectors(vecs, size, field)


@dataclass
class PlethysmReport:
    dims: dict
    bound: int = 65
    modular_consistent: bool = dc_field(init=False)

    def __post_init__(self):
        self.modular_consistent = self.dims["U33"] <= self.bound

    def to_json(self) -> dict:
        return {"dims": dict(self.dims), "bound": self.bound, "modular_consistent": self.modular_consistent}


def run_plethysm(t: ThetaMatrices, bound: int = 65) -> PlethysmReport:
    field = t.field
    dims = t.basis.dims
    action = Symm2Action(t)
    u51 = symm2_graded_subspace(1, dims, field)
    u42 = action.image(u51)
    u33 = action.image(u42)
    for name, u, p in (("U42", u42, 2), ("U33", u33, 3)):
        if not u.issubspace(symm2_graded_subspace(p, dims, field)):
            raise GradingViolation(f"{name} is not contained in S^2(R)_{p}")
    return PlethysmReport({"U51": u51.dimension, "U42": u42.dimension, "U33": u33.dimension}, bound)
