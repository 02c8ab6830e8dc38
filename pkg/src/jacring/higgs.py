"""Higgs field: the 20x20 matrices of multiplication by each basis element of R_1.

Row k of ``mats[j]`` holds the coordinates of e_j * b_k, so a coordinate row
vector v maps to ``v @ mats[j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cohomology import Coordinates, GradedBasis, JacobianRing
from .errors import IndexOutOfRange
from .exactla import ExactMatrix, vec_mat
from .scalar import RawValue


@dataclass
class ThetaMatrices:
    mats: list[ExactMatrix]
    basis: GradedBasis

    @property
    def field(self):
        return self.mats[0].field

    def __len__(self):
        return len(self.mats)

    def __getitem__(self, j: int) -> ExactMatrix:
        """1-based, matching the numbering of the R_1 basis."""
        if not 1 <= j <= len(self.mats):
            raise IndexOutOfRange(f"theta index {j} outside 1..{len(self.mats)}")
        return self.mats[j - 1]

    def apply(self, j: int, v: Sequence[RawValue]) -> list[RawValue]:
        return vec_mat(self.field, v, self[j])

    def to_json(self) -> dict:
        return {"basis": self.basis.to_json(), "mats": [m.to_json() for m in self.mats]}


def compute_theta_matrices(jr: JacobianRing, basis: GradedBasis) -> ThetaMatrices:
    coords = Coordinates(jr, basis)
    n = basis.total_dim
    elements = [coords.element(k) for k in range(n)]
    mats = []
    for j in range(basis.dims[1]):
        w = coords.r1(j)
        mats.append(ExactMatrix([coords(w * b) for b in elements], jr.field, cols=n))
    return ThetaMatrices(mats, basis)


def apply_theta(t: ThetaMatrices, j: int, v: Sequence[RawValue]) -> list[RawValue]:
    return t.apply(j, v)


def block_report(t: ThetaMatrices) -> str:
    """Which grading blocks (R_p -> R_q) carry nonzero entries, per matrix."""
    basis = t.basis
    deg = [basis.degree_of(k) for k in range(basis.total_dim)]
    lines = []
    for j, m in enumerate(t.mats, 1):
        blocks = sorted({(deg[r], deg[c]) for r in range(m.rows) for c in range(m.cols) if m.data[r][c]})
        nnz = sum(1 for r in m.data for x in r if x)
        desc = ", ".join(f"R{p}->R{q}" for p, q in blocks)
        lines.append(f"theta[{j}]: {nnz} nonzero entries in blocks {desc}")
    return "\n".join(lines)
