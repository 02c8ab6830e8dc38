"""Dense exact linear algebra: matrices, RREF, determinants and row-space subspaces.

Vectors are plain lists of raw field values; they are row vectors and act on
matrices from the left.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .scalar import Field, QQ, RawValue


class ExactMatrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence], field: Field = QQ, *, cols: int | None = None):
        self.field = field
        self.data = [[field.coerce(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else (cols or 0)
        if any(len(r) != self.cols for r in self.data):
            raise DimensionMismatch("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> "ExactMatrix":
        return cls([[field.zero] * cols for _ in range(rows)], field, cols=cols)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "ExactMatrix":
        m = cls.zeros(n, n, field)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.cols == other.cols and self.data == other.data

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field})"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.data)], self.field, cols=self.rows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return ExactMatrix([vec_mat(self.field, r, other) for r in self.data], self.field, cols=other.cols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        f = self.field
        return ExactMatrix(
            [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)], f, cols=self.cols
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        f = self.field
        return ExactMatrix(
            [[f.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)], f, cols=self.cols
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def to_json(self) -> dict:
        fmt = self.field.format
        return {"rows": self.rows, "cols": self.cols, "data": [[fmt(x) for x in r] for r in self.data]}

    @classmethod
    def from_json(cls, d: dict, field: Field = QQ) -> "ExactMatrix":
        m = cls([[field.parse(str(x)) for x in r] for r in d["data"]], field, cols=d["cols"])
        if m.rows != d["rows"] or m.cols != d["cols"]:
            raise DimensionMismatch("matrix JSON shape does not match its data")
        return m


def vec_mat(f: Field, v: Sequence, m: ExactMatrix) -> list:
    """Row vector times matrix."""
    if len(v) != m.rows:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.rows} rows")
    out = [f.zero] * m.cols
    for a, row in zip(v, m.data):
        if a:
            for k, b in enumerate(row):
                if b:
                    out[k] = f.add(out[k], f.mul(a, b))
    return out


def _rref_rows(f: Field, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = f.inv(rows[r][c])
        rows[r] = [f.mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                a = rows[i][c]
                rows[i] = [f.sub(x, f.mul(a, y)) if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(m: ExactMatrix) -> tuple[ExactMatrix, int]:
    rows, pivots = _rref_rows(m.field, m.data, m.cols)
    return ExactMatrix(rows, m.field, cols=m.cols), len(pivots)


def rank(m: ExactMatrix) -> int:
    return rref(m)[1]


def det(m: ExactMatrix) -> RawValue:
    """Determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    f = m.field
    n = m.rows
    a = [list(r) for r in m.data]
    sign = 1
    prev = f.one
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return f.zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = f.div(f.sub(f.mul(a[i][j], a[k][k]), f.mul(a[i][k], a[k][j])), prev)
        prev = a[k][k]
    d = a[n - 1][n - 1] if n else f.one
    return d if sign > 0 else f.neg(d)


class Subspace:
    """Row space of a set of vectors, stored by its reduced row echelon basis."""

    __slots__ = ("field", "ambient_dim", "rref_basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, rref_basis: list[list], pivots: list[int]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rref_basis = rref_basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence], ambient_dim: int, field: Field = QQ) -> "Subspace":
        vs = [[field.coerce(x) for x in v] for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows, pivots = _rref_rows(field, vs, ambient_dim)
        return cls(field, ambient_dim, rows[: len(pivots)], pivots)

    @classmethod
    def zero(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        return cls(field, ambient_dim, [], [])

    @property
    def dimension(self) -> int:
        return len(self.rref_basis)

    def basis(self) -> list[list]:
        return [list(r) for r in self.rref_basis]

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")
        return Subspace.from_vectors(self.rref_basis + other.rref_basis, self.ambient_dim, self.field)

    def reduce(self, v: Sequence) -> list:
        f = self.field
        v = list(v)
        for row, c in zip(self.rref_basis, self.pivots):
            a = v[c]
            if a:
                v = [f.sub(x, f.mul(a, y)) if y else x for x, y in zip(v, row)]
        return v

    def __contains__(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return not any(self.reduce(v))

    def issubspace(self, other: "Subspace") -> bool:
        return all(r in other for r in self.rref_basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rref_basis == other.rref_basis

    def __repr__(self):
        return f"Subspace(dim={self.dimension}, ambient={self.ambient_dim})"


def subspace_from_vectors(vs: Iterable[Sequence], ambient_dim: int, field: Field = QQ) -> Subspace:
    return Subspace.from_vectors(vs, ambient_dim, field)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u + v
