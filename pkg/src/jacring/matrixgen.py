"""Admissible 4x8 coefficient matrices: user supplied, random, or hyperelliptic.

A matrix is admissible when all 70 of its 4x4 minors are nonzero. Random
draws use :class:`random.Random` (Mersenne Twister) seeded from the config, so
a seed fully determines the result; integers are drawn uniformly from
``[-N+1, N-1]`` and then mapped into the field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import DegenerateMatrix, DuplicateLambda, MissingUserInput, NonConvergence
from .exactla import ExactMatrix, det
from .scalar import Field, QQ, RawValue

MODES = ("user", "random", "hyperelliptic")
COLUMN_SUBSETS = list(combinations(range(8), 4))


@dataclass(frozen=True)
class GenConfig:
    mode: str = "hyperelliptic"
    randrange: int = 10
    seed: int = 0
    field: Field = QQ
    max_attempts: int = 10_000

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.randrange < 2:
            raise ValueError("randrange must be at least 2")


@dataclass
class CoeffMatrix:
    entries: list[list[RawValue]]
    field: Field = QQ
    mode: str = "user"
    lam: list[RawValue] | None = None
    seed: int | None = None
    randrange: int | None = None

    def as_matrix(self) -> ExactMatrix:
        return ExactMatrix(self.entries, self.field)

    def to_json(self) -> dict:
        fmt = self.field.format
        d = dict(self.field.to_json())
        d["mode"] = self.mode
        if self.lam is not None:
            d["lambda"] = [fmt(v) for v in self.lam]
        d["entries"] = [[fmt(v) for v in row] for row in self.entries]
        if self.seed is not None:
            d["seed"] = self.seed
        if self.randrange is not None:
            d["randrange"] = self.randrange
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CoeffMatrix":
        field = Field.from_json(d)
        entries = [[field.parse(str(v)) for v in row] for row in d["entries"]]
        if len(entries) != 4 or any(len(r) != 8 for r in entries):
            raise ValueError("coefficient matrix must be 4x8")
        lam = [field.parse(str(v)) for v in d["lambda"]] if d.get("lambda") is not None else None
        return cls(entries, field, d.get("mode", "user"), lam, d.get("seed"), d.get("randrange"))


def vandermonde(lam: Sequence[RawValue], field: Field) -> list[list[RawValue]]:
    lam = [field.coerce(v) for v in lam]
    rows = []
    for i in range(4):
        rows.append([field.one if i == 0 else (v**i if field.is_rational else pow(v, i, field.modulus)) for v in lam])
    return rows


def check_nondegenerate(entries: Sequence[Sequence], field: Field = QQ) -> tuple[bool, tuple | None]:
    """Test every 4x4 column minor; return the lexicographically first failing subset (0-based)."""
    for cols in COLUMN_SUBSETS:
        sub = ExactMatrix([[entries[r][c] for r in range(4)] for c in cols], field)
        if not det(sub):
            return False, cols
    return True, None


def require_nondegenerate(cm: CoeffMatrix) -> None:
    ok, bad = check_nondegenerate(cm.entries, cm.field)
    if not ok:
        raise DegenerateMatrix(bad)


def generate_matrix(
    cfg: GenConfig,
    user_entries: Sequence[Sequence] | None = None,
    user_lambda: Sequence | None = None,
) -> CoeffMatrix:
    f = cfg.field
    if cfg.mode == "user":
        if user_entries is None:
            raise MissingUserInput("user mode needs the matrix entries")
        entries = [[f.coerce(v) for v in row] for row in user_entries]
        if len(entries) != 4 or any(len(r) != 8 for r in entries):
            raise ValueError("coefficient matrix must be 4x8")
        return CoeffMatrix(entries, f, "user")

    if cfg.mode == "hyperelliptic" and user_lambda is not None:
        lam = [f.coerce(v) for v in user_lambda]
        if len(lam) != 8:
            raise ValueError("lambda needs exactly 8 values")
        if len(set(lam)) != 8:
            raise DuplicateLambda(f"lambda values must be pairwise distinct: {[f.format(v) for v in lam]}")
        entries = vandermonde(lam, f)
        require_nondegenerate(CoeffMatrix(entries, f))
        return CoeffMatrix(entries, f, "hyperelliptic", lam)

    rng = random.Random(cfg.seed)
    n = cfg.randrange

    def draw():
        return f.coerce(rng.randrange(2 * n - 1) - n + 1)

    for _ in range(cfg.max_attempts):
        if cfg.mode == "hyperelliptic":
            # duplicate lambdas are caught by the minor check below
            lam = [draw() for _ in range(8)]
            entries = vandermonde(lam, f)
        else:
            lam = None
            entries = [[draw() for _ in range(8)] for _ in range(4)]
        if check_nondegenerate(entries, f)[0]:
            return CoeffMatrix(entries, f, cfg.mode, lam, cfg.seed, cfg.randrange)
    raise NonConvergence(f"no admissible matrix after {cfg.max_attempts} attempts")
