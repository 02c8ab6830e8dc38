"""Exact coefficient fields: the rationals and prime fields GF(p), p odd.

Polynomials and matrices store *raw* canonical values (``Fraction`` for QQ,
``int`` in ``[0, p)`` for GF(p)) together with a :class:`Field`; the
:class:`Scalar` wrapper is the checked, operator-friendly public type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldError, FieldMismatch

RawValue = Union[Fraction, int]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Field configuration. ``Field()`` is QQ, ``Field(modulus=p)`` is GF(p)."""

    modulus: int | None = None

    def __post_init__(self):
        p = self.modulus
        if p is None:
            return
        if not isinstance(p, int) or isinstance(p, bool):
            raise FieldError(f"modulus must be an integer, got {p!r}")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not is_prime(p):
            raise FieldError(f"modulus {p} is not prime")

    @classmethod
    def rationals(cls) -> "Field":
        return cls()

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(modulus=p)

    @property
    def kind(self) -> str:
        return "rational" if self.modulus is None else "gfp"

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    def __str__(self):
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    # -- raw value operations; hot paths call these directly ------------

    @property
    def zero(self) -> RawValue:
        return Fraction(0) if self.modulus is None else 0

    @property
    def one(self) -> RawValue:
        return Fraction(1) if self.modulus is None else 1

    def coerce(self, x) -> RawValue:
        """Map an int, Fraction, Scalar or string into canonical raw form."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} element used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        p = self.modulus
        if p is None:
            if isinstance(x, float):
                raise FieldError("floats are not exact; pass int, Fraction or str")
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise DivisionByZero(f"denominator of {x} vanishes mod {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, int):
            return x % p
        raise FieldError(f"cannot coerce {x!r} into {self}")

    def add(self, a: RawValue, b: RawValue) -> RawValue:
        return a + b if self.modulus is None else (a + b) % self.modulus

    def sub(self, a: RawValue, b: RawValue) -> RawValue:
        return a - b if self.modulus is None else (a - b) % self.modulus

    def mul(self, a: RawValue, b: RawValue) -> RawValue:
        return a * b if self.modulus is None else (a * b) % self.modulus

    def neg(self, a: RawValue) -> RawValue:
        return -a if self.modulus is None else (-a) % self.modulus

    def inv(self, a: RawValue) -> RawValue:
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.modulus is None:
            return Fraction(1) / a
        return pow(a, -1, self.modulus)

    def div(self, a: RawValue, b: RawValue) -> RawValue:
        return self.mul(a, self.inv(b))

    # -- string format used in every JSON artifact ------------------------

    def format(self, a: RawValue) -> str:
        return str(a)

    def parse(self, s: str) -> RawValue:
        s = s.strip()
        try:
            if self.modulus is None:
                return Fraction(s)
            if "/" in s:
                return self.coerce(Fraction(s))
            return int(s) % self.modulus
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"cannot parse {s!r} as an element of {self}") from exc

    def to_json(self) -> dict:
        if self.modulus is None:
            return {"field": "rational"}
        return {"field": "gfp", "modulus": self.modulus}

    @classmethod
    def from_json(cls, d: dict) -> "Field":
        kind = d.get("field", "rational")
        if kind == "rational":
            return cls()
        if kind == "gfp":
            return cls(modulus=int(d["modulus"]))
        raise FieldError(f"unknown field kind {kind!r}")


QQ = Field()


@dataclass(frozen=True)
class Scalar:
    """An element of a :class:`Field`, always held in canonical form."""

    field: Field
    value: RawValue

    @classmethod
    def of(cls, field: Field, x) -> "Scalar":
        return cls(field, field.coerce(x))

    def _other(self, other) -> RawValue:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    try:
        return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op](b)
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
