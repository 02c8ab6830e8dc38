"""Sparse multivariate polynomials under graded-lex order.

A monomial is a plain tuple of exponents. Ordering is glex with the first
variable largest, so ``glex_key(m) = (deg m, m)`` compares correctly with
ordinary tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import IndexOutOfRange, RingMismatch
from .scalar import Field, QQ, RawValue

Monomial = tuple


def glex_key(m: Monomial):
    return (sum(m), m)


def compare_glex(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    if len(a) != len(b):
        raise RingMismatch(f"monomials of arity {len(a)} and {len(b)}")
    ka, kb = glex_key(a), glex_key(b)
    return (ka > kb) - (ka < kb)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _compositions(n: int, d: int) -> Iterator[tuple]:
    # lex-descending exponent vectors of length n summing to d
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in _compositions(n - 1, d - e):
            yield (e,) + rest


@dataclass(frozen=True)
class Ring:
    nvars: int
    varnames: tuple = ()
    field: Field = QQ

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("a ring needs at least one variable")
        names = tuple(self.varnames) or tuple(f"x{i}" for i in range(self.nvars))
        if len(names) != self.nvars:
            raise ValueError(f"{len(names)} names for {self.nvars} variables")
        if len(set(names)) != len(names) or not all(names):
            raise ValueError("variable names must be distinct and nonempty")
        object.__setattr__(self, "varnames", names)

    def one_mono(self) -> Monomial:
        return (0,) * self.nvars

    def var_mono(self, i: int) -> Monomial:
        if not 0 <= i < self.nvars:
            raise IndexOutOfRange(f"variable {i} out of range for {self.nvars} variables")
        return tuple(int(k == i) for k in range(self.nvars))

    def gen(self, i: int) -> "Poly":
        """The ``i``-th variable (0-based) as a polynomial."""
        return Poly(self, {self.var_mono(i): self.field.one})

    def gens(self) -> list["Poly"]:
        return [self.gen(i) for i in range(self.nvars)]

    def const(self, c) -> "Poly":
        c = self.field.coerce(c)
        return Poly(self, {self.one_mono(): c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Poly":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or min(exps) < 0:
            raise RingMismatch(f"bad exponent vector {exps} for {self.nvars} variables")
        c = self.field.coerce(coeff)
        return Poly(self, {exps: c} if c else {})

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        return monomials_of_degree(self.nvars, d)


def monomials_of_degree(nvars: int, d: int) -> list[Monomial]:
    """All degree-``d`` monomials in ``nvars`` variables, glex-descending."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return list(_compositions(nvars, d))


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to raw coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, RawValue] | None = None, *, _trusted=False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            f = ring.field
            clean = {}
            for m, c in (terms or {}).items():
                m = tuple(m)
                if len(m) != ring.nvars:
                    raise RingMismatch(f"monomial {m} has wrong arity for {ring.nvars} variables")
                c = f.coerce(c)
                if c:
                    clean[m] = c
            self.terms = clean
        self._hash = None

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            return self.ring.const(other)
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._check(other)
        return Poly(self.ring, add_terms(self.ring.field, self.terms, other.terms, 1), _trusted=True)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = self._check(other)
        return Poly(self.ring, add_terms(self.ring.field, self.terms, other.terms, -1), _trusted=True)

    def __rsub__(self, other) -> "Poly":
        return self._check(other) - self

    def __neg__(self) -> "Poly":
        f = self.ring.field
        return Poly(self.ring, {m: f.neg(c) for m, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other) -> "Poly":
        other = self._check(other)
        f = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                c = f.add(out[m], f.mul(c1, c2)) if m in out else f.mul(c1, c2)
                if c:
                    out[m] = c
                else:
                    out.pop(m, None)
        return Poly(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        f = self.ring.field
        c = f.coerce(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {m: f.mul(c, v) for m, v in self.terms.items()}, _trusted=True)

    def derivative(self, i: int) -> "Poly":
        """Partial derivative in the ``i``-th variable (0-based)."""
        if not 0 <= i < self.ring.nvars:
            raise IndexOutOfRange(f"variable {i} out of range for {self.ring.nvars} variables")
        f = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                c2 = f.mul(c, f.coerce(e))
                if c2:
                    out[m[:i] + (e - 1,) + m[i + 1:]] = c2
        return Poly(self.ring, out, _trusted=True)

    # -- inspection -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, RawValue]]:
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=glex_key)

    def leading_coefficient(self) -> RawValue:
        return self.terms[self.leading_monomial()]

    def coefficient(self, m: Monomial) -> RawValue:
        return self.terms.get(tuple(m), self.ring.field.zero)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def evaluate(self, point: Sequence) -> RawValue:
        f = self.ring.field
        pt = [f.coerce(v) for v in point]
        if len(pt) != self.ring.nvars:
            raise RingMismatch(f"point of length {len(pt)} for {self.ring.nvars} variables")
        total = f.zero
        for m, c in self.terms.items():
            t = c
            for v, e in zip(pt, m):
                if e:
                    t = f.mul(t, v ** e if f.is_rational else pow(v, e, f.modulus))
            total = f.add(total, t)
        return total

    def __iter__(self) -> Iterator[tuple[Monomial, RawValue]]:
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self})"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list[dict]:
        fmt = self.ring.field.format
        return [{"coeff": fmt(c), "exps": list(m)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, ring: Ring, data: Iterable[Mapping]) -> "Poly":
        terms: dict = {}
        f = ring.field
        for t in data:
            m = tuple(int(e) for e in t["exps"])
            terms[m] = f.add(terms.get(m, f.zero), f.parse(str(t["coeff"])))
        return cls(ring, terms)


def add_terms(f: Field, a: Mapping, b: Mapping, sign: int = 1) -> dict:
    out = dict(a)
    for m, c in b.items():
        if sign < 0:
            c = f.neg(c)
        if m in out:
            s = f.add(out[m], c)
            if s:
                out[m] = s
            else:
                del out[m]
        else:
            out[m] = c
    return out


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    f = p.ring.field
    out = []
    for m, c in p.sorted_terms():
        neg = f.is_rational and c < 0
        mag = -c if neg else c
        mono = format_monomial(m, p.ring.varnames)
        if mono == "1":
            body = f.format(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{f.format(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)
