"""Dense univariate polynomials over a prime field."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import ParameterError, ParseError
from .field import FieldElement, PrimeField

# degree of the zero polynomial
NEG_INF = -math.inf


def _strip(coeffs: Iterable[int], q: int) -> tuple[int, ...]:
    c = [x % q for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of X^i.

    The coefficient tuple is always canonical: no trailing zeros, and the
    zero polynomial has an empty tuple.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[int | FieldElement] = ()):
        self.field = field
        self.coeffs = _strip((int(c) for c in coeffs), field.q)

    @classmethod
    def zero(cls, field: PrimeField) -> Poly:
        return cls(field)

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> Poly:
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: PrimeField, power: int, c: int = 1) -> Poly:
        return cls(field, [0] * power + [c])

    @classmethod
    def x(cls, field: PrimeField) -> Poly:
        return cls.monomial(field, 1)

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def padded(self, length: int) -> tuple[int, ...]:
        """Coefficients as a fixed-length vector (lowest degree first)."""
        if len(self.coeffs) > length:
            raise ParameterError(f"degree {self.degree} does not fit in {length} coefficients")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __call__(self, x: int | FieldElement) -> int:
        return self.eval(x)

    def eval(self, x: int | FieldElement) -> int:
        q = self.field.q
        x = int(x) % q
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % q
        return acc

    def dilate(self, c: int | FieldElement) -> Poly:
        """p(cX): coefficient i scaled by c^i."""
        q = self.field.q
        c = int(c) % q
        out, t = [], 1
        for a in self.coeffs:
            out.append(a * t % q)
            t = t * c % q
        return Poly(self.field, out)

    def valuation(self) -> int | float:
        """Largest v with X^v dividing self (infinite for zero)."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return math.inf

    def shift_down(self, v: int) -> Poly:
        """Divide by X^v; the low coefficients must vanish."""
        if any(self.coeffs[:v]):
            raise ParameterError(f"X^{v} does not divide {self}")
        return Poly(self.field, self.coeffs[v:])

    def _check(self, other: Poly):
        if not isinstance(other, Poly):
            return False
        if other.field.q != self.field.q:
            raise ParameterError("polynomials over different fields")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(self.field, [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly(self.field)
        q = self.field.q
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(self.field, [c % q for c in out])

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int | FieldElement) -> Poly:
        c = int(c)
        return Poly(self.field, [a * c for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field.q == other.field.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, q={self.field.q})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "X" if i == 1 else f"X^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def from_text(cls, field: PrimeField, text: str, line: int | None = None) -> Poly:
        tokens = text.split()
        if not tokens:
            raise ParseError("empty polynomial", line)
        try:
            values = [int(t) for t in tokens]
        except ValueError as exc:
            raise ParseError(f"non-integer coefficient in {text!r}", line) from exc
        bad = [v for v in values if not 0 <= v < field.q]
        if bad:
            raise ParseError(f"coefficient {bad[0]} outside [0, {field.q})", line)
        return cls(field, values)


def poly_arith(p: Poly, r: Poly | int, op: str) -> Poly:
    """Ring operation ``op`` in {'add', 'sub', 'scalar_mul', 'mul'}."""
    if op == "add":
        return p + r
    if op == "sub":
        return p - r
    if op == "mul":
        return p * r
    if op == "scalar_mul":
        return p.scale(r)
    raise ParameterError(f"unknown polynomial operation {op!r}")


def linear_combination(field: PrimeField, polys: Sequence[Poly], coeffs: Sequence[int]) -> Poly:
    q = field.q
    width = max((len(p.coeffs) for p in polys), default=0)
    acc = [0] * width
    for a, p in zip(coeffs, polys):
        if a:
            for i, c in enumerate(p.coeffs):
                acc[i] += a * c
    return Poly(field, [c % q for c in acc])


def sort_key(p: Poly, length: int) -> tuple[int, ...]:
    return p.padded(length)
