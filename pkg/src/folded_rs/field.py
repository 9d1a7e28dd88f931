"""Prime-field arithmetic.

Bulk data (polynomial coefficients, codeword entries, matrix entries) is kept
as plain reduced ``int`` values in ``[0, q)``; :class:`FieldElement` wraps a
single value for scalar work and operator syntax.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import ParameterError


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def multiplicative_order(a: int, q: int) -> int:
    """Order of ``a`` in the unit group of GF(q), by direct search."""
    a %= q
    if a == 0:
        raise ParameterError("0 has no multiplicative order")
    t, x = 1, a
    while x != 1:
        x = x * a % q
        t += 1
    return t


@dataclass(frozen=True)
class PrimeField:
    """GF(q) together with a designated element ``gamma`` of known order."""

    q: int
    gamma: int
    order: int = dc_field(init=False)

    def __post_init__(self):
        if not is_prime(self.q):
            raise ParameterError(f"modulus {self.q} is not prime")
        if not 1 <= self.gamma <= self.q - 1:
            raise ParameterError(f"gamma={self.gamma} is not a unit of GF({self.q})")
        object.__setattr__(self, "order", multiplicative_order(self.gamma, self.q))

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.q, self)

    def __repr__(self):
        return f"GF({self.q}, gamma={self.gamma})"

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1 % self.q, self)

    def elements(self):
        return range(self.q)

    # int-level helpers used by the polynomial and matrix code
    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return a * b % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return pow(a, self.q - 2, self.q)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.q

    def pow(self, a: int, e: int) -> int:
        # pow(0, 0) == 1 by convention (empty product)
        if e < 0:
            return pow(self.inv(a), -e, self.q)
        return pow(a % self.q, e, self.q)

    def gamma_pow(self, e: int) -> int:
        return pow(self.gamma, e, self.q)


def make_field(q: int, min_order: int = 1, gamma: int | None = None) -> PrimeField:
    """Build GF(q) with a designated element of order >= ``min_order``.

    Without an explicit ``gamma`` the smallest primitive element is chosen
    (prime fields always have one). An explicit ``gamma`` is validated.
    """
    if not is_prime(q):
        raise ParameterError(f"modulus {q} is not prime")
    if min_order > q - 1:
        raise ParameterError(f"no element of GF({q}) has order >= {min_order}")
    if gamma is not None:
        F = PrimeField(q, gamma)
        if F.order < min_order:
            raise ParameterError(f"gamma={gamma} has order {F.order} < {min_order}")
        return F
    if q == 2:
        return PrimeField(2, 1)
    for g in range(2, q):
        if multiplicative_order(g, q) == q - 1:
            return PrimeField(q, g)
    raise ParameterError(f"no primitive element found in GF({q})")  # unreachable for prime q


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ParameterError(f"{self.value} is not reduced mod {self.field.q}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.q != self.field.q:
                raise ParameterError("operands live in different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(v, self.field)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.q == other.field.q and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"

    def __str__(self):
        return str(self.value)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'}; division by zero raises."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ParameterError(f"unknown field operation {op!r}")


def power(a: FieldElement, e: int) -> FieldElement:
    if e < 0:
        raise ParameterError("exponent must be non-negative")
    return a ** e
