"""Folded Reed-Solomon codes: parameters, encoding, folded distance, channel."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import ParameterError, ParseError
from .field import PrimeField, make_field
from .poly import Poly


@dataclass(frozen=True)
class FrsParams:
    """An m-folded RS code of unfolded length n and ``msg_len`` message coefficients.

    Codeword symbol i (0-indexed) holds f(gamma^(i*m)), ..., f(gamma^(i*m+m-1)).
    """

    field: PrimeField
    m: int
    n: int
    msg_len: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ParameterError("m and n must be positive")
        if self.n % self.m:
            raise ParameterError(f"m={self.m} does not divide n={self.n}")
        if self.n > self.field.order:
            raise ParameterError(
                f"n={self.n} exceeds the order {self.field.order} of gamma={self.field.gamma}"
            )
        if not 1 <= self.msg_len <= self.n:
            raise ParameterError(f"msg_len={self.msg_len} must lie in [1, n={self.n}]")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def N(self) -> int:
        return self.n // self.m

    @property
    def rate(self) -> Fraction:
        return Fraction(self.msg_len, self.n)

    @property
    def design_distance(self) -> Fraction:
        """Unfolded RS distance 1 - (msg_len - 1)/n; folding never lowers it."""
        return 1 - Fraction(self.msg_len - 1, self.n)

    @cached_property
    def points(self) -> tuple[tuple[int, ...], ...]:
        """Evaluation points grouped by folded symbol."""
        F = self.field
        return tuple(
            tuple(F.gamma_pow(i * self.m + j) for j in range(self.m)) for i in range(self.N)
        )

    @cached_property
    def flat_points(self) -> tuple[int, ...]:
        return tuple(x for sym in self.points for x in sym)

    @cached_property
    def vandermonde(self) -> np.ndarray:
        """n x msg_len matrix of x^j, used for fast batch encoding."""
        q = self.q
        V = np.empty((self.n, self.msg_len), dtype=np.int64)
        for r, x in enumerate(self.flat_points):
            t = 1
            for j in range(self.msg_len):
                V[r, j] = t
                t = t * x % q
        return V

    def message_space_size(self) -> int:
        return self.q ** self.msg_len

    def messages(self) -> Iterator[Poly]:
        """Every message polynomial, in coefficient-lexicographic order."""
        for c in itertools.product(range(self.q), repeat=self.msg_len):
            yield Poly(self.field, reversed(c))

    def to_text(self) -> str:
        return f"{self.q} {self.field.gamma} {self.m} {self.n} {self.msg_len}"

    @classmethod
    def from_text(cls, text: str) -> FrsParams:
        lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
        lines = [(i, ln) for i, ln in lines if ln]
        if len(lines) != 1:
            raise ParseError("params must be one line 'q gamma m n msg_len'", lines[1][0] if lines else None)
        lineno, body = lines[0]
        parts = body.split()
        if len(parts) != 5:
            raise ParseError(f"expected 5 integers 'q gamma m n msg_len', got {len(parts)}", lineno)
        try:
            q, gamma, m, n, msg_len = (int(p) for p in parts)
        except ValueError as exc:
            raise ParseError(f"non-integer field in {body!r}", lineno) from exc
        try:
            return make_params(q, m, n, msg_len, gamma=gamma)
        except ParameterError as exc:
            raise ParseError(str(exc), lineno) from exc


def make_params(q: int, m: int, n: int, msg_len: int, gamma: int | None = None) -> FrsParams:
    return FrsParams(make_field(q, n, gamma=gamma), m, n, msg_len)


def canonical_params() -> FrsParams:
    """The q=13, gamma=2, m=3, n=12, msg_len=2 instance (169 codewords)."""
    return make_params(13, 3, 12, 2, gamma=2)


@dataclass(frozen=True)
class FoldedWord:
    symbols: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(s) for s in self.symbols}
        if len(widths) > 1:
            raise ParameterError("folded symbols of unequal width")

    @classmethod
    def from_flat(cls, values: Sequence[int], m: int) -> FoldedWord:
        values = [int(v) for v in values]
        return cls(tuple(tuple(values[i:i + m]) for i in range(0, len(values), m)))

    @property
    def N(self) -> int:
        return len(self.symbols)

    @property
    def m(self) -> int:
        return len(self.symbols[0]) if self.symbols else 0

    def flat(self) -> tuple[int, ...]:
        return tuple(x for s in self.symbols for x in s)

    def check_shape(self, params: FrsParams):
        if self.N != params.N or self.m != params.m:
            raise ParameterError(
                f"word has shape {self.N}x{self.m}, code expects {params.N}x{params.m}"
            )
        if any(not 0 <= x < params.q for x in self.flat()):
            raise ParameterError(f"word entries must be reduced mod {params.q}")

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in s) for s in self.symbols) + "\n"

    @classmethod
    def from_text(cls, text: str, params: FrsParams | None = None) -> FoldedWord:
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            try:
                vals = tuple(int(t) for t in body.split())
            except ValueError as exc:
                raise ParseError(f"non-integer entry in {body!r}", lineno) from exc
            if rows and len(vals) != len(rows[0]):
                raise ParseError(f"symbol width {len(vals)}, expected {len(rows[0])}", lineno)
            if params is not None:
                if len(vals) != params.m:
                    raise ParseError(f"symbol width {len(vals)}, expected m={params.m}", lineno)
                if any(not 0 <= v < params.q for v in vals):
                    raise ParseError(f"entry outside [0, {params.q})", lineno)
            rows.append(vals)
        if params is not None and len(rows) != params.N:
            raise ParseError(f"word has {len(rows)} symbols, expected N={params.N}")
        return cls(tuple(rows))


def encode(params: FrsParams, f: Poly) -> FoldedWord:
    if f.degree >= params.msg_len:
        raise ParameterError(f"deg f = {f.degree} but messages have degree < {params.msg_len}")
    return FoldedWord(tuple(tuple(f.eval(x) for x in sym) for sym in params.points))


def encode_many(params: FrsParams, coeff_rows: np.ndarray) -> np.ndarray:
    """Batch encode: rows of msg_len coefficients -> rows of n evaluations."""
    return (np.asarray(coeff_rows, dtype=np.int64) @ params.vandermonde.T) % params.q


def _same_shape(a: FoldedWord, b: FoldedWord):
    if a.N != b.N or a.m != b.m:
        raise ParameterError(f"shape mismatch: {a.N}x{a.m} vs {b.N}x{b.m}")


def agreement_count(a: FoldedWord, b: FoldedWord) -> int:
    _same_shape(a, b)
    return sum(x == y for x, y in zip(a.symbols, b.symbols))


def distance(a: FoldedWord, b: FoldedWord) -> Fraction:
    """Fraction of folded positions where the whole m-tuples differ."""
    _same_shape(a, b)
    if a.N == 0:
        return Fraction(0)
    return Fraction(a.N - agreement_count(a, b), a.N)


def agreement(a: FoldedWord, b: FoldedWord) -> Fraction:
    return 1 - distance(a, b)


def min_agreement(N: int, radius: Fraction) -> int:
    """Least symbol agreement a with (N - a)/N < radius."""
    return max(math.floor(N * (1 - Fraction(radius))) + 1, 0)


def random_word(params: FrsParams, rng: np.random.Generator) -> FoldedWord:
    vals = rng.integers(0, params.q, size=params.n)
    return FoldedWord.from_flat(vals.tolist(), params.m)


def random_message(params: FrsParams, rng: np.random.Generator) -> Poly:
    return Poly(params.field, rng.integers(0, params.q, size=params.msg_len).tolist())


def corrupt(params: FrsParams, w: FoldedWord, e: int, seed: int) -> FoldedWord:
    """Replace exactly ``e`` folded symbols, each by a different m-tuple."""
    w.check_shape(params)
    if not 0 <= e <= params.N:
        raise ParameterError(f"error count {e} outside [0, N={params.N}]")
    rng = np.random.default_rng(seed)
    positions = rng.choice(params.N, size=e, replace=False).tolist() if e else []
    symbols = list(w.symbols)
    for i in positions:
        new = symbols[i]
        while new == symbols[i]:
            new = tuple(rng.integers(0, params.q, size=params.m).tolist())
        symbols[i] = new
    return FoldedWord(tuple(symbols))
