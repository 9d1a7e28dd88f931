from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import EnumerationLimitExceeded, ParameterError
from .frs import FrsParams, encode_many
from .linalg import Matrix, rank
from .poly import Poly, linear_combination

DEFAULT_LIMIT = 10 ** 6


@dataclass(frozen=True)
class AffineSubspace:
    """``offset + span(basis)`` inside the message space F_q[X]^{<msg_len}."""

    params: FrsParams
    offset: Poly
    basis: tuple[Poly, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        L = self.params.msg_len
        for p in (self.offset, *self.basis):
            if p.degree >= L:
                raise ParameterError(f"polynomial of degree {p.degree} outside the message space")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.params.q ** self.dim

    def basis_rank(self) -> int:
        if not self.basis:
            return 0
        L = self.params.msg_len
        return rank(Matrix.from_rows(self.params.field, [b.padded(L) for b in self.basis], L))

    def is_independent(self) -> bool:
        return self.basis_rank() == self.dim

    def point(self, alphas: Sequence[int]) -> Poly:
        if len(alphas) != self.dim:
            raise ParameterError(f"{len(alphas)} coordinates for a {self.dim}-dim subspace")
        return linear_combination(self.params.field, (self.offset, *self.basis), (1, *alphas))

    def coordinates(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(self.params.q), repeat=self.dim)

    def points(self, limit: int = DEFAULT_LIMIT) -> Iterator[Poly]:
        check_limit(self.size, limit)
        for a in self.coordinates():
            yield self.point(a)

    def coefficient_rows(self, limit: int = DEFAULT_LIMIT) -> tuple[np.ndarray, np.ndarray]:
        """All (alphas, message coefficients) pairs as integer arrays."""
        check_limit(self.size, limit)
        q, L, d = self.params.q, self.params.msg_len, self.dim
        if d == 0:
            alphas = np.zeros((1, 0), dtype=np.int64)
        else:
            grids = np.meshgrid(*([np.arange(q, dtype=np.int64)] * d), indexing="ij")
            alphas = np.stack([g.ravel() for g in grids], axis=1)
        gens = np.array([p.padded(L) for p in self.basis], dtype=np.int64).reshape(d, L)
        coeffs = (np.array(self.offset.padded(L), dtype=np.int64) + alphas @ gens) % q
        return alphas, coeffs

    def codewords(self, limit: int = DEFAULT_LIMIT) -> tuple[np.ndarray, np.ndarray]:
        """Message coefficients and their n unfolded evaluations, for every point."""
        _, coeffs = self.coefficient_rows(limit)
        return coeffs, encode_many(self.params, coeffs)

    def __str__(self):
        basis = ", ".join(f"[{b.to_text()}]" for b in self.basis)
        return f"[{self.offset.to_text()}] + span{{{basis}}}"


def check_limit(needed: int, limit: int):
    if needed > limit:
        raise EnumerationLimitExceeded(needed, limit)


def affine_hull(params: FrsParams, points: Sequence[Poly]) -> AffineSubspace:
    """Smallest affine subspace containing ``points`` (independent basis)."""
    if not points:
        raise ParameterError("affine hull of no points")
    L = params.msg_len
    base = points[0]
    basis: list[Poly] = []
    for p in points[1:]:
        cand = p - base
        if cand.is_zero():
            continue
        trial = basis + [cand]
        if rank(Matrix.from_rows(params.field, [b.padded(L) for b in trial], L)) == len(trial):
            basis = trial
    return AffineSubspace(params, base, tuple(basis))
