"""Brute-force ground truth.

Deliberately slow and independent of the decoder's code path: every point is
built with polynomial arithmetic, encoded symbol by symbol and compared with
``frs.distance``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ParameterError
from .frs import FoldedWord, FrsParams, distance, encode
from .linalg import Matrix, solve_affine
from .poly import Poly, sort_key
from .subspace import AffineSubspace, check_limit

ORACLE_LIMIT = 10 ** 7


@dataclass(frozen=True)
class OracleList:
    members: tuple[Poly, ...]
    radius: Fraction
    center: FoldedWord

    def __len__(self):
        return len(self.members)


@lru_cache(maxsize=8)
def _codebook(params: FrsParams) -> tuple[tuple[Poly, FoldedWord], ...]:
    return tuple((f, encode(params, f)) for f in params.messages())


def brute_force_list(params: FrsParams, g: FoldedWord, radius, limit: int = ORACLE_LIMIT) -> OracleList:
    check_limit(params.message_space_size(), limit)
    radius = Fraction(radius)
    g.check_shape(params)
    if params.message_space_size() <= 10 ** 5:
        book = _codebook(params)
    else:
        book = ((f, encode(params, f)) for f in params.messages())
    members = [f for f, c in book if distance(c, g) < radius]
    members.sort(key=lambda p: sort_key(p, params.msg_len))
    return OracleList(tuple(members), radius, g)


def subspace_ball_intersection(H: AffineSubspace, g: FoldedWord, radius, limit: int = ORACLE_LIMIT) -> OracleList:
    P = H.params
    check_limit(H.size, limit)
    radius = Fraction(radius)
    members = set()
    for a in H.coordinates():
        f = H.offset
        for alpha, h in zip(a, H.basis):
            f = f + h.scale(alpha)
        if distance(encode(P, f), g) < radius:
            members.add(f)
    return OracleList(tuple(sorted(members, key=lambda p: sort_key(p, P.msg_len))), radius, g)


def code_distance(params: FrsParams, limit: int = ORACLE_LIMIT) -> Fraction:
    """Minimum folded distance, as the least weight of a nonzero codeword."""
    check_limit(params.message_space_size(), limit)
    zero = encode(params, Poly.zero(params.field))
    return min(distance(encode(params, f), zero) for f in params.messages() if not f.is_zero())


def in_subspace(H: AffineSubspace, f: Poly) -> bool:
    L = H.params.msg_len
    if H.dim == 0:
        return f == H.offset
    cols = [b.padded(L) for b in H.basis]
    M = Matrix.from_rows(H.params.field, [[c[r] for c in cols] for r in range(L)], H.dim)
    return solve_affine(M, (f - H.offset).padded(L)).consistent


def adversarial_center(H: AffineSubspace, targets: Sequence[Poly], seed: int) -> FoldedWord:
    """A received word splitting the folded positions round-robin among ``targets``.

    Positions are shuffled with ``seed`` first, then position j of the shuffled
    order copies the symbol of target j mod len(targets).
    """
    P = H.params
    if not targets:
        raise ParameterError("need at least one target")
    if len(targets) > P.N:
        raise ParameterError(f"{len(targets)} targets but only N={P.N} positions")
    for t in targets:
        if not in_subspace(H, t):
            raise ParameterError(f"target {t} is not in the subspace")
    words = [encode(P, t) for t in targets]
    order = np.random.default_rng(seed).permutation(P.N).tolist()
    symbols = [None] * P.N
    for slot, i in enumerate(order):
        symbols[i] = words[slot % len(targets)].symbols[i]
    return FoldedWord(tuple(symbols))
