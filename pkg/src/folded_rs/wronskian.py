"""Folded Wronskians and per-coordinate rank profiles of affine subspaces.

For a subspace ``offset + span(h_1..h_d)``, pinning folded position i to agree
with a received word imposes m linear equations on the coordinates; their
matrix A_i has entries h_s(gamma^((i-1)m + j - 1)). The total rank deficit
sum(d - rank A_i) is at most d * msg_len / (m - d + 1), because the folded
Wronskian of the basis is a nonzero polynomial of degree <= d(msg_len - 1)
that vanishes to order d - rank(A_i) at m - d + 1 points of every block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ContractViolation, ParameterError
from .field import PrimeField
from .linalg import Matrix, rank
from .poly import Poly
from .subspace import AffineSubspace


def coordinate_matrix(H: AffineSubspace, i: int) -> Matrix:
    """The m x d matrix A_i for folded position ``i`` (1-indexed)."""
    P = H.params
    if not 1 <= i <= P.N:
        raise ParameterError(f"position {i} outside [1, {P.N}]")
    pts = P.points[i - 1]
    return Matrix.from_rows(P.field, [[h.eval(x) for h in H.basis] for x in pts], H.dim)


def _det(field: PrimeField, M: list[list[Poly]]) -> Poly:
    n = len(M)
    if n == 1:
        return M[0][0]
    total = Poly.zero(field)
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det(field, minor)
        total = total - term if j % 2 else total + term
    return total


def folded_wronskian(polys: Sequence[Poly], field: PrimeField) -> Poly:
    """det [p_j(gamma^(i-1) X)]_{i,j} by cofactor expansion over F_q[X]."""
    d = len(polys)
    if d < 1:
        raise ParameterError("folded Wronskian of an empty set")
    rows = [[p.dilate(field.gamma_pow(i)) for p in polys] for i in range(d)]
    D = _det(field, rows)
    max_deg = max((p.degree for p in polys), default=0)
    if not D.is_zero() and D.degree > d * max_deg:
        raise ContractViolation(f"Wronskian degree {D.degree} exceeds {d}*{max_deg}")
    return D


def coefficient_rank(polys: Sequence[Poly], field: PrimeField) -> int:
    if not polys:
        return 0
    width = max(max(len(p.coeffs) for p in polys), 1)
    return rank(Matrix.from_rows(field, [p.padded(width) for p in polys], width))


def is_independent(polys: Sequence[Poly], field: PrimeField | None = None, cross_check: bool = True) -> bool:
    """Linear independence via the folded Wronskian criterion.

    Valid while every degree is below the order of gamma. With ``cross_check``
    the answer is compared against the coefficient-matrix rank.
    """
    if not polys:
        return True
    field = field or polys[0].field
    top = max(p.degree for p in polys)
    if top >= field.order:
        raise ParameterError(f"degree {top} not below ord(gamma) = {field.order}")
    answer = not folded_wronskian(polys, field).is_zero()
    if cross_check and answer != (coefficient_rank(polys, field) == len(polys)):
        raise ContractViolation("Wronskian criterion disagrees with coefficient rank")
    return answer


@dataclass(frozen=True)
class RankProfile:
    ranks: tuple[int, ...]
    d: int
    deficit_sum: int
    bound: Fraction
    bad_set_size: int

    @property
    def N(self) -> int:
        return len(self.ranks)

    CSV_HEADER = "N,d,deficit_sum,bound,bad_set_size"

    def to_csv_row(self) -> str:
        return f"{self.N},{self.d},{self.deficit_sum},{self.bound},{self.bad_set_size}"


def deficit_bound(d: int, msg_len: int, m: int) -> Fraction:
    if m - d + 1 <= 0:
        raise ParameterError(f"deficit bound needs d <= m (d={d}, m={m})")
    return Fraction(d * msg_len, m - d + 1)


def rank_profile(H: AffineSubspace, check: bool = True) -> RankProfile:
    P = H.params
    d = H.dim
    if not H.is_independent():
        raise ParameterError("rank profile needs a linearly independent basis")
    ranks = tuple(rank(coordinate_matrix(H, i)) if d else 0 for i in range(1, P.N + 1))
    prof = RankProfile(
        ranks=ranks,
        d=d,
        deficit_sum=sum(d - r for r in ranks),
        bound=deficit_bound(d, P.msg_len, P.m),
        bad_set_size=sum(r == 0 for r in ranks) if d else 0,
    )
    if check and prof.deficit_sum > prof.bound:
        raise ContractViolation(
            f"rank deficit {prof.deficit_sum} exceeds d*msg_len/(m-d+1) = {prof.bound}"
        )
    return prof
