"""Exact Gauss-Jordan elimination over GF(q)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContractViolation, ParameterError
from .field import PrimeField


@dataclass(frozen=True)
class Matrix:
    field: PrimeField
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ParameterError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        q = self.field.q
        if any(not 0 <= e < q for e in self.entries):
            raise ParameterError(f"matrix entries must be reduced mod {q}")

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ParameterError("ragged matrix rows")
        q = field.q
        return cls(field, len(rows), cols, tuple(int(x) % q for r in rows for x in r))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> Matrix:
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> Matrix:
        return cls(field, rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, x: Sequence[int]) -> list[int]:
        if len(x) != self.cols:
            raise ParameterError(f"vector of length {len(x)} for {self.cols} columns")
        q = self.field.q
        return [sum(a * b for a, b in zip(self.row(i), x)) % q for i in range(self.rows)]


@dataclass(frozen=True)
class AffineSolutionSet:
    """``particular + span(basis)``, or the inconsistent marker (``particular is None``)."""

    particular: tuple[int, ...] | None
    basis: tuple[tuple[int, ...], ...] = ()

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def dim(self) -> int:
        if self.particular is None:
            raise ParameterError("inconsistent system has no dimension")
        return len(self.basis)


INCONSISTENT = AffineSolutionSet(None, ())


def rref(field: PrimeField, rows: list[list[int]], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row-echelon form over the first ``ncols`` columns.

    Extra trailing columns (an augmented right-hand side) are carried along.
    Returns the pivot columns; the first ``len(pivots)`` rows are the nonzero ones.
    """
    q = field.q
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = pow(pr[c], q - 2, q)
        if inv != 1:
            for j in range(c, len(pr)):
                pr[j] = pr[j] * inv % q
        for i in range(nrows):
            if i != r:
                ri = rows[i]
                f = ri[c]
                if f:
                    for j in range(c, len(pr)):
                        if pr[j]:
                            ri[j] = (ri[j] - f * pr[j]) % q
        pivots.append(c)
        r += 1
    return pivots


def rank(M: Matrix) -> int:
    return len(rref(M.field, M.to_rows(), M.cols))


def _kernel_from_rref(rows: list[list[int]], pivots: list[int], ncols: int, q: int) -> list[tuple[int, ...]]:
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free] % q
        basis.append(tuple(v))
    return basis


def nullspace(M: Matrix) -> list[tuple[int, ...]]:
    """Kernel basis with free variables set to unit vectors, in column order."""
    rows = M.to_rows()
    pivots = rref(M.field, rows, M.cols)
    return _kernel_from_rref(rows, pivots, M.cols, M.field.q)


def solve_affine(M: Matrix, b: Sequence[int], check: bool = True) -> AffineSolutionSet:
    """All solutions of ``M x = b``; inconsistency is returned, not raised."""
    if len(b) != M.rows:
        raise ParameterError(f"right-hand side has length {len(b)}, expected {M.rows}")
    q = M.field.q
    n = M.cols
    rows = [list(M.row(i)) + [int(b[i]) % q] for i in range(M.rows)]
    pivots = rref(M.field, rows, n)
    if any(rows[i][n] for i in range(len(pivots), M.rows)):
        return INCONSISTENT
    x = [0] * n
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][n]
    basis = _kernel_from_rref(rows, pivots, n, q)
    sol = AffineSolutionSet(tuple(x), tuple(basis))
    if check:
        _verify(M, b, sol)
    return sol


def _verify(M: Matrix, b: Sequence[int], sol: AffineSolutionSet):
    q = M.field.q
    if M.apply(sol.particular) != [int(v) % q for v in b]:
        raise ContractViolation("particular solution does not satisfy the system")
    zero = [0] * M.rows
    for v in sol.basis:
        if M.apply(v) != zero:
            raise ContractViolation("kernel vector is not annihilated")
    if sol.basis and rank(Matrix.from_rows(M.field, sol.basis, M.cols)) != len(sol.basis):
        raise ContractViolation("kernel basis is linearly dependent")
