"""Linear-algebraic list decoding of folded Reed-Solomon codes.

Pipeline: ``interpolate`` a polynomial Q = A_0(X) + sum_s A_s(X) Y_s that
vanishes on every width-k window of the received word, ``extract_subspace``
solving A_0 + sum_s A_s(X) f(gamma^(s-1) X) = 0 for the message f, then prune
the resulting affine subspace down to the codewords inside the ball.

Why the subspace contains the list: with w = m - k + 1 windows per symbol and
deg A_0 <= D + L - 1, deg A_s <= D (L = msg_len), a message agreeing with g on
t folded symbols makes the left side vanish at t*w distinct points, so it is
identically zero once t*w >= D + L. For distance < k/(k+1)(1 - mR/w) the
agreement t satisfies (k+1)*t*w > N*w + k*L, and since t*w is an integer,
t*w >= (N*w + k*L + 1)/(k+1) >= D + L with D = floor((N*w - L + 1)/(k+1)).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .bounds import decoding_radius, frs_list_bound
from .errors import ContractViolation, ParameterError
from .frs import FoldedWord, FrsParams, encode_many, min_agreement
from .linalg import Matrix, nullspace, rank, solve_affine
from .poly import Poly, linear_combination, sort_key
from .subspace import DEFAULT_LIMIT, AffineSubspace, check_limit
from .wronskian import coordinate_matrix

__all__ = [
    "AffineSubspace",
    "InterpolationPoly",
    "DecodeOutcome",
    "interpolation_degree",
    "interpolate",
    "extract_subspace",
    "prune_exhaustive",
    "prune_dim1_frequency",
    "prune_pinning",
    "decode",
]


@dataclass(frozen=True)
class InterpolationPoly:
    a0: Poly
    a: tuple[Poly, ...]
    D: int

    @property
    def k(self) -> int:
        return len(self.a)

    def components(self) -> tuple[Poly, ...]:
        return (self.a0, *self.a)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components())

    def evaluate(self, x: int, ys: Sequence[int]) -> int:
        q = self.a0.field.q
        return (self.a0.eval(x) + sum(A.eval(x) * y for A, y in zip(self.a, ys))) % q

    def normalized(self) -> InterpolationPoly:
        """Divide every component by the largest common power of X."""
        v = min(c.valuation() for c in self.components())
        if v == math.inf or v == 0:
            return self
        return InterpolationPoly(self.a0.shift_down(v), tuple(A.shift_down(v) for A in self.a), self.D)


@dataclass
class DecodeOutcome:
    subspace: AffineSubspace | None  # None: the extraction system was inconsistent
    list: list[Poly]
    radius: Fraction
    stats: dict = dc_field(default_factory=dict)

    @property
    def subspace_dim(self) -> int:
        return -1 if self.subspace is None else self.subspace.dim


def interpolation_degree(params: FrsParams, k: int) -> int:
    w = params.m - k + 1
    return (params.N * w - params.msg_len + 1) // (k + 1)


def agreement_threshold(params: FrsParams, k: int) -> int:
    """Folded agreement that forces a message into the extracted subspace."""
    w = params.m - k + 1
    return -(-(interpolation_degree(params, k) + params.msg_len) // w)


def _check_k(params: FrsParams, k: int):
    if not 1 <= k <= params.m:
        raise ParameterError(f"k={k} must satisfy 1 <= k <= m={params.m}")


def interpolate(params: FrsParams, k: int, g: FoldedWord) -> InterpolationPoly:
    _check_k(params, k)
    g.check_shape(params)
    D = interpolation_degree(params, k)
    if D < 0:
        raise ParameterError(f"interpolation degree D={D} < 0: parameters too aggressive")
    F, L, q = params.field, params.msg_len, params.q
    n0, n1 = D + L, D + 1
    rows = []
    for i, sym in enumerate(params.points):
        for j in range(params.m - k + 1):
            x = sym[j]
            pw = [1] * n0
            for t in range(1, n0):
                pw[t] = pw[t - 1] * x % q
            row = list(pw)
            for s in range(k):
                y = g.symbols[i][j + s]
                row.extend(p * y % q for p in pw[:n1])
            rows.append(row)
    M = Matrix.from_rows(F, rows, n0 + k * n1)
    kernel = nullspace(M)
    if not kernel:
        raise ContractViolation("interpolation system has a trivial kernel")
    v = kernel[0]
    Q = InterpolationPoly(
        Poly(F, v[:n0]),
        tuple(Poly(F, v[n0 + s * n1:n0 + (s + 1) * n1]) for s in range(k)),
        D,
    )
    if Q.is_zero():
        raise ContractViolation("interpolation returned the zero polynomial")
    return Q


def extract_subspace(Q: InterpolationPoly, params: FrsParams) -> AffineSubspace | None:
    """Messages f with A_0 + sum_s A_s(X) f(gamma^(s-1) X) == 0, or None if there are none."""
    if Q.is_zero():
        raise ParameterError("cannot extract from the zero interpolation polynomial")
    Q = Q.normalized()
    F, L, k = params.field, params.msg_len, Q.k
    columns = []
    for j in range(L):
        xj = Poly.monomial(F, j)
        col = Poly.zero(F)
        for s, A in enumerate(Q.a):
            col = col + A * xj.dilate(F.gamma_pow(s))
        columns.append(col)
    nrows = max([len(c.coeffs) for c in columns] + [len(Q.a0.coeffs), 1])
    M = Matrix.from_rows(F, [[c.coeffs[r] if r < len(c.coeffs) else 0 for c in columns] for r in range(nrows)], L)
    rhs = [(-Q.a0).coeffs[r] if r < len(Q.a0.coeffs) else 0 for r in range(nrows)]
    sol = solve_affine(M, rhs)
    if not sol.consistent:
        return None
    if sol.dim > k - 1:
        raise ContractViolation(f"solution space has dimension {sol.dim} > k - 1 = {k - 1}")
    return AffineSubspace(params, Poly(F, sol.particular), tuple(Poly(F, b) for b in sol.basis))


def _sorted(polys, L):
    return sorted(set(polys), key=lambda p: sort_key(p, L))


def _within(params: FrsParams, evals: np.ndarray, g: FoldedWord, radius: Fraction) -> np.ndarray:
    """Boolean mask over rows of unfolded evaluations: distance to g below radius."""
    G = np.array(g.flat(), dtype=np.int64)
    eq = (evals == G).reshape(len(evals), params.N, params.m).all(axis=2)
    return eq.sum(axis=1) >= min_agreement(params.N, radius)


def _bump(stats, key, by=1):
    if stats is not None:
        stats[key] = stats.get(key, 0) + by


def prune_exhaustive(H: AffineSubspace, g: FoldedWord, radius: Fraction,
                     limit: int = DEFAULT_LIMIT, stats: dict | None = None) -> list[Poly]:
    P = H.params
    check_limit(H.size, limit)
    coeffs, evals = H.codewords(limit)
    _bump(stats, "candidates", len(coeffs))
    keep = coeffs[_within(P, evals, g, Fraction(radius))]
    return _sorted((Poly(P.field, row.tolist()) for row in keep), P.msg_len)


def _symbol_evals(P: FrsParams, p: Poly) -> np.ndarray:
    return encode_many(P, [p.padded(P.msg_len)])[0].reshape(P.N, P.m)


def prune_dim1_frequency(H: AffineSubspace, g: FoldedWord, radius: Fraction,
                         stats: dict | None = None) -> list[Poly]:
    """Prune a line by voting: each symbol nominates the unique alpha it is consistent with.

    Symbols where the direction vanishes entirely agree with every point of the
    line or with none; those are counted once for all alphas.
    """
    if H.dim != 1:
        raise ParameterError(f"frequency pruning needs a line, got dimension {H.dim}")
    P = H.params
    F, q = P.field, P.q
    if H.basis[0].is_zero():
        raise ParameterError("line direction is the zero polynomial")
    f0 = _symbol_evals(P, H.offset)
    h1 = _symbol_evals(P, H.basis[0])
    G = np.array(g.symbols, dtype=np.int64)
    votes: Counter = Counter()
    common = 0
    for i in range(P.N):
        nz = np.nonzero(h1[i])[0]
        if len(nz) == 0:
            common += bool((f0[i] == G[i]).all())
            continue
        j = nz[0]
        alpha = F.div(int(G[i, j] - f0[i, j]) % q, int(h1[i, j]))
        if ((f0[i] + alpha * h1[i]) % q == G[i]).all():
            votes[alpha] += 1
    need = min_agreement(P.N, Fraction(radius))
    if common >= need:
        candidates = range(q)
    else:
        candidates = sorted(a for a, c in votes.items() if c + common >= need)
    out = []
    for alpha in candidates:
        _bump(stats, "candidates")
        f = H.point((alpha,))
        if _within(P, encode_many(P, [f.padded(P.msg_len)]), g, radius)[0]:
            out.append(f)
    return _sorted(out, P.msg_len)


def _pin(H: AffineSubspace, i: int, g: FoldedWord) -> AffineSubspace | None:
    """Restrict H to the points agreeing with g on folded position i (1-indexed)."""
    P = H.params
    A = coordinate_matrix(H, i)
    target = [(gv - H.offset.eval(x)) % P.q for gv, x in zip(g.symbols[i - 1], P.points[i - 1])]
    sol = solve_affine(A, target)
    if not sol.consistent:
        return None
    F = P.field
    offset = linear_combination(F, (H.offset, *H.basis), (1, *sol.particular))
    basis = tuple(linear_combination(F, H.basis, v) for v in sol.basis)
    return AffineSubspace(P, offset, basis)


def prune_pinning(H: AffineSubspace, g: FoldedWord, radius: Fraction,
                  limit: int = DEFAULT_LIMIT, stats: dict | None = None) -> list[Poly]:
    """Recursive coordinate pinning.

    Every list member agrees with g on at least ``need`` folded symbols. Symbols
    where A_i has rank 0 agree with all of H or none of it; if those alone reach
    ``need`` every point qualifies and we enumerate, otherwise each member agrees
    on some rank >= 1 symbol, and pinning there drops the dimension by rank(A_i).
    """
    P = H.params
    radius = Fraction(radius)
    need = min_agreement(P.N, radius)
    found: set[Poly] = set()

    def visit(S: AffineSubspace):
        if S.dim == 0:
            _bump(stats, "candidates")
            if _within(P, encode_many(P, [S.offset.padded(P.msg_len)]), g, radius)[0]:
                found.add(S.offset)
            return
        off = _symbol_evals(P, S.offset)
        good, common = [], 0
        for i in range(1, P.N + 1):
            if rank(coordinate_matrix(S, i)) > 0:
                good.append(i)
            elif tuple(off[i - 1].tolist()) == g.symbols[i - 1]:
                common += 1
        if common >= need:
            _bump(stats, "exhaustive_fallbacks")
            found.update(prune_exhaustive(S, g, radius, limit, stats))
            return
        for i in good:
            sub = _pin(S, i, g)
            if sub is not None:
                visit(sub)

    visit(H)
    return _sorted(found, P.msg_len)


def decode(params: FrsParams, k: int, g: FoldedWord, radius: Fraction | None = None,
           limit: int = DEFAULT_LIMIT, strategy: str | None = None) -> DecodeOutcome:
    """List decode ``g``.

    Without an explicit ``radius`` the decoder uses k/(k+1) (1 - m R/(m-k+1))
    and enforces the (k-1)^2 + 1 list-size bound. ``strategy`` forces one of
    'exhaustive', 'frequency', 'pinning'; by default the line case uses
    frequency voting and larger subspaces are enumerated unless q^d exceeds
    ``limit``, in which case pinning is used.
    """
    _check_k(params, k)
    g.check_shape(params)
    guaranteed_radius = radius is None
    if radius is None:
        radius = decoding_radius(params.m, k, params.rate)
    radius = Fraction(radius)
    Q = interpolate(params, k, g)
    H = extract_subspace(Q, params)
    stats = {
        "interpolation_degree": Q.D,
        "complete": min_agreement(params.N, radius) >= agreement_threshold(params, k),
        "candidates": 0,
    }
    if H is None:
        stats["strategy"] = "none"
        return DecodeOutcome(None, [], radius, stats)
    if strategy is None:
        if H.dim == 1:
            strategy = "frequency"
        elif H.size > limit:
            strategy = "pinning"
        else:
            strategy = "exhaustive"
    stats["strategy"] = strategy
    if strategy == "frequency":
        found = prune_dim1_frequency(H, g, radius, stats)
    elif strategy == "pinning":
        found = prune_pinning(H, g, radius, limit, stats)
    elif strategy == "exhaustive":
        found = prune_exhaustive(H, g, radius, limit, stats)
    else:
        raise ParameterError(f"unknown pruning strategy {strategy!r}")
    if guaranteed_radius and len(found) > frs_list_bound(k):
        raise ContractViolation(f"list of size {len(found)} exceeds (k-1)^2 + 1 = {frs_list_bound(k)}")
    return DecodeOutcome(H, found, radius, stats)
