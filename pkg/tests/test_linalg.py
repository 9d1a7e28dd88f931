import itertools

import numpy as np
import pytest

from folded_rs.field import make_field
from folded_rs.linalg import Matrix, nullspace, rank, solve_affine

F = make_field(13)
F5 = make_field(5)


def test_rank_examples():
    assert rank(Matrix.identity(F, 3)) == 3
    assert rank(Matrix.zeros(F, 4, 2)) == 0
    assert rank(Matrix.from_rows(F, [[1, 2], [2, 4]])) == 1


def test_solve_examples():
    s = solve_affine(Matrix.identity(F, 2), [3, 5])
    assert s.particular == (3, 5) and s.basis == ()
    s = solve_affine(Matrix.zeros(F, 2, 2), [0, 0])
    assert s.particular == (0, 0) and set(s.basis) == {(1, 0), (0, 1)}
    s = solve_affine(Matrix.from_rows(F, [[1, 1], [2, 2]]), [1, 3])
    assert not s.consistent


def test_nullspace_examples():
    assert nullspace(Matrix.identity(F, 4)) == []
    assert nullspace(Matrix.from_rows(F, [[1, 2]])) == [(11, 1)]
    assert len(nullspace(Matrix.zeros(F, 1, 3))) == 3


def _random_matrix(rng, field, rows, cols, rank_cap=None):
    q = field.q
    A = rng.integers(0, q, size=(rows, cols))
    if rank_cap is not None:
        A = (rng.integers(0, q, size=(rows, rank_cap)) @ rng.integers(0, q, size=(rank_cap, cols))) % q
    return Matrix.from_rows(field, A.tolist(), cols)


def test_rank_nullity_random():
    rng = np.random.default_rng(0)
    for _ in range(200):
        r, c = rng.integers(1, 7, size=2)
        M = _random_matrix(rng, F, int(r), int(c), int(rng.integers(0, 5)))
        ker = nullspace(M)
        assert rank(M) + len(ker) == M.cols
        for v in ker:
            assert M.apply(v) == [0] * M.rows
        if ker:
            assert rank(Matrix.from_rows(F, ker, M.cols)) == len(ker)


def test_solution_set_matches_enumeration():
    # over GF(5) with <= 4 unknowns the full solution set can be listed
    rng = np.random.default_rng(1)
    for _ in range(60):
        r, c = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        M = _random_matrix(rng, F5, r, c, int(rng.integers(0, 3)))
        b = rng.integers(0, 5, size=r).tolist()
        brute = {x for x in itertools.product(range(5), repeat=c) if M.apply(x) == b}
        s = solve_affine(M, b)
        if not s.consistent:
            assert brute == set()
            continue
        spanned = set()
        for coef in itertools.product(range(5), repeat=len(s.basis)):
            x = list(s.particular)
            for a, v in zip(coef, s.basis):
                x = [(xi + a * vi) % 5 for xi, vi in zip(x, v)]
            spanned.add(tuple(x))
        assert spanned == brute


def test_matrix_validation():
    from folded_rs.errors import ParameterError

    with pytest.raises(ParameterError):
        Matrix(F, 2, 2, (1, 2, 3))
    with pytest.raises(ParameterError):
        Matrix(F, 1, 1, (13,))
    with pytest.raises(ParameterError):
        solve_affine(Matrix.identity(F, 2), [1])
