import math
from fractions import Fraction

import numpy as np
import pytest

from folded_rs.errors import ParameterError, ParseError
from folded_rs.frs import (FoldedWord, FrsParams, agreement, corrupt, distance, encode, encode_many,
                           make_params, min_agreement)
from folded_rs.poly import Poly


def test_encode_identity_polynomial(P):
    # powers of 2 mod 13, folded in threes
    powers = [pow(2, e, 13) for e in range(12)]
    expected = [tuple(powers[3 * i:3 * i + 3]) for i in range(4)]
    assert expected == [(1, 2, 4), (8, 3, 6), (12, 11, 9), (5, 10, 7)]
    assert list(encode(P, Poly.x(P.field)).symbols) == expected


def test_encode_zero_and_constant(P):
    assert encode(P, Poly.zero(P.field)).flat() == (0,) * 12
    assert set(encode(P, Poly.constant(P.field, 7)).flat()) == {7}


def test_encode_rejects_high_degree(P):
    with pytest.raises(ParameterError):
        encode(P, Poly(P.field, [1, 2, 3]))


def test_encode_many_matches_encode(P, rng):
    msgs = rng.integers(0, 13, size=(30, 2))
    batch = encode_many(P, msgs)
    for row, c in zip(msgs, batch):
        assert tuple(c.tolist()) == encode(P, Poly(P.field, row.tolist())).flat()


def test_distance_examples(P):
    a = encode(P, Poly.x(P.field))
    assert distance(a, a) == 0
    assert agreement(a, a) == 1
    syms = list(a.symbols)
    syms[2] = (syms[2][0], (syms[2][1] + 1) % 13, syms[2][2])
    assert distance(a, FoldedWord(tuple(syms))) == Fraction(1, 4)
    other = FoldedWord(tuple(tuple((x + 1) % 13 for x in s) for s in a.symbols))
    assert agreement(a, other) == 0


def test_distance_shape_mismatch(P):
    a = encode(P, Poly.x(P.field))
    with pytest.raises(ParameterError):
        distance(a, FoldedWord(a.symbols[:3]))


def test_canonical_code_distance_by_enumeration(P):
    words = [encode(P, f) for f in P.messages()]
    assert len(words) == 169
    dmin = min(distance(a, b) for i, a in enumerate(words) for b in words[i + 1:])
    # two distinct lines agree on <= msg_len - 1 = 1 unfolded point, so no folded symbol is shared
    assert dmin == 1
    assert dmin >= 1 - Fraction(P.m * (P.msg_len - 1), P.n)
    assert len(set(words)) == 169  # injective


def test_unfolded_agreement_bound(P):
    words = [encode(P, f).flat() for f in P.messages()]
    worst = max(sum(x == y for x, y in zip(a, b)) for i, a in enumerate(words) for b in words[i + 1:])
    assert worst <= P.msg_len - 1


def test_folding_preserves_rate(P):
    # log_{q^m} |C| / N == msg_len / n
    size = len({encode(P, f) for f in P.messages()})
    assert math.isclose(math.log(size, P.q ** P.m) / P.N, P.msg_len / P.n)
    assert P.rate == Fraction(1, 6)


def test_corrupt_examples(P):
    w = encode(P, Poly(P.field, [3, 4]))
    assert corrupt(P, w, 0, 1) == w
    assert distance(w, corrupt(P, w, P.N, 1)) == 1
    assert distance(w, corrupt(P, w, 2, 1)) == Fraction(1, 2)
    assert corrupt(P, w, 2, 99) == corrupt(P, w, 2, 99)
    with pytest.raises(ParameterError):
        corrupt(P, w, 5, 0)


def test_corrupt_exact_count_many_seeds():
    P = make_params(3, 2, 2, 1)  # tiny alphabet: resampling is actually exercised
    w = FoldedWord(((0, 0),))
    for seed in range(50):
        assert distance(w, corrupt(P, w, 1, seed)) == 1


def test_params_validation():
    with pytest.raises(ParameterError):
        make_params(13, 5, 12, 2)
    with pytest.raises(ParameterError):
        make_params(13, 3, 12, 0)
    with pytest.raises(ParameterError):
        make_params(13, 3, 12, 2, gamma=3)  # order 3 < n


def test_params_text(P):
    assert P.to_text() == "13 2 3 12 2"
    assert FrsParams.from_text("# canonical\n13 2 3 12 2\n") == P
    with pytest.raises(ParseError, match="line 1"):
        FrsParams.from_text("13 2 3 12")
    with pytest.raises(ParseError, match="line 2"):
        FrsParams.from_text("\n13 2 5 12 2\n")


def test_word_text(P):
    w = encode(P, Poly.x(P.field))
    assert w.to_text() == "1 2 4\n8 3 6\n12 11 9\n5 10 7\n"
    assert FoldedWord.from_text(w.to_text(), P) == w
    with pytest.raises(ParseError, match="line 3"):
        FoldedWord.from_text("1 2 4\n8 3 6\n12 11\n5 10 7\n", P)
    with pytest.raises(ParseError, match="line 2"):
        FoldedWord.from_text("1 2 4\n8 3 13\n12 11 9\n5 10 7\n", P)
    with pytest.raises(ParseError):
        FoldedWord.from_text("1 2 4\n", P)


@pytest.mark.parametrize("N,radius,expected", [
    (4, Fraction(1, 2), 3),
    (4, Fraction(5, 8), 2),
    (4, Fraction(5, 12), 3),
    (4, Fraction(0), 5),
    (4, Fraction(1), 1),
    (4, Fraction(3, 2), 0),
])
def test_min_agreement(N, radius, expected):
    assert min_agreement(N, radius) == expected
    # oracle: smallest a in [0, N+1] whose distance (N - a)/N is below the radius
    assert expected == next(a for a in range(N + 2) if Fraction(N - a, N) < radius)
