import itertools

import pytest
from hypothesis import given

from conftest import all_pairs, pairs
from limitseries import (
    A3Violation,
    LengthMismatch,
    NotStrictlyIncreasing,
    OutOfRange,
    VanishingPair,
    b_sequences,
    connected_at,
    enumerate_pairs,
    is_connected,
    is_refined,
    ramification_sum,
    validate_pair,
)
from limitseries.errors import IndexOutOfRange, InvalidPairError


def witnesses_oracle(pair, i):
    """Definition read literally: scan every j in 0..d."""
    aY, aZ, d, r = set(pair.aY), set(pair.aZ), pair.d, pair.r
    out = set()
    for j in range(d + 1):
        if not d - pair.aZ[r - i] <= j <= pair.aY[i]:
            continue
        if set(range(j, pair.aY[i] + 1)) <= aY and set(range(d - j, pair.aZ[r - i] + 1)) <= aZ:
            out.add(j)
    return out


EXAMPLE_PAIR = (1, 2, [1, 2], [1, 2])
REFINED = (1, 2, [0, 1], [1, 2])
DISCONNECTED = (0, 2, [2], [2])


class TestValidate:
    def test_example_pair(self):
        p = validate_pair(*EXAMPLE_PAIR)
        assert p.aY == (1, 2) and p.aZ == (1, 2)

    def test_refined_pair(self):
        validate_pair(*REFINED)

    def test_a3_violation(self):
        with pytest.raises(A3Violation) as exc:
            validate_pair(1, 2, [0, 1], [0, 1])
        assert exc.value.i == 0

    def test_degenerate_d0(self):
        p = validate_pair(0, 0, [0], [0])
        assert is_refined(p)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            validate_pair(1, 2, [1], [1, 2])

    @pytest.mark.parametrize(
        "aY, aZ, side, index",
        [([2, 1], [1, 2], "aY", 1), ([1, 2], [2, 2], "aZ", 1), ([1, 1], [1, 2], "aY", 1)],
    )
    def test_not_increasing(self, aY, aZ, side, index):
        with pytest.raises(NotStrictlyIncreasing) as exc:
            validate_pair(1, 2, aY, aZ)
        assert (exc.value.side, exc.value.index) == (side, index)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange) as exc:
            validate_pair(1, 2, [1, 3], [1, 2])
        assert (exc.value.side, exc.value.index) == ("aY", 1)
        with pytest.raises(OutOfRange):
            validate_pair(0, 2, [2], [-1])

    def test_negative_and_huge(self):
        with pytest.raises(InvalidPairError):
            validate_pair(-1, 2, [], [])
        with pytest.raises(InvalidPairError):
            validate_pair(0, 10**6 + 1, [10**6 + 1], [10**6 + 1])

    def test_json_round_trip(self):
        p = validate_pair(*EXAMPLE_PAIR)
        assert p.to_dict() == {"r": 1, "d": 2, "aY": [1, 2], "aZ": [1, 2]}
        assert VanishingPair.from_dict(p.to_dict()) == p
        with pytest.raises(InvalidPairError):
            VanishingPair.from_dict({"r": 1, "d": 2, "aY": [1, 2]})


@pytest.mark.parametrize(
    "args, bY, bZ",
    [
        (EXAMPLE_PAIR, (2, 2, 1), (1, 2, 2)),
        (REFINED, (2, 1, 0), (1, 2, 2)),
        (DISCONNECTED, (1, 1, 1), (1, 1, 1)),
    ],
)
def test_b_sequences_examples(args, bY, bZ):
    assert b_sequences(validate_pair(*args)) == (bY, bZ)


@pytest.mark.parametrize(
    "args, sigma, refined",
    [(EXAMPLE_PAIR, 2, False), (REFINED, 0, True), (DISCONNECTED, 2, False), ((0, 0, [0], [0]), 0, True)],
)
def test_ramification_and_refined(args, sigma, refined):
    p = validate_pair(*args)
    assert ramification_sum(p) == sigma
    assert is_refined(p) is refined


def _check_b_structure(pair):
    r, d = pair.r, pair.d
    bY, bZ = b_sequences(pair)
    assert bY[0] == r + 1 and bZ[d] == r + 1
    for j in range(d):
        assert bY[j] - bY[j + 1] == (1 if j in pair.aY else 0)
    for j in range(1, d + 1):
        assert bZ[j] - bZ[j - 1] == (1 if d - j in pair.aZ else 0)


@given(pairs())
def test_b_structure_random(pair):
    _check_b_structure(pair)


@given(pairs())
def test_sigma_nonnegative_and_refined(pair):
    s = ramification_sum(pair)
    assert s >= 0
    assert (s == 0) == is_refined(pair)


class TestConnectedness:
    def test_example_pair(self):
        p = validate_pair(*EXAMPLE_PAIR)
        assert 1 in connected_at(p, 0).witnesses
        assert 1 in connected_at(p, 1).witnesses
        assert is_connected(p)

    def test_disconnected_example(self):
        p = validate_pair(*DISCONNECTED)
        assert connected_at(p, 0).witnesses == ()
        assert witnesses_oracle(p, 0) == set()
        assert not is_connected(p)

    def test_refined_singleton(self):
        p = validate_pair(*REFINED)
        for i in range(p.r + 1):
            assert p.aY[i] in connected_at(p, i).witnesses
        assert is_connected(p)

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            connected_at(validate_pair(*EXAMPLE_PAIR), 2)

    def test_matches_oracle_exhaustively(self):
        for p in all_pairs(max_d=7, max_r=7):
            for i in range(p.r + 1):
                assert set(connected_at(p, i).witnesses) == witnesses_oracle(p, i), (p, i)

    @given(pairs())
    def test_matches_oracle_random(self, pair):
        for i in range(pair.r + 1):
            w = connected_at(pair, i).witnesses
            assert set(w) == witnesses_oracle(pair, i)
            assert all(pair.d - pair.aZ[pair.r - i] <= j <= pair.aY[i] for j in w)

    @given(pairs())
    def test_witness_sets_are_intervals(self, pair):
        for i in range(pair.r + 1):
            w = connected_at(pair, i).witnesses
            if w:
                assert list(w) == list(range(w[0], w[-1] + 1))

    def test_witness_sets_are_intervals_exhaustive(self):
        for p in all_pairs(max_d=8, max_r=8):
            for i in range(p.r + 1):
                w = witnesses_oracle(p, i)
                if w:
                    assert w == set(range(min(w), max(w) + 1)), (p, i)

    def test_monotone_witnesses(self):
        for p in all_pairs():
            wit = [set(connected_at(p, i).witnesses) for i in range(p.r + 1)]
            for i1, i2 in itertools.combinations_with_replacement(range(p.r + 1), 2):
                for j1 in wit[i1]:
                    for j2 in wit[i2]:
                        if j1 < j2:
                            continue
                        for i in range(i1, i2 + 1):
                            assert set(range(j2, j1 + 1)) <= wit[i], (p, i1, i2, j1, j2)

    def test_refined_implies_connected(self):
        n = 0
        for d in range(7):
            for r in range(d + 1):
                for p in (q for q in enumerate_pairs(r, d) if is_refined(q)):
                    assert is_connected(p)
                    n += 1
        assert n > 0

