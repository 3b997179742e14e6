import pytest
from hypothesis import given, settings

from conftest import all_pairs, pairs
from limitseries import (
    NotConnected,
    NotConnectedAt,
    build_optimal_triple,
    build_trace,
    check_admissible,
    connected_at,
    dimension,
    greatest_witness,
    is_connected,
    is_refined,
    max_dimension,
    ramification_sum,
    sync_map,
    validate_pair,
)

EXAMPLE = validate_pair(1, 2, [1, 2], [1, 2])
REFINED = validate_pair(1, 2, [0, 1], [1, 2])
LONE = validate_pair(0, 2, [2], [2])


class TestGreatestWitness:
    def test_example_pair(self):
        assert greatest_witness(EXAMPLE, 0) == 1
        assert greatest_witness(EXAMPLE, 1) == 1

    def test_refined(self):
        for i in range(REFINED.r + 1):
            assert greatest_witness(REFINED, i) == REFINED.aY[i]

    def test_not_connected_at(self):
        with pytest.raises(NotConnectedAt):
            greatest_witness(LONE, 0)


class TestTrace:
    def test_example_pair(self):
        t = build_trace(EXAMPLE)
        assert t.frakJ == (1, 1)
        assert t.Jhat == {1} and t.J == (1,) and t.s == 1
        assert t.I == ({0, 1}, {0, 1}, frozenset())
        assert t.to_dict() == {"frakJ": [1, 1], "J": [1], "Isizes": [2, 2, 0]}

    def test_refined(self):
        t = build_trace(REFINED)
        assert t.frakJ == (0, 1)
        assert t.Jhat == {0, 1} and t.J == (1,)
        assert t.I[1] == {1} and t.I[2] == frozenset()

    def test_degenerate(self):
        t = build_trace(validate_pair(0, 0, [0], [0]))
        assert t.frakJ == (0,) and t.J == () and t.s == 0

    def test_not_connected(self):
        with pytest.raises(NotConnected):
            build_trace(LONE)
        with pytest.raises(NotConnected):
            build_optimal_triple(LONE)


def check_trace(pair):
    r, d = pair.r, pair.d
    t = build_trace(pair)
    bY, bZ = pair.b
    frak, cuts, I = t.frakJ, t.breakpoints, t.I
    assert all(frak[i] <= frak[i + 1] for i in range(r))
    for i, j in enumerate(frak):
        assert j == max(connected_at(pair, i).witnesses)
    s = t.s
    for k in range(s + 2):
        for i in range(r + 1):
            assert (i >= r + 1 - len(I[k])) == (frak[i] >= cuts[k])
        assert bY[cuts[k]] >= len(I[k])
    for k in range(s + 1):
        assert bZ[cuts[k]] >= r + 1 - len(I[k + 1])
    for k in range(1, s + 1):
        assert len(I[k]) - len(I[k + 1]) >= 1
    if d > 0:
        assert I[s + 1] == ({r} if pair.aZ[0] == 0 else set())
        assert set(range(r + 1)) - I[1] == ({0} if pair.aY[0] == 0 else set())


def check_optimal(pair):
    r, d = pair.r, pair.d
    t = build_trace(pair)
    tri = build_optimal_triple(pair)
    assert check_admissible(pair, tri) == []
    assert tri.betaY[0] == tri.betaZ[d] == r + 1
    assert all(tri.betaY[j] + tri.betaZ[j - 1] == r + 1 for j in range(1, d + 1))
    assert tri.eps == tuple(int(j in t.J) for j in range(1, d))
    s = sync_map(pair, tri)
    assert not s.Joff
    assert tuple(sorted(s.Jdiag)) == t.J
    assert dimension(pair, tri) == ramification_sum(pair)


class TestOptimalTriple:
    def test_example_pair(self):
        tri = build_optimal_triple(EXAMPLE)
        assert (tri.betaY, tri.betaZ, tri.eps) == ((2, 2, 0), (0, 2, 2), (1,))
        assert dimension(EXAMPLE, tri) == 2 == ramification_sum(EXAMPLE)

    def test_refined(self):
        assert dimension(REFINED, build_optimal_triple(REFINED)) == 0

    def test_degenerate(self):
        p = validate_pair(0, 0, [0], [0])
        tri = build_optimal_triple(p)
        assert (tri.betaY, tri.betaZ, tri.eps) == ((1,), (1,), ())

    def test_exhaustive_against_brute_force(self):
        n = 0
        for p in all_pairs():
            if not is_connected(p):
                continue
            check_trace(p)
            check_optimal(p)
            assert dimension(p, build_optimal_triple(p)) == max_dimension(p)[0]
            n += 1
        assert n == 374  # regression anchor: connected pairs with d <= 6, r <= 3


@settings(max_examples=300, deadline=None)
@given(pairs(max_d=24, max_r=10))
def test_random_connected_pairs(pair):
    if not is_connected(pair):
        with pytest.raises(NotConnected):
            build_trace(pair)
        return
    check_trace(pair)
    check_optimal(pair)


@given(pairs(max_d=20, max_r=8))
def test_refined_pairs_give_zero(pair):
    if is_refined(pair):
        assert dimension(pair, build_optimal_triple(pair)) == 0
