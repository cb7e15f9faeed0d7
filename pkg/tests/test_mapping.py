import pytest
from hypothesis import given

from pacontract.mapping import (NEVER, SelfMap, constant_map, delta_trace, identity_map, orbit,
                                paired_orbit, successive_distances)
from pacontract.space import InputError, discrete_space

from conftest import spaces_and_maps


def test_orbit_staircase(staircase):
    o = orbit(staircase, 0)
    assert (o.pre_period, o.period, o.path) == (2, 1, (0, 1, 2))


def test_orbit_identity_and_swap():
    for x in range(3):
        o = orbit(identity_map(3), x)
        assert (o.pre_period, o.period) == (0, 1)
    o = orbit(SelfMap((1, 0)), 0)
    assert (o.pre_period, o.period, o.path) == (0, 2, (0, 1))


def test_orbit_range_check(staircase):
    with pytest.raises(InputError):
        orbit(staircase, 3)


@pytest.mark.parametrize("table", [(), (0, 2), (-1,), (0.0,)])
def test_selfmap_rejects_bad_tables(table):
    with pytest.raises(InputError):
        SelfMap(table)


def test_delta_trace_staircase(discrete3, staircase):
    tr = delta_trace(discrete3, staircase, 0, 1)
    assert tr.deltas[:3] == (1.0, 1.0, 0.0)
    assert tr.merge_index == 2
    assert tr.prefix_sums[:4] == (0.0, 1.0, 2.0, 2.0)
    tr = delta_trace(discrete3, staircase, 1, 2)
    assert tr.deltas[:2] == (1.0, 0.0) and tr.merge_index == 1


def test_delta_trace_diagonal_pair(discrete3, staircase):
    tr = delta_trace(discrete3, staircase, 1, 1)
    assert set(tr.deltas) == {0.0} and tr.merge_index == 0


def test_delta_trace_never_merges():
    tr = delta_trace(discrete_space(2), identity_map(2), 0, 1)
    assert tr.merge_index is NEVER and not tr.merged
    tr = delta_trace(discrete_space(2), SelfMap((1, 0)), 0, 1)
    assert tr.merge_index is NEVER and tr.period == 2


@given(spaces_and_maps(max_n=5))
def test_trace_invariants(case):
    space, fmap = case
    n = space.n
    for i in range(n):
        for j in range(n):
            tr = delta_trace(space, fmap, i, j)
            assert tr.horizon <= n * n
            assert len(tr.deltas) == tr.horizon + 1
            if i != j:
                assert tr.deltas[0] > 0
            if tr.merged:
                m = tr.merge_index
                assert all(x == 0 for x in tr.deltas[m:])
                assert all(x > 0 for x in tr.deltas[:m])
            # shift property: delta_{k+1}(i, j) = delta_k(T i, T j)
            nxt = delta_trace(space, fmap, fmap(i), fmap(j))
            for k in range(2 * n * n):
                assert tr.delta(k + 1) == nxt.delta(k)


@given(spaces_and_maps(max_n=5))
def test_pair_with_image_gives_residuals(case):
    space, fmap = case
    for x in range(space.n):
        tr = delta_trace(space, fmap, x, fmap(x))
        a = successive_distances(space, fmap, x, 3 * space.n)
        assert [tr.delta(k) for k in range(len(a))] == a


@given(spaces_and_maps(max_n=5))
def test_orbit_is_minimal(case):
    _, fmap = case
    for x in range(fmap.n):
        o = orbit(fmap, x)
        assert len(set(o.path)) == len(o.path)
        assert fmap.power(o.pre_period + o.period)(x) == fmap.power(o.pre_period)(x)
        po = paired_orbit(fmap, x, x)
        assert (po.pre_period, po.period) == (o.pre_period, o.period)


def test_constant_and_power():
    assert constant_map(3, 1).table == (1, 1, 1)
    assert SelfMap((1, 2, 2)).power(2).table == (2, 2, 2)
    assert SelfMap((1, 2, 2)).power(0).table == (0, 1, 2)
