import numpy as np
import pytest
from hypothesis import given, strategies as st

from pacontract.generator import (GeneratorSpec, census, enumerate_maps, make_space,
                                  random_metric, space_fingerprint)
from pacontract.space import InputError, validate_b_metric


def test_discrete_space():
    sp = make_space(GeneratorSpec(3))
    assert sp.s == 1.0 and np.array_equal(sp.dist, np.ones((3, 3)) - np.eye(3))


def test_power_metric():
    sp = make_space(GeneratorSpec(3, "power_metric", p=1.0))
    assert sp.s == 1.0 and sp.dist[0, 2] == 2.0
    sp = make_space(GeneratorSpec(3, "power_metric", p=2.0))
    assert sp.s == 2.0 and sp.dist[0, 2] == 4.0


@given(st.integers(1, 7), st.sampled_from(["discrete", "power_metric", "random_perturbed"]),
       st.floats(1, 4), st.integers(0, 2 ** 64 - 1))
def test_generated_spaces_are_valid(n, kind, p, seed):
    sp = make_space(GeneratorSpec(n, kind, p=p, seed=seed))
    assert validate_b_metric(sp.dist, sp.s).valid
    assert sp.s <= 2 ** (p - 1) * (1 + 1e-12)


@given(st.integers(2, 8), st.integers(0, 2 ** 64 - 1))
def test_random_metric_is_metric(n, seed):
    d = random_metric(n, seed)
    assert validate_b_metric(d, 1.0).valid


def test_seeds_are_deterministic():
    a = make_space(GeneratorSpec(5, "random_perturbed", p=2.0, seed=42))
    b = make_space(GeneratorSpec(5, "random_perturbed", p=2.0, seed=42))
    c = make_space(GeneratorSpec(5, "random_perturbed", p=2.0, seed=43))
    assert np.array_equal(a.dist, b.dist) and a.s == b.s
    assert space_fingerprint(a) == space_fingerprint(b) != space_fingerprint(c)
    assert census(a).to_dict() == census(b).to_dict()


@pytest.mark.parametrize("kwargs", [dict(n=0), dict(n=3, kind="cube"), dict(n=3, p=0.5),
                                    dict(n=3, seed=-1), dict(n=3, seed=2 ** 64)])
def test_spec_validation(kwargs):
    with pytest.raises(InputError):
        GeneratorSpec(**kwargs)


def test_enumerate_maps():
    assert len(list(enumerate_maps(1))) == 1
    assert len(list(enumerate_maps(2))) == 4
    maps = [m.table for m in enumerate_maps(3)]
    assert len(maps) == 27 == len(set(maps))
    assert maps[0] == (0, 0, 0) and maps[-1] == (2, 2, 2)
    assert maps == sorted(maps)
    with pytest.raises(InputError):
        next(enumerate_maps(7))


def test_census_discrete_three():
    rep = census(make_space(GeneratorSpec(3)))
    assert rep.total == 27
    assert rep.counts["pa_not_banach"] >= 1 and rep.counts["banach_not_pa"] == 0
    assert rep.counts["pa_not_kannan"] >= 1
    assert rep.banach_subset_pa and rep.release_blocking == []
    assert sum(rep.cells.values()) == 27


def test_census_contains_staircase():
    seen = []
    census(make_space(GeneratorSpec(3)), on_record=seen.append)
    rec = next(r for r in seen if r.table == (1, 2, 2))
    assert rec.cell == "--P"


def test_census_single_point():
    rep = census(make_space(GeneratorSpec(1)))
    assert rep.total == 1
    assert rep.counts["banach"] == rep.counts["kannan"] == rep.counts["pa"] == 1


@pytest.mark.parametrize("seed", range(4))
def test_census_random_spaces(seed):
    rep = census(make_space(GeneratorSpec(4, "random_perturbed", p=2.0, seed=seed)))
    assert rep.release_blocking == []
    assert not rep.banach_direct_failures
