import itertools
import random

import pytest

from bandperm.core import bandwidth, identity
from bandperm.cyclic import cyclic_bandwidth
from bandperm.gen import PRNG_ID, GenConfig, random_banded


def test_zero_width_is_identity():
    for seed in range(5):
        assert random_banded(GenConfig(5, 0, seed)) == identity(5)
        assert random_banded(GenConfig(6, 0, seed, "cyclic")) == identity(6)


def test_unconstrained():
    for seed in range(20):
        p = random_banded(GenConfig(9, 8, seed))
        assert sorted(p.map) == list(range(1, 10))


def test_deterministic():
    cfg = GenConfig(20, 3, seed=123456789)
    a, b = random_banded(cfg), random_banded(cfg)
    assert a == b and bandwidth(a) <= 3
    c = GenConfig(30, 7, seed=2**64 - 1, flavor="cyclic")
    assert random_banded(c) == random_banded(c)


def test_seed_changes_output():
    outs = {random_banded(GenConfig(40, 4, s)).map for s in range(10)}
    assert len(outs) > 1


@pytest.mark.parametrize("kwargs", [dict(n=5, w=-1), dict(n=-1, w=0), dict(n=6, w=4, flavor="cyclic"),
                                    dict(n=4, w=1, seed=-1), dict(n=4, w=1, flavor="mobius")])
def test_invalid_config(kwargs):
    with pytest.raises(ValueError):
        GenConfig(**kwargs)


def test_metadata():
    meta = GenConfig(10, 2, 5, "cyclic").metadata()
    assert meta == {"prng": PRNG_ID, "seed": 5, "n": 10, "w": 2, "flavor": "cyclic"}


def test_band_constraint_grid():
    rnd = random.Random(0)
    for trial in range(10_000):
        n = rnd.randint(0, 80)
        if trial % 2:
            w = rnd.randint(0, max(n - 1, 0))
            assert bandwidth(random_banded(GenConfig(n, w, trial))) <= w
        else:
            w = rnd.randint(0, n // 2)
            assert cyclic_bandwidth(random_banded(GenConfig(n, w, trial, "cyclic"))) <= w


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("flavor", ["finite", "cyclic"])
def test_support_covers_all_banded(n, flavor):
    w = 2
    if flavor == "cyclic" and w > n // 2:
        pytest.skip("band exceeds n/2")
    measure = bandwidth if flavor == "finite" else cyclic_bandwidth
    from bandperm.core import Permutation
    target = {t for t in itertools.permutations(range(1, n + 1)) if measure(Permutation(t)) <= w}
    seen = set()
    for seed in range(20_000):
        seen.add(random_banded(GenConfig(n, w, seed, flavor)).map)
        if seen == target:
            break
    assert seen == target
