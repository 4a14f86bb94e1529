import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bandperm.core import (
    Bandwidth1Factor, Permutation, apply_word, bandwidth, identity, inverse, inversion_count,
    inversions, mset,
)
from bandperm.gen import GenConfig, random_banded
from bandperm.hook import (
    Crossing, Factorization, build_hook_diagram, check_strang_bound, crossing_arrays, crossing_index,
    hook_factor, recompose, to_word, verify_factorization,
)

from conftest import all_perms

FIG2 = Permutation((5, 4, 7, 1, 9, 2, 3, 10, 8, 6))


def layers_of(f):
    return [(k, set(layer.indices)) for k, layer in f.layers]


def strands_above(p, i, j):
    """Brute force: index of the crossing of strands i < j by replaying the inversions in diagonal order."""
    order = sorted(inversions(p), key=lambda ij: (p(ij[1]) - ij[0], ij[0]))
    pos = list(range(p.n + 1))
    for a, b in order:
        if (a, b) == (i, j):
            return min(pos[a], pos[b])
        pos[a], pos[b] = pos[b], pos[a]
    raise KeyError((i, j))


class TestBuildHookDiagram:
    def test_figure2_diagonals(self):
        d = build_hook_diagram(FIG2)
        assert list(d.crossings_by_diagonal) == [-3, -2, -1, 0, 1, 2, 3]
        assert len(d) == 18 == inversion_count(FIG2)

    def test_identity(self):
        assert build_hook_diagram(identity(6)).crossings_by_diagonal == {}

    def test_small(self):
        d = build_hook_diagram(Permutation((2, 3, 1)))
        assert {k: [(c.i, c.j, c.point) for c in cs] for k, cs in d.crossings_by_diagonal.items()} == {
            -1: [(2, 3, (2, 1))], 0: [(1, 3, (1, 1))],
        }

    @pytest.mark.parametrize("n", range(8))
    def test_keys_are_mset(self, n):
        for p in all_perms(n):
            d = build_hook_diagram(p)
            assert list(d.crossings_by_diagonal) == mset(p)
            assert len(d) == inversion_count(p)
            for k, cs in d.crossings_by_diagonal.items():
                assert [c.i for c in cs] == sorted(c.i for c in cs)
                for c in cs:
                    assert c.i < c.j and p(c.i) > p(c.j)
                    assert c.point == (c.i, p(c.j)) and c.diagonal == k == p(c.j) - c.i


class TestCrossingIndex:
    def test_examples(self):
        assert crossing_index(Permutation((2, 1)), Crossing(1, 2, (1, 1), 0)) == 1
        assert crossing_index(FIG2, Crossing(9, 10, (9, 6), -3)) == 9
        assert crossing_index(FIG2, Crossing(5, 6, (5, 2), -3)) == 5

    def test_rejects_foreign_crossing(self):
        with pytest.raises(ValueError):
            crossing_index(FIG2, Crossing(1, 3, (1, 7), 6))
        with pytest.raises(ValueError):
            crossing_index(FIG2, Crossing(9, 10, (9, 5), -4))

    @pytest.mark.parametrize("n", range(8))
    def test_three_routes_agree(self, n):
        # closed form, running counter and brute-force replay
        for p in all_perms(n):
            word = to_word(hook_factor(p)).letters
            flat = build_hook_diagram(p).crossings()
            assert [c.transposition_index for c in flat] == list(word)
            for c in flat:
                assert crossing_index(p, c) == c.transposition_index == strands_above(p, c.i, c.j)


@given(st.integers(1, 30).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_running_counter_recurrence(values):
    p = Permutation(tuple(values))
    inv = (0,) + inverse(p).map
    n = p.n

    def s(i, j):
        return sum(1 for t in range(1, i) if p(t) < j)

    for i in range(1, n + 1):
        for j in range(1, n):
            assert s(i, j + 1) == s(i, j) + (1 if inv[j] < i else 0)


class TestHookFactor:
    def test_small_examples(self):
        assert layers_of(hook_factor(Permutation((2, 3, 1)))) == [(-1, {2}), (0, {1})]
        assert layers_of(hook_factor(Permutation((3, 2, 1)))) == [(-1, {2}), (0, {1}), (1, {2})]
        assert hook_factor(identity(5)).layers == ()
        assert hook_factor(identity(0)).layers == ()

    def test_figure2(self):
        f = hook_factor(FIG2)
        assert f.diagonals == [-3, -2, -1, 0, 1, 2, 3]
        layers = dict(layers_of(f))
        assert layers[-3] == {5, 9}
        assert layers[-2] == {3, 6, 8}
        assert verify_factorization(FIG2, f)

    def test_padding(self):
        f = hook_factor(Permutation((2, 3, 1)), pad=True)
        assert f.diagonals == [-1, 0, 1]
        assert f.layers[2][1].indices == ()
        assert verify_factorization(Permutation((2, 3, 1)), f)
        assert len(hook_factor(FIG2, pad=True).layers) == 7
        assert hook_factor(identity(4), pad=True).layers == ()

    @pytest.mark.parametrize("n", range(8))
    def test_exhaustive(self, n):
        for p in all_perms(n):
            f = hook_factor(p)
            assert f.diagonals == mset(p)
            word = to_word(f)
            assert len(word) == inversion_count(p)
            assert apply_word(word.letters, n) == p
            assert verify_factorization(p, f)
            for _, layer in f.layers:
                assert all(b - a >= 2 for a, b in zip(layer.indices, layer.indices[1:]))

    def test_random_banded_adjacency(self):
        rnd = random.Random(2024)
        for trial in range(10_000):
            n = rnd.randint(1, 48)
            w = rnd.randint(0, min(n - 1, 6))
            p = random_banded(GenConfig(n, w, trial))
            f = hook_factor(p)  # raises if two crossing strands are ever apart
            assert len(f.layers) <= max(2 * w - 1, 0)
            assert recompose(f) == p

    def test_crossing_arrays_complete(self):
        m = np.array(FIG2.map)
        i, j, k = crossing_arrays(m, 2 * bandwidth(FIG2) - 1)
        assert sorted(zip(i.tolist(), j.tolist())) == inversions(FIG2)


class TestStrangBound:
    def test_examples(self):
        b = check_strang_bound(FIG2)
        assert (b.w, b.layer_count, b.bound_ok) == (4, 7, True)
        b = check_strang_bound(Permutation((3, 4, 1, 2)))
        assert (b.w, b.layer_count, b.bound_ok) == (2, 3, True)
        b = check_strang_bound(identity(3))
        assert (b.w, b.layer_count, b.bound_ok) == (0, 0, True)

    @pytest.mark.parametrize("n", range(8))
    def test_always_holds(self, n):
        assert all(check_strang_bound(p).bound_ok for p in all_perms(n))


class TestWordAndVerify:
    def test_to_word(self):
        assert to_word(hook_factor(Permutation((3, 2, 1)))).letters == (2, 1, 2)
        assert to_word(hook_factor(identity(3))).letters == ()
        assert to_word(hook_factor(Permutation((2, 3, 1)))).letters == (2, 1)

    def test_to_word_rejects_cyclic(self):
        f = Factorization(3, "cyclic", ((0, Bandwidth1Factor(3, "cyclic", (0,))),), 0)
        with pytest.raises(ValueError):
            to_word(f)

    def test_verify(self):
        p = Permutation((2, 1))
        good = Factorization(2, "finite", ((0, Bandwidth1Factor(2, "finite", (1,))),))
        assert verify_factorization(p, good)
        assert not verify_factorization(p, Factorization(2, "finite", ()))
        assert not verify_factorization(Permutation((1, 2, 3)), good)

    def test_factorization_validates(self):
        f1 = Bandwidth1Factor(3, "finite", (1,))
        with pytest.raises(ValueError):
            Factorization(3, "finite", ((1, f1), (0, f1)))
        with pytest.raises(ValueError):
            Factorization(3, "finite", ((0, f1),), shift_exponent=1)
