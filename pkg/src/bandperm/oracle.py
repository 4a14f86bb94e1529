"""
Brute-force ground truth for small n.

The minimal number of bandwidth-1 factors of ``p`` is its distance from the
identity in the Cayley graph of S_n whose edges are the nonidentity
bandwidth-1 permutations (plus the two shifts, cyclically). Distances are
found by plain breadth-first search over the whole group, so everything here
is exponential in n and guarded by caps.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from operator import itemgetter

from .core import (
    CYCLIC, FINITE, Bandwidth1Factor, Flavor, Permutation, Word, apply_word,
    compose, identity, nonadjacent_index_sets, shift,
)

__all__ = [
    "GeneratorSet", "BfsResult", "DEFAULT_CAPS", "GENERATOR_CAP",
    "enumerate_generators", "min_factors", "bfs_tree", "tight_example", "reduce_word",
]

DEFAULT_CAPS = {FINITE: 9, CYCLIC: 8}
GENERATOR_CAP = 24


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    flavor: Flavor
    members: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class BfsResult:
    target: Permutation
    min_length: int
    witness: tuple[Permutation, ...]
    witness_indices: tuple[int, ...]


def enumerate_generators(n: int, flavor: Flavor = FINITE, max_n: int = GENERATOR_CAP) -> GeneratorSet:
    """
    All distinct bandwidth-1 permutations of size n, identity first.

    Cyclic sets also contain the shifts ``S`` and ``S^-1`` (last two members
    when n >= 3; for n <= 2 they coincide with transpositions and are not
    repeated).

    >>> [g.map for g in enumerate_generators(4).members]
    [(1, 2, 3, 4), (2, 1, 3, 4), (2, 1, 4, 3), (1, 3, 2, 4), (1, 2, 4, 3)]
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise ValueError(f"n={n} exceeds generator cap {max_n}")
    members: list[Permutation] = []
    seen: set[tuple[int, ...]] = set()
    for idx in nonadjacent_index_sets(n, flavor):
        g = Bandwidth1Factor(n, flavor, idx).as_permutation()
        if g.map not in seen:
            seen.add(g.map)
            members.append(g)
    if flavor == CYCLIC:
        for g in (shift(n, 1), shift(n, -1)):
            if g.map not in seen:
                seen.add(g.map)
                members.append(g)
    return GeneratorSet(n, flavor, tuple(members))


@functools.lru_cache(maxsize=8)
def bfs_tree(n: int, flavor: Flavor = FINITE) -> dict[tuple[int, ...], tuple[int, tuple[int, ...] | None, int]]:
    """
    Full breadth-first search from the identity.

    Maps each one-line tuple to ``(distance, parent, generator_index)``; the
    identity has parent ``None``. Expansion is level-synchronous and uses the
    generators in enumeration order, so the tree is deterministic.
    """
    gens = enumerate_generators(n, flavor).members
    start = identity(n).map
    tree: dict[tuple[int, ...], tuple[int, tuple[int, ...] | None, int]] = {start: (0, None, -1)}
    moves = [(gi, (0,) + g.map) for gi, g in enumerate(gens) if g.map != start]
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for state in frontier:
            get = itemgetter(*state)
            for gi, gm in moves:
                # state first, then the generator
                child = get(gm) if n > 1 else (gm[state[0]],)
                if child not in tree:
                    tree[child] = (depth, state, gi)
                    nxt.append(child)
        frontier = nxt
    return tree


def min_factors(p: Permutation, flavor: Flavor = FINITE, max_n: int | None = None) -> BfsResult:
    """
    Fewest bandwidth-1 factors whose product is ``p``, with a verified witness.

    >>> min_factors(Permutation((3, 4, 1, 2))).min_length
    3
    """
    cap = DEFAULT_CAPS[flavor] if max_n is None else max_n
    n = p.n
    if n > cap:
        raise ValueError(f"n={n} exceeds BFS cap {cap} for {flavor} generators")
    if n == 0:
        return BfsResult(p, 0, (), ())
    gens = enumerate_generators(n, flavor).members
    tree = bfs_tree(n, flavor)
    depth, parent, gi = tree[p.map]
    chain = []
    state = p.map
    while parent is not None:
        chain.append(gi)
        state = parent
        _, parent, gi = tree[state]
    chain.reverse()
    witness = tuple(gens[g] for g in chain)
    check = identity(n)
    for g in witness:
        check = compose(check, g)
    if check.map != p.map or len(witness) != depth:
        raise AssertionError("BFS witness does not reproduce the target")
    return BfsResult(p, depth, witness, tuple(chain))


def tight_example(w: int, n: int) -> Permutation:
    """
    Block swap ``(w+1, ..., 2w, 1, ..., w, 2w+1, ..., n)``, which needs exactly ``2w - 1`` factors.

    >>> tight_example(3, 9).map
    (4, 5, 6, 1, 2, 3, 7, 8, 9)
    """
    if w < 1:
        raise ValueError("w must be positive")
    if n < 2 * w:
        raise ValueError(f"n={n} is smaller than 2w={2 * w}")
    return Permutation._trusted(list(range(w + 1, 2 * w + 1)) + list(range(1, w + 1)) + list(range(2 * w + 1, n + 1)))


def _first_double_crossing(letters: list[int], n: int) -> tuple[int, int] | None:
    at = list(range(n + 2))
    first: dict[tuple[int, int], int] = {}
    for pos, a in enumerate(letters):
        t1, t2 = at[a], at[a + 1]
        pair = (t1, t2) if t1 < t2 else (t2, t1)
        if pair in first:
            return first[pair], pos
        first[pair] = pos
        at[a], at[a + 1] = t2, t1
    return None


def reduce_word(wd: Word) -> Word:
    """
    Delete pairs of letters where the same two strands cross twice until none remain.

    The leftmost second crossing is removed first, along with the first
    crossing of that strand pair. Each deletion keeps the product and drops
    the length by two, so the result is a reduced word.

    >>> reduce_word(Word(3, (2, 1, 2, 1))).letters
    (1, 2)
    >>> reduce_word(Word(3, (2, 1, 2, 1, 2, 1))).letters
    ()
    """
    letters = list(wd.letters)
    while (hit := _first_double_crossing(letters, wd.n)) is not None:
        a, b = hit
        del letters[b]
        del letters[a]
    out = Word(wd.n, tuple(letters))
    if apply_word(out.letters, wd.n).map != apply_word(wd.letters, wd.n).map:
        raise AssertionError("word reduction changed the permutation")
    return out
