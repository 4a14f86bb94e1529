"""
Permutation values, composition, inversions, bandwidth and bandwidth-1 factors.

Everything is 1-based: a permutation of size n is stored in one-line form
``(p(1), ..., p(n))``. Words and products are read left to right and the
leftmost factor is applied first, so ``compose(a, b)(x) == b(a(x))``.

>>> apply_word([2, 4, 3, 1, 4], 5)
Permutation(map=(2, 5, 1, 4, 3))
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Sequence

__all__ = [
    "FINITE", "CYCLIC", "Flavor",
    "Permutation", "Bandwidth1Factor", "Word",
    "identity", "compose", "inverse", "bandwidth", "inversions", "inversion_count",
    "mset", "factor_as_permutation", "transposition", "apply_word", "shift",
    "nonadjacent_index_sets",
]

Flavor = Literal["finite", "cyclic"]
FINITE: Flavor = "finite"
CYCLIC: Flavor = "cyclic"


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}`` in one-line form; ``map[i-1]`` is the image of ``i``."""

    map: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.map, tuple):
            object.__setattr__(self, "map", tuple(self.map))
        n = len(self.map)
        seen = bytearray(n + 1)
        for v in self.map:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueError(f"value {v!r} out of range 1..{n}")
            if seen[v]:
                raise ValueError(f"duplicate value {v}")
            seen[v] = 1

    @property
    def n(self) -> int:
        return len(self.map)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.map):
            raise IndexError(f"position {i} out of range 1..{len(self.map)}")
        return self.map[i - 1]

    def __len__(self) -> int:
        return len(self.map)

    def __iter__(self) -> Iterator[int]:
        return iter(self.map)

    def __str__(self) -> str:
        return " ".join(map(str, self.map))

    @classmethod
    def _trusted(cls, values: Sequence[int]) -> "Permutation":
        # skips validation; callers guarantee a bijection
        obj = object.__new__(cls)
        object.__setattr__(obj, "map", tuple(values))
        return obj


def _cyclic_gap(a: int, b: int, n: int) -> int:
    d = (a - b) % n
    return min(d, n - d)


@dataclass(frozen=True)
class Bandwidth1Factor:
    """
    A product of pairwise nonadjacent simple transpositions.

    Finite factors use indices from ``1..n-1``. Cyclic factors use ``0..n-1``
    where index 0 is the wrap-around swap of ``n`` and ``1``; nonadjacency is
    then measured modulo n.

    >>> Bandwidth1Factor(4, "finite", (1, 3)).as_permutation()
    Permutation(map=(2, 1, 4, 3))
    >>> Bandwidth1Factor(4, "finite", (1, 2))
    Traceback (most recent call last):
    ...
    ValueError: indices 1 and 2 are adjacent
    """

    n: int
    flavor: Flavor
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(self.indices))
        object.__setattr__(self, "indices", idx)
        n = self.n
        if self.flavor == FINITE:
            for i in idx:
                if not 1 <= i <= n - 1:
                    raise ValueError(f"finite index {i} out of range 1..{n - 1}")
            for a, b in zip(idx, idx[1:]):
                if b - a < 2:
                    raise ValueError(f"indices {a} and {b} are adjacent")
        elif self.flavor == CYCLIC:
            for i in idx:
                if not 0 <= i <= n - 1:
                    raise ValueError(f"cyclic index {i} out of range 0..{n - 1}")
            if len(set(idx)) != len(idx):
                raise ValueError("repeated index")
            if len(idx) > n // 2:
                raise ValueError(f"at most {n // 2} cyclic indices allowed for n={n}")
            if n > 2:
                pairs = list(zip(idx, idx[1:]))
                if len(idx) > 1:
                    pairs.append((idx[-1], idx[0]))
                for a, b in pairs:
                    if _cyclic_gap(a, b, n) < 2:
                        raise ValueError(f"indices {a} and {b} are cyclically adjacent")
        else:
            raise ValueError(f"unknown flavor {self.flavor!r}")

    def __len__(self) -> int:
        return len(self.indices)

    def as_permutation(self) -> Permutation:
        return factor_as_permutation(self)


@dataclass(frozen=True)
class Word:
    """A finite word in the simple transpositions ``s_1 .. s_{n-1}``."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if not 1 <= a <= self.n - 1:
                raise ValueError(f"letter {a} out of range 1..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    def permutation(self) -> Permutation:
        return apply_word(self.letters, self.n)


def identity(n: int) -> Permutation:
    """
    >>> identity(3).map, identity(0).map
    ((1, 2, 3), ())
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Permutation._trusted(range(1, n + 1))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a`` first, then ``b``: the result maps x to ``b(a(x))``."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    bm = b.map
    return Permutation._trusted([bm[x - 1] for x in a.map])


def inverse(p: Permutation) -> Permutation:
    """
    >>> inverse(Permutation((2, 5, 1, 4, 3))).map
    (3, 1, 5, 4, 2)
    """
    inv = [0] * p.n
    for i, v in enumerate(p.map, 1):
        inv[v - 1] = i
    return Permutation._trusted(inv)


def bandwidth(p: Permutation) -> int:
    """Largest displacement ``max |p(i) - i|``; 0 for the empty permutation."""
    return max((abs(v - i) for i, v in enumerate(p.map, 1)), default=0)


def inversions(p: Permutation) -> list[tuple[int, int]]:
    """All pairs ``i < j`` with ``p(i) > p(j)``, in lexicographic order."""
    m = p.map
    n = len(m)
    return [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if m[i] > m[j]]


def inversion_count(p: Permutation) -> int:
    """Number of inversions, via merge sort."""
    def sort_count(xs: list[int]) -> tuple[list[int], int]:
        if len(xs) <= 1:
            return xs, 0
        mid = len(xs) // 2
        left, a = sort_count(xs[:mid])
        right, b = sort_count(xs[mid:])
        merged, count, i, j = [], a + b, 0, 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                count += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, count

    return sort_count(list(p.map))[1]


def mset(p: Permutation) -> list[int]:
    """
    The sorted set of diagonals ``p(j) - i`` over inversions ``(i, j)``.

    >>> mset(Permutation((5, 4, 7, 1, 9, 2, 3, 10, 8, 6)))
    [-3, -2, -1, 0, 1, 2, 3]
    """
    m = p.map
    n = len(m)
    out = set()
    for i in range(n):
        mi = m[i]
        for j in range(i + 1, n):
            if mi > m[j]:
                out.add(m[j] - (i + 1))
    return sorted(out)


def transposition(n: int, i: int) -> Permutation:
    """The simple transposition ``s_i``; ``i = 0`` (or ``n``) gives the wrap-around swap of n and 1."""
    a = i if i != 0 else n
    b = a + 1 if a < n else 1
    if not (1 <= a <= n and a != b):
        raise ValueError(f"no transposition s_{i} for n={n}")
    m = list(range(1, n + 1))
    m[a - 1], m[b - 1] = b, a
    return Permutation._trusted(m)


def factor_as_permutation(f: Bandwidth1Factor) -> Permutation:
    """
    >>> factor_as_permutation(Bandwidth1Factor(6, "cyclic", (0,))).map
    (6, 2, 3, 4, 5, 1)
    """
    m = list(range(1, f.n + 1))
    for i in f.indices:
        a = i if i != 0 else f.n
        b = a + 1 if a < f.n else 1
        m[a - 1], m[b - 1] = m[b - 1], m[a - 1]
    return Permutation._trusted(m)


def apply_word(letters: Iterable[int], n: int) -> Permutation:
    """
    Product of simple transpositions, leftmost applied first.

    Position ``t`` of the result holds the final position of the strand that
    started at ``t``.
    """
    pos = list(range(1, n + 1))
    at = list(range(n + 1))  # at[q] = strand currently at position q
    for a in letters:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range 1..{n - 1}")
        t1, t2 = at[a], at[a + 1]
        pos[t1 - 1], pos[t2 - 1] = a + 1, a
        at[a], at[a + 1] = t2, t1
    return Permutation._trusted(pos)


def shift(n: int, k: int = 1) -> Permutation:
    """The cyclic shift ``x -> x + k (mod n)`` with values in ``1..n``."""
    if n == 0:
        return identity(0)
    return Permutation._trusted([(x - 1 + k) % n + 1 for x in range(1, n + 1)])


def nonadjacent_index_sets(n: int, flavor: Flavor) -> list[tuple[int, ...]]:
    """
    Every admissible index set of a bandwidth-1 factor of size n.

    Counts are Fibonacci(n+1) for finite factors and the Lucas number L_n for
    cyclic ones (n >= 3).

    >>> nonadjacent_index_sets(4, "finite")
    [(), (1,), (1, 3), (2,), (3,)]
    """
    if flavor == FINITE:
        pool = list(range(1, n))
    elif flavor == CYCLIC:
        pool = list(range(0, n))
    else:
        raise ValueError(f"unknown flavor {flavor!r}")

    out: list[tuple[int, ...]] = []

    def ok(chosen: list[int], c: int) -> bool:
        if flavor == CYCLIC and len(chosen) + 1 > n // 2:
            return False
        if not chosen:
            return True
        if c - chosen[-1] < 2:
            return False
        if flavor == CYCLIC and n > 2 and _cyclic_gap(c, chosen[0], n) < 2:
            return False
        return True

    def rec(start: int, chosen: list[int]):
        out.append(tuple(chosen))
        for k in range(start, len(pool)):
            c = pool[k]
            if ok(chosen, c):
                chosen.append(c)
                rec(k + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out
