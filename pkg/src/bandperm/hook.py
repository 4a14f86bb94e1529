"""
Hook diagrams and the diagonal-by-diagonal factorization of a permutation.

Every inversion ``(i, j)`` of ``p`` is a crossing of the hooks of ``i`` and
``j`` at grid point ``(i, p(j))``. Crossings on one diagonal ``c - r = k``
are pairwise nonadjacent transpositions, so each nonempty diagonal becomes a
single bandwidth-1 layer. Reading the diagonals in ascending order gives a
reduced word for ``p`` cut into ``len(mset(p))`` layers, and since
``mset(p)`` lies in ``[-w+1, w-1]`` there are at most ``2w - 1`` of them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    CYCLIC, FINITE, Bandwidth1Factor, Flavor, Permutation, Word, bandwidth, inverse,
)

__all__ = [
    "Crossing", "HookDiagram", "Factorization", "StrangBound",
    "build_hook_diagram", "crossing_index", "hook_factor", "check_strang_bound",
    "to_word", "recompose", "verify_factorization", "crossing_arrays",
]


@dataclass(frozen=True)
class Crossing:
    """Crossing of hooks ``i < j``; it sits at ``point = (i, p(j))`` on diagonal ``p(j) - i``."""

    i: int
    j: int
    point: tuple[int, int]
    diagonal: int
    transposition_index: int | None = None


@dataclass(frozen=True)
class HookDiagram:
    perm: Permutation
    crossings_by_diagonal: dict[int, list[Crossing]] = field(default_factory=dict)

    def crossings(self) -> list[Crossing]:
        return [c for k in self.crossings_by_diagonal for c in self.crossings_by_diagonal[k]]

    def __len__(self) -> int:
        return sum(len(v) for v in self.crossings_by_diagonal.values())


@dataclass(frozen=True)
class Factorization:
    """
    Ordered bandwidth-1 layers, optionally followed by a cyclic shift.

    The product is read left to right (first layer applied first) and, for
    cyclic factorizations, ``shift(n, shift_exponent)`` is applied last.
    """

    n: int
    flavor: Flavor
    layers: tuple[tuple[int, Bandwidth1Factor], ...]
    shift_exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple((int(k), f) for k, f in self.layers))
        ks = [k for k, _ in self.layers]
        if any(b <= a for a, b in zip(ks, ks[1:])):
            raise ValueError(f"layer diagonals must be strictly ascending, got {ks}")
        for _, f in self.layers:
            if f.n != self.n or f.flavor != self.flavor:
                raise ValueError("layer does not match factorization size/flavor")
        if self.flavor == FINITE and self.shift_exponent != 0:
            raise ValueError("finite factorizations carry no shift")

    @property
    def diagonals(self) -> list[int]:
        return [k for k, _ in self.layers]

    def __len__(self) -> int:
        return len(self.layers)


@dataclass(frozen=True)
class StrangBound:
    w: int
    layer_count: int
    bound_ok: bool


def crossing_arrays(m: np.ndarray, reach: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Inversions ``(i, j)`` of the one-line array ``m`` with ``j - i <= reach``.

    Returns 1-based ``i``, ``j`` and the diagonal ``m[j] - i``, sorted by
    diagonal and then by row. With ``reach >= 2w - 1`` this is every inversion
    of a bandwidth-w permutation.
    """
    n = len(m)
    rows, cols = [], []
    for d in range(1, min(reach, n - 1) + 1):
        hit = np.flatnonzero(m[:-d] > m[d:])
        rows.append(hit)
        cols.append(hit + d)
    if not rows:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    i = np.concatenate(rows).astype(np.int64) + 1
    j = np.concatenate(cols).astype(np.int64) + 1
    k = m[j - 1].astype(np.int64) - i
    order = np.lexsort((i, k))
    return i[order], j[order], k[order]


def build_hook_diagram(p: Permutation) -> HookDiagram:
    """
    Enumerate crossings with the row scan and running counter.

    For row i only values ``v`` in ``[i-w+1, p(i)-1]`` can sit to the lower
    left, and ``s = #{t < i : p(t) < v}`` is advanced one value at a time, so
    the scan is O(n*w). Each crossing gets its closed-form transposition
    index ``i + v - 1 - s``.

    >>> d = build_hook_diagram(Permutation((2, 3, 1)))
    >>> [(k, [(c.i, c.j, c.transposition_index) for c in cs]) for k, cs in d.crossings_by_diagonal.items()]
    [(-1, [(2, 3, 2)]), (0, [(1, 3, 1)])]
    """
    m = p.map
    inv = (0,) + inverse(p).map
    w = bandwidth(p)
    buckets: dict[int, list[Crossing]] = {}
    for i in range(1, p.n + 1):
        top = m[i - 1]
        lo = max(1, i - w + 1)
        s = lo - 1  # every value below lo already sits in a row above i
        for v in range(lo, top):
            r = inv[v]
            if r > i:
                c = Crossing(i, r, (i, v), v - i, i + v - 1 - s)
                buckets.setdefault(v - i, []).append(c)
            elif r < i:
                s += 1
    return HookDiagram(p, {k: buckets[k] for k in sorted(buckets)})


def crossing_index(p: Permutation, c: Crossing) -> int:
    """
    Index of the simple transposition realised at crossing ``c``.

    Equals ``p(j) + #{t < i : p(t) >= p(j)}``: the strands above the crossing
    are the columns left of it plus the rows above it whose hooks reach
    further right.
    """
    i, j = c.i, c.j
    if not (1 <= i < j <= p.n) or p(i) <= p(j):
        raise ValueError(f"({i}, {j}) is not an inversion of {p}")
    col = p(j)
    if c.point != (i, col) or c.diagonal != col - i:
        raise ValueError(f"crossing point/diagonal inconsistent with {p}")
    return col + sum(1 for t in range(i - 1) if p.map[t] >= col)


def hook_factor(p: Permutation, pad: bool = False) -> Factorization:
    """
    Factor ``p`` into one bandwidth-1 layer per diagonal in ``mset(p)``.

    Strands are moved explicitly: every crossing must find its two strands
    in adjacent positions, and the emitted index is the upper position.
    ``pad=True`` keeps empty diagonals so that exactly ``2w - 1`` layers come
    out for bandwidth ``w >= 1``.

    >>> f = hook_factor(Permutation((3, 2, 1)))
    >>> [(k, f.indices) for k, f in f.layers]
    [(-1, (2,)), (0, (1,)), (1, (2,))]
    """
    n = p.n
    m = np.fromiter(p.map, dtype=np.int64, count=n)
    w = int(np.abs(m - np.arange(1, n + 1)).max()) if n else 0
    ii, jj, kk = crossing_arrays(m, 2 * w - 1)

    layer_idx: dict[int, list[int]] = {}
    pos = list(range(n + 1))
    if len(kk):
        cuts = np.flatnonzero(np.diff(kk)) + 1
        starts = [0] + cuts.tolist()
        ends = cuts.tolist() + [len(kk)]
        il, jl, kl = ii.tolist(), jj.tolist(), kk.tolist()
        for s, e in zip(starts, ends):
            out = []
            for a, b in zip(il[s:e], jl[s:e]):
                q = pos[a]
                if pos[b] != q + 1:
                    raise AssertionError(f"strands {a},{b} not adjacent at crossing")
                out.append(q)
                pos[a] = q + 1
                pos[b] = q
            layer_idx[kl[s]] = out

    if pad and w >= 1:
        keys = range(-w + 1, w)
    else:
        keys = sorted(layer_idx)
    layers = tuple((k, Bandwidth1Factor(n, FINITE, tuple(layer_idx.get(k, ())))) for k in keys)
    return Factorization(n, FINITE, layers, 0)


def check_strang_bound(p: Permutation) -> StrangBound:
    w = bandwidth(p)
    count = len(hook_factor(p).layers)
    return StrangBound(w, count, count <= max(2 * w - 1, 0))


def to_word(f: Factorization) -> Word:
    if f.flavor != FINITE:
        raise ValueError("only finite factorizations flatten to a word")
    return Word(f.n, tuple(a for _, layer in f.layers for a in layer.indices))


def recompose(f: Factorization) -> Permutation:
    """Multiply the layers (first layer first), then apply the shift."""
    n = f.n
    pos = list(range(n + 1))  # pos[t] = current position of strand t
    at = list(range(n + 1))   # at[q] = strand at position q
    for _, layer in f.layers:
        for a in layer.indices:
            if a == 0:
                a = n
            b = a + 1 if a < n else 1
            t1, t2 = at[a], at[b]
            pos[t1], pos[t2] = b, a
            at[a], at[b] = t2, t1
    k = f.shift_exponent
    if k and n:
        return Permutation._trusted([(q - 1 + k) % n + 1 for q in pos[1:]])
    return Permutation._trusted(pos[1:])


def verify_factorization(p: Permutation, f: Factorization) -> bool:
    """True iff ``f`` multiplies out to exactly ``p``."""
    if f.n != p.n:
        return False
    if f.flavor == FINITE and f.shift_exponent:
        return False
    return recompose(f).map == p.map
