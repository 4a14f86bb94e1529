"""
Cyclically banded permutations through their periodic lift to the integers.

A permutation ``p`` of ``1..n`` is lifted to a bijection ``psi`` of Z with
``psi(i + n) = psi(i) + n`` by choosing, for each position, the displacement
``psi(i) - i`` congruent to ``p(i) - i`` modulo n of smallest magnitude (ties
at ``n/2`` go to ``-n/2``). Hooks of the lifted permutation cross in finitely
many classes, each diagonal of classes is one cyclic bandwidth-1 layer, and
what is left after untangling all crossings is a pure shift whose exponent is
the shifting index ``sum(disp) / n``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CYCLIC, Bandwidth1Factor, Permutation, compose
from .hook import Factorization

__all__ = [
    "PeriodicLift", "lift", "shift_lift", "compose_lifts", "cyclic_bandwidth",
    "shifting_index", "split_shift", "cyclic_crossings", "cyclic_factor",
    "conjugate_index_by_shift",
]


@dataclass(frozen=True)
class PeriodicLift:
    """
    Periodic bijection ``psi`` of the integers, ``psi(i) = i + disp[i-1]`` on ``1..n``.

    ``lift`` returns the canonical representative; other lifts of the same
    base arise from composing lifts and from shifts.
    """

    n: int
    base: Permutation
    disp: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "disp", tuple(int(d) for d in self.disp))
        if len(self.disp) != self.n or self.base.n != self.n:
            raise ValueError("lift size mismatch")
        for i, (d, v) in enumerate(zip(self.disp, self.base.map), 1):
            if (i + d - v) % self.n:
                raise ValueError(f"displacement {d} at {i} does not reduce to {v} mod {self.n}")

    @property
    def band(self) -> int:
        return max((abs(d) for d in self.disp), default=0)

    def psi(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return r + 1 + self.disp[r] + q * self.n


def lift(p: Permutation) -> PeriodicLift:
    """
    >>> lift(Permutation((6, 5, 2, 4, 3, 1))).disp
    (-1, -3, -1, 0, -2, 1)
    """
    n = p.n
    if n < 1:
        raise ValueError("lift needs n >= 1")
    disp = []
    for i, v in enumerate(p.map, 1):
        d = (v - i) % n
        if 2 * d >= n:
            d -= n
        disp.append(d)
    return PeriodicLift(n, p, tuple(disp))


def shift_lift(n: int, k: int = 1) -> PeriodicLift:
    """The shift ``x -> x + k`` on Z, for any integer k."""
    base = Permutation._trusted([(x - 1 + k) % n + 1 for x in range(1, n + 1)])
    return PeriodicLift(n, base, (k,) * n)


def compose_lifts(a: PeriodicLift, b: PeriodicLift) -> PeriodicLift:
    """``a`` first, then ``b``, as bijections of Z."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    disp = tuple(b.psi(a.psi(i)) - i for i in range(1, a.n + 1))
    return PeriodicLift(a.n, compose(a.base, b.base), disp)


def cyclic_bandwidth(p: Permutation) -> int:
    """Smallest w with ``|p(i) - i| <= w`` or ``|p(i) - i| >= n - w`` for all i."""
    if p.n == 0:
        return 0
    return lift(p).band


def shifting_index(L: PeriodicLift) -> int:
    """
    Net number of strands that wrap forward past the period boundary.

    ``p`` counts ones of the infinite matrix above-right of the corner
    ``(n, n)`` (rows ``<= n``, columns ``> n``) and ``q`` those below-left; the
    result ``p - q`` is checked against ``sum(disp) / n``.

    >>> shifting_index(lift(Permutation((6, 5, 2, 4, 3, 1))))
    -1
    """
    n, b = L.n, L.band
    p = sum(1 for i in range(n + 1 - b, n + 1) if L.psi(i) >= n + 1)
    q = sum(1 for i in range(n + 1, n + b + 1) if L.psi(i) <= n)
    total = sum(L.disp)
    if total % n or total // n != p - q:
        raise RuntimeError(f"inconsistent shifting index: p-q={p - q}, sum(disp)/n={total / n}")
    return p - q


def split_shift(L: PeriodicLift) -> tuple[int, PeriodicLift]:
    """
    Write ``L`` as a zero-index residual followed by a shift.

    Returns ``(k, residual)`` with ``compose_lifts(residual, shift_lift(n, k)) == L``
    and ``shifting_index(residual) == 0``.
    """
    k = shifting_index(L)
    return k, compose_lifts(L, shift_lift(L.n, -k))


def conjugate_index_by_shift(i: int, n: int) -> int:
    """
    Index of the transposition obtained by conjugating ``s_i`` with the shift.

    >>> conjugate_index_by_shift(1, 6), conjugate_index_by_shift(0, 6)
    (0, 5)
    """
    if not 0 <= i < n:
        raise ValueError(f"index {i} out of range 0..{n - 1}")
    return (i - 1) % n


def cyclic_crossings(L: PeriodicLift) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Crossing classes ``(i, j)`` with ``1 <= i <= n``, ``i < j < i + n`` and ``psi(i) > psi(j)``.

    Sorted by diagonal ``psi(j) - i``, then by ``i``.
    """
    n, w = L.n, L.band
    reach = min(2 * w - 1, n - 1)
    if reach < 1:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    t = np.arange(1, n + reach + 1, dtype=np.int64)
    disp = np.asarray(L.disp, dtype=np.int64)
    psi = t + disp[(t - 1) % n]
    rows, cols = [], []
    head = psi[:n]
    for d in range(1, reach + 1):
        hit = np.flatnonzero(head > psi[d:d + n])
        rows.append(hit)
        cols.append(hit + d)
    i = np.concatenate(rows) + 1
    j = np.concatenate(cols) + 1
    k = psi[j - 1] - i
    order = np.lexsort((i, k))
    return i[order], j[order], k[order]


def cyclic_factor(p: Permutation, pad: bool = False) -> Factorization:
    """
    Factor ``p`` into cyclic bandwidth-1 layers followed by ``shift(n, k)``.

    There are at most ``2w - 1`` layers for cyclic bandwidth w, and
    ``|k| <= w``.

    >>> f = cyclic_factor(Permutation((6, 5, 2, 4, 3, 1)))
    >>> [(k, l.indices) for k, l in f.layers], f.shift_exponent
    ([(-2, (1,)), (-1, (0, 4)), (0, (1,))], -1)
    """
    n = p.n
    if n == 0:
        return Factorization(0, CYCLIC, (), 0)
    L = lift(p)
    w = L.band
    k_shift = shifting_index(L)
    ii, jj, kk = cyclic_crossings(L)

    pos = list(range(n + 1))  # integer positions of the strands 1..n
    layer_idx: dict[int, list[int]] = {}
    if len(kk):
        cuts = np.flatnonzero(np.diff(kk)) + 1
        starts = [0] + cuts.tolist()
        ends = cuts.tolist() + [len(kk)]
        il, jl, kl = ii.tolist(), jj.tolist(), kk.tolist()
        for s, e in zip(starts, ends):
            out = []
            for a, b in zip(il[s:e], jl[s:e]):
                off = 0
                if b > n:
                    b -= n
                    off = n
                q = pos[a]
                if pos[b] + off != q + 1:
                    raise AssertionError(f"strand classes {a},{b} not adjacent at crossing")
                out.append(q % n)
                pos[a] = q + 1
                pos[b] -= 1
            layer_idx[kl[s]] = out

    for t in range(1, n + 1):
        if L.psi(t) != pos[t] + k_shift:
            raise AssertionError("untangled strands are not a pure shift")

    keys = range(-w + 1, w) if pad and w >= 1 else sorted(layer_idx)
    layers = tuple((k, Bandwidth1Factor(n, CYCLIC, tuple(layer_idx.get(k, ())))) for k in keys)
    return Factorization(n, CYCLIC, layers, k_shift)
