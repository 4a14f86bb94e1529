"""
Seeded random banded permutations for tests and benchmarks.

The distribution is not uniform over banded permutations. Every banded
permutation can be produced, and a given ``(n, w, seed, flavor)`` always
yields the same output.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CYCLIC, FINITE, Flavor, Permutation, identity

__all__ = ["PRNG_ID", "GenConfig", "random_banded"]

PRNG_ID = "numpy.PCG64"

# node budget per cyclic attempt, as a multiple of n
_CYCLIC_BUDGET = 64


@dataclass(frozen=True)
class GenConfig:
    n: int
    w: int
    seed: int = 0
    flavor: Flavor = FINITE

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.w < 0:
            raise ValueError("w must be nonnegative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.flavor not in (FINITE, CYCLIC):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.flavor == CYCLIC and self.w > self.n // 2:
            raise ValueError(f"cyclic bandwidth {self.w} exceeds n/2 for n={self.n}")

    def metadata(self) -> dict:
        return {"prng": PRNG_ID, "seed": self.seed, "n": self.n, "w": self.w, "flavor": self.flavor}


def random_banded(cfg: GenConfig) -> Permutation:
    """
    >>> random_banded(GenConfig(5, 0, seed=7)).map
    (1, 2, 3, 4, 5)
    """
    if cfg.w == 0 or cfg.n <= 1:
        return identity(cfg.n)
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    if cfg.flavor == FINITE:
        return _finite(cfg.n, cfg.w, rng)
    return _cyclic(cfg.n, cfg.w, rng)


def _finite(n: int, w: int, rng: np.random.Generator) -> Permutation:
    # value i-w has no later slot than i, so placing it there avoids dead ends
    used = bytearray(n + 2)
    u = rng.random(n).tolist()
    out = []
    for i in range(1, n + 1):
        f = i - w
        if f >= 1 and not used[f]:
            v = f
        else:
            cands = [v for v in range(max(1, i - w), min(n, i + w) + 1) if not used[v]]
            v = cands[int(u[i - 1] * len(cands))]
        used[v] = 1
        out.append(v)
    return Permutation._trusted(out)


def _cyclic(n: int, w: int, rng: np.random.Generator) -> Permutation:
    while True:
        perm = _cyclic_attempt(n, w, rng, _CYCLIC_BUDGET * n)
        if perm is not None:
            return Permutation._trusted(perm)


def _cyclic_attempt(n: int, w: int, rng: np.random.Generator, budget: int) -> list[int] | None:
    """Depth-first fill of positions 1..n; None when the node budget runs out."""

    def window(i: int) -> list[int]:
        vals = {(i - 1 + d) % n + 1 for d in range(-w, w + 1)}
        return sorted(vals)

    def forced(i: int) -> int | None:
        # a non-wrapping value's last slot is v + w; wrapping values can still go near n
        v = i - w
        if v - w >= 1 and v + w <= n and not used[v]:
            return v
        return None

    used = bytearray(n + 1)
    out: list[int] = []
    stack: list[list[int]] = []
    nodes = 0

    def options(i: int) -> list[int]:
        f = forced(i)
        if f is not None:
            return [f]
        cands = [v for v in window(i) if not used[v]]
        return [cands[k] for k in rng.permutation(len(cands))]

    stack.append(options(1))
    while stack:
        nodes += 1
        if nodes > budget:
            return None
        top = stack[-1]
        if not top:
            stack.pop()
            if out:
                used[out.pop()] = 0
            continue
        v = top.pop()
        used[v] = 1
        out.append(v)
        if len(out) == n:
            return out
        stack.append(options(len(out) + 1))
    return None
