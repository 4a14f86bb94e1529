# coding: utf-8

# # Scaling with n
#
# The work is proportional to the number of inversions, which is at most n*w.

# In[1]:

import time

import numpy as np

from bandperm import GenConfig, hook_factor, inversion_count, random_banded, verify_factorization

rows = []
for n in (10_000, 50_000, 100_000):
    for w in (2, 8):
        p = random_banded(GenConfig(n, w, seed=1))
        t = time.perf_counter()
        f = hook_factor(p)
        elapsed = time.perf_counter() - t
        assert verify_factorization(p, f)
        rows.append((n, w, inversion_count(p), len(f.layers), elapsed))

print(f"{'n':>8} {'w':>3} {'inversions':>11} {'layers':>7} {'seconds':>8}")
for n, w, inv, layers, s in rows:
    print(f"{n:>8} {w:>3} {inv:>11} {layers:>7} {s:>8.3f}")


# Time per inversion should stay roughly flat.

# In[2]:

per = np.array([s / inv for _, _, inv, _, s in rows]) * 1e6
print("microseconds per inversion:", np.round(per, 2))
