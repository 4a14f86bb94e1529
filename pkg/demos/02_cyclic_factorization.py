# coding: utf-8

# # Cyclically banded permutations
#
# Here entries may also wrap around the ends, so the swap of positions n and
# 1 (written s0) counts as bandwidth 1, and so does the shift S: x -> x + 1.

# In[1]:

from bandperm import Permutation, compose, cyclic_bandwidth, cyclic_factor, lift, shift, shifting_index
from bandperm.core import transposition
from bandperm.hook import verify_factorization

p = Permutation((6, 5, 2, 4, 3, 1))
print("ordinary bandwidth", max(abs(v - i) for i, v in enumerate(p.map, 1)),
      " cyclic bandwidth", cyclic_bandwidth(p))


# The periodic lift picks, for each position, the shortest displacement
# modulo n. Its shifting index is the average displacement.

# In[2]:

L = lift(p)
print("displacements", L.disp, " shifting index", shifting_index(L))


# Factor into cyclic layers followed by a residual shift.

# In[3]:

f = cyclic_factor(p)
for k, layer in f.layers:
    print(f"k={k:+d}:", " ".join(f"s{i}" for i in layer.indices))
print("shift exponent", f.shift_exponent, " verified", verify_factorization(p, f))


# The same product, written out by hand: s1, then s0 s4, then s1, then S^-1.

# In[4]:

q = Permutation(tuple(range(1, 7)))
for g in (transposition(6, 1), transposition(6, 0), transposition(6, 4), transposition(6, 1), shift(6, -1)):
    q = compose(q, g)
print(q, q == p)
