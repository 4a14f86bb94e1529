# coding: utf-8

# # Factoring a banded permutation into bandwidth-1 layers
#
# A permutation of bandwidth w moves no entry more than w places. We factor
# one into layers of pairwise nonadjacent swaps, one layer per hook-diagram
# diagonal.

# In[1]:

from bandperm import (
    Permutation, bandwidth, build_hook_diagram, check_strang_bound, hook_factor, inversion_count,
    mset, to_word, verify_factorization,
)

p = Permutation((5, 4, 7, 1, 9, 2, 3, 10, 8, 6))
print("p =", p, " bandwidth", bandwidth(p), " inversions", inversion_count(p))


# Every inversion (i, j) is a crossing of two hooks at grid point (i, p(j)).
# The crossings fall on the diagonals c - r = k for k in mset(p):

# In[2]:

diagram = build_hook_diagram(p)
print("diagonals:", mset(p))
for k, crossings in diagram.crossings_by_diagonal.items():
    print(f"  k={k:+d}", [(c.i, c.j) for c in crossings])


# Each diagonal becomes one layer of commuting swaps. Layers are applied
# left to right.

# In[3]:

f = hook_factor(p)
for k, layer in f.layers:
    print(f"k={k:+d}:", " ".join(f"s{i}" for i in layer.indices))
print("recomposes to p:", verify_factorization(p, f))


# The layers also spell out a reduced word, one letter per inversion.

# In[4]:

word = to_word(f)
print(len(word), "letters, inversion count", inversion_count(p))
print(check_strang_bound(p))


# Padding keeps empty diagonals, which is handy when a fixed number of
# stages (2w - 1) is expected downstream.

# In[5]:

q = Permutation((2, 3, 1, 4))
print([(k, layer.indices) for k, layer in hook_factor(q, pad=True).layers])
