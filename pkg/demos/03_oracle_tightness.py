# coding: utf-8

# # How good is the layer count?
#
# For small n we can afford to search the whole symmetric group. Breadth-first
# search over all bandwidth-1 permutations gives the true minimum number of
# layers, which we compare with the hook count.

# In[1]:

import itertools
from collections import Counter

from bandperm import Permutation, hook_factor, min_factors, mset, tight_example

n = 6
gaps = Counter()
for t in itertools.permutations(range(1, n + 1)):
    p = Permutation(t)
    gaps[len(mset(p)) - min_factors(p).min_length] += 1
print("hook count minus true minimum, over S_6:", dict(sorted(gaps.items())))


# The block swap (w+1 .. 2w, 1 .. w) needs every one of the 2w - 1 layers.

# In[2]:

for w in (1, 2, 3):
    t = tight_example(w, 2 * w)
    print(w, t, "minimum", min_factors(t).min_length, "hook", len(hook_factor(t).layers))


# With cyclic generators (wrap-around swaps and shifts) the same permutation
# can be cheaper.

# In[3]:

t = tight_example(2, 4)
r = min_factors(t, "cyclic")
print(r.min_length, [g.map for g in r.witness])


# Words that are not reduced shrink back to the inversion count.

# In[4]:

from bandperm import Word, reduce_word

w = Word(4, (1, 2, 1, 3, 2, 1, 2, 1))
print(w.letters, "->", reduce_word(w).letters)
