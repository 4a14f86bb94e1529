# coding: utf-8

# # Hook and wiring diagrams
#
# ASCII drawings fit in a terminal. The same options produce SVG files.

# In[1]:

from pathlib import Path

from bandperm import Permutation, RenderOptions, Word, hook_factor, render_hook, render_wiring, to_word

p = Permutation((5, 4, 7, 1, 9, 2, 3, 10, 8, 6))
print(render_hook(p, RenderOptions("ascii", show_indices=True, show_diagonals=True)))


# The wiring diagram of the word read off the hook diagram. Each `+` is one
# swap; the right column lists which strand ends at each position.

# In[2]:

print(render_wiring(to_word(hook_factor(p)), RenderOptions("ascii")))


# SVG versions.

# In[3]:

out = Path("figures")
out.mkdir(exist_ok=True)
(out / "hook.svg").write_text(render_hook(p, RenderOptions(show_indices=True, show_diagonals=True)))
(out / "wiring.svg").write_text(render_wiring(Word(5, (2, 4, 3, 1, 4)), RenderOptions(show_indices=True)))
print(sorted(str(f) for f in out.iterdir()))
