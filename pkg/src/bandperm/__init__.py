"""Factor banded permutations into few bandwidth-1 layers."""
from .core import (
    CYCLIC, FINITE, Bandwidth1Factor, Permutation, Word, apply_word, bandwidth, compose,
    factor_as_permutation, identity, inverse, inversion_count, inversions, mset, shift,
)
from .cyclic import PeriodicLift, conjugate_index_by_shift, cyclic_bandwidth, cyclic_factor, lift, shifting_index
from .gen import GenConfig, random_banded
from .hook import (
    Crossing, Factorization, HookDiagram, build_hook_diagram, check_strang_bound, crossing_index,
    hook_factor, recompose, to_word, verify_factorization,
)
from .oracle import enumerate_generators, min_factors, reduce_word, tight_example
from .render import RenderOptions, render_hook, render_wiring

__version__ = "0.1.0"
