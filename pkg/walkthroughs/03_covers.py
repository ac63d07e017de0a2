# %% [markdown]
# # Covers, gauges and canonical forms
#
# A k-fold cover puts k pairwise-disjoint maps on every edge. A coloring
# survives when it contains none of them. The natural cover forbids exactly
# the monochromatic patterns, so it counts proper colorings.

# %%
from hyperdp.cover import (
    TwistCover, apply_gauge, canonicalize, count_colorings, frame, natural_cover, random_cover, random_gauge,
)
from hyperdp.genlib import graph_cycle, loose_cycle, loose_path

C4 = graph_cycle(4)
print(count_colorings(C4, natural_cover(C4, 2)))

# %% [markdown]
# Twisting a single edge of the 4-cycle with the swap kills every coloring.

# %%
twisted = TwistCover.build(C4, 2, mu={(0, 1): (1, 0)})
print(count_colorings(C4, twisted))

# %% [markdown]
# Relabeling colors independently at each vertex (a gauge) moves a cover to
# another cover with the same count.

# %%
H = loose_cycle(3, 4)
C = random_cover(H, 3, seed=1)
tau = random_gauge(H, 3, seed=2)
print(count_colorings(H, C), count_colorings(H, apply_gauge(H, C, tau)))

# %% [markdown]
# Gauge fixing along a spanning forest of the incidence graph leaves one free
# permutation per independent cycle. Hypertrees have none, so every cover of
# a hypertree is the natural one in disguise.

# %%
print(frame(H).free_slots)
can = canonicalize(H, C)
print(can.free_slots)

tree = loose_path(3, 3)
print(canonicalize(tree, random_cover(tree, 3, seed=5)).free_slots)
