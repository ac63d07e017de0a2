# %% [markdown]
# # The DP color function
#
# P_DP(H, k) is the minimum surviving-coloring count over all k-fold
# covers. Because only free slots matter, the exact search scans (k!)^s
# canonical covers, where s is the cycle rank.

# %%
from hyperdp.chromcount import count_proper
from hyperdp.cover import count_colorings, extremal_cover
from hyperdp.dpfunc import (
    dp_chromatic_number, dp_closed, dp_exact, dp_upper_bound, exact_average, gap_profile, monte_carlo_mean,
    strict_less_test,
)
from hyperdp.genlib import graph_cycle, loose_cycle, loose_path

for p in (3, 4):
    H = loose_cycle(3, p)
    res = dp_exact(H, 2)
    print(p, res.value, count_proper(H, 2), res.covers_examined, dp_closed(H, 2))

# %% [markdown]
# On the even cycle a cyclic shift on one edge attains the minimum.

# %%
H = loose_cycle(3, 4)
print(count_colorings(H, extremal_cover(H, 3, 2, "shifted")))

# %% [markdown]
# ## The average cover
#
# Averaging over all full covers gives a closed-form bound. It is met
# exactly on hypertrees and strictly exceeds the minimum on anything with a
# cycle.

# %%
tri = loose_cycle(3, 3)
print(dp_upper_bound(tri, 2), exact_average(tri, 2))
print(monte_carlo_mean(tri, 2, trials=2000, seed=0))
print(dp_exact(loose_path(3, 2), 2).value, dp_upper_bound(loose_path(3, 2), 2))

# %% [markdown]
# A cheap sufficient test for P_DP < P compares P(H - e) against a multiple
# of P(H).

# %%
print(strict_less_test(H, 3, 2))

# %% [markdown]
# Graphs behave as expected: the 4-cycle needs three colors in the DP sense.

# %%
print(dp_chromatic_number(graph_cycle(4), 4))
for row in gap_profile(H, [2, 3]):
    print(row.csv_fields())
