# %% [markdown]
# # Counting proper colorings
#
# A coloring is proper when no edge is monochromatic. Counts are exact
# Python integers; the enumeration itself is vectorized in blocks.

# %%
from hyperdp.chromcount import boundary_profile, chromatic_polynomial, count_proper, hypertree_poly, unicyclic_poly
from hyperdp.genlib import loose_cycle, loose_path, unicyclic
from hyperdp.hypercore import delete_edge

path = loose_path(3, 2)
print(count_proper(path, 2), hypertree_poly(3, 2, 2))

# %% [markdown]
# The count is a polynomial in k of degree n. We recover it by
# interpolating exact counts at k = 0..n.

# %%
poly = chromatic_polynomial(loose_cycle(2, 3))
print(poly)
print([poly(k) for k in range(6)])

# %% [markdown]
# Instances with one cycle have their own closed form, with a sign
# that depends on the parity of the cycle length.

# %%
for p in (3, 4, 5):
    H = unicyclic(3, 1, p, seed=0)
    print(p, count_proper(H, 2), unicyclic_poly(3, 1, p, 2))

# %% [markdown]
# ## Boundary profiles
#
# Delete an edge and count colorings of what is left, grouped by the colors
# on the deleted edge. On a hypertree every non-constant pattern gets the
# same count. On the loose triangle only the first two positions matter.

# %%
prof = boundary_profile(path, 1, 2)
print(prof.vertices, prof.constant_split())

tri = loose_cycle(3, 3)
prof = boundary_profile(tri, 2, 2)
print(prof.vertices, prof.first_pair_split())
print(prof.total(), count_proper(delete_edge(tri, 2), 2))
