# %% [markdown]
# # Hypergraph structure
#
# A hypergraph here is a vertex count plus a tuple of edges. Edge indices are
# stable identities, so everything else in the library refers to edges by
# position.

# %%
from hyperdp.hypercore import Hypergraph, attachment_order, classify, components, delete_edge, parse_hypergraph

tri = parse_hypergraph("""
# a loose triangle: three 3-edges, consecutive ones sharing a vertex
n=6
e=0 1 2
e=2 3 4
e=4 5 0
""")
print(tri)

# %% [markdown]
# `classify` reports linearity, the cycle rank of the vertex-edge incidence
# graph and, for one-cycle inputs, the cycle itself.

# %%
rep = classify(tri)
print(rep.classification, rep.incidence_rank, rep.cycle_length)
print("cycle edges", rep.cycle_edges, "links", rep.cycle_vertices)

# %% [markdown]
# The order in which the vertices of an edge are listed matters for the
# boundary profiles later on. Cycle edges list their two links first.

# %%
print(attachment_order(tri, 2))

# %% [markdown]
# Deleting a cycle edge leaves a forest. Vertices are never removed, so the
# free vertex 5 becomes its own component.

# %%
forest = delete_edge(tri, 2)
print(classify(forest).classification)
for verts, eids in components(forest):
    print(verts, eids)

# %%
two_cycles = Hypergraph(5, ((0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 0)))
print(classify(two_cycles).classification, classify(two_cycles).incidence_rank)
