"""Dual graphs, bipartite orientations and expanded degenerations."""

# %%
# A triangle has no bipartite orientation: every 2-colouring fails on an odd cycle.
from expdeg import DualGraph, bipartify, bipartite_orientations, has_directed_cycle
from expdeg import avector_from_set, expand, is_bipartitely_oriented, single_edge_graph
from expdeg import io

tri = DualGraph.build("abc", [("e", "a", "b"), ("f", "b", "c"), ("g", "c", "a")])
print("orientations of the triangle:", len(bipartite_orientations(tri)))
print("directed cycle:", has_directed_cycle(tri))

# %%
# Subdividing every edge fixes that. The new vertices become sinks.
b = bipartify(tri)
print(len(b.vertices), "vertices, bipartitely oriented:", is_bipartitely_oriented(b))

# %%
# The simplest case: two components glued along one divisor D.
g = single_edge_graph(fibre_dim=2)
a = avector_from_set(3, {1, 3, 4})
print("a =", a.entries, "levels", a.labels)

x = expand(g, a)
for w in x.white_nodes:
    print("white node", w)

# %%
# Graphviz output, white nodes are the inserted bubbles.
print(io.expanded_to_dot(x))
