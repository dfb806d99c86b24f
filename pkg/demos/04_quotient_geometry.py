"""Strata of the quotient, their closure order and the dual complex."""

# %%
from fractions import Fraction

import networkx as nx

from expdeg import (
    ConfigPoint,
    Configuration,
    PointPosition,
    Smooth,
    avector_from_set,
    closure_order,
    dual_complex,
    singularity_report,
    single_edge_graph,
    stabilizer,
    strata,
)

# %%
# With two-dimensional fibres every stratum has dimension 2n - (r - 1).
n = 3
for s in sorted(strata(single_edge_graph(2), n), key=lambda s: s.a.r):
    print(sorted(s.index_set), s.dimension, " x ".join(map(str, s.factors)))

# %%
# The closure order is the face poset of the n-simplex.
h = closure_order(strata(single_edge_graph(), n))
dc = dual_complex(n)
print("f-vector", dc.f_vector(), "euler", dc.euler_characteristic())
print("same poset:", set(h.edges) == set(nx.transitive_reduction(dc.face_poset()).edges))

# %%
# Finite stabilizers come from sign flips at an interior level.
a = avector_from_set(2, {1, 3})


def pt(level, base, fiber):
    return ConfigPoint(PointPosition(a, Smooth(level), "D"), 1, base, Fraction(fiber))


print(stabilizer(Configuration(2, {1, 3}, (pt(1, "x", 2), pt(1, "x", -2)))))
print(stabilizer(Configuration(2, {1, 3}, (pt(1, "x", 2), pt(1, "x", 3)))))

# %%
print(singularity_report(2, 2))
