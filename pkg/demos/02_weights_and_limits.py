"""Limits of points along one-parameter subgroups and their weights."""

# %%
import numpy as np

from expdeg import Corner, PointPosition, Smooth, avector_from_set, limit, point_weight
from expdeg.weights import limit_exists, limit_mask, one_ps_box, point_weight_coefficients

a = avector_from_set(2, {1, 3})
p = PointPosition(a, Smooth(1), "D")

# %%
# A limit exists only when s is non-decreasing across the levels missing from I.
for s in [(1, 0), (0, 1), (-1, 2)]:
    if limit_exists(a.index_set, s):
        print(s, "lands on", limit(p, s).landing.kind)
    else:
        print(s, "no limit")

# %%
# The weight is piecewise linear in s, with one slope vector for the positive
# coordinates and one for the negative ones. That makes a whole box one matmul.
pos, neg = point_weight_coefficients(p)
box = one_ps_box(2, 2)
box = box[limit_mask(a.index_set, box)]
vals = np.maximum(box, 0) @ pos + np.minimum(box, 0) @ neg
print(box.shape[0], "subgroups with a limit, weight range", vals.min(), vals.max())

# %%
# Cross-check a few rows against the scalar routine.
for s, w in zip(box[::4], vals[::4]):
    s = tuple(int(x) for x in s)
    assert point_weight(p, s) == w
    print(s, w)

# %%
# A point sitting on a corner between levels 0 and 1.
q = PointPosition(a, Corner(0, 1), "D")
print("corner weight at (0, 1):", point_weight(q, (0, 1)))
