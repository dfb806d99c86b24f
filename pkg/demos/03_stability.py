"""Deciding stability, and checking the answer against brute force."""

# %%
from collections import Counter

from expdeg import (
    Configuration,
    all_avectors,
    canonical_support,
    enumerate_configurations,
    git_stable,
    lw_stable,
    numerical_support,
    oracle_scan,
)
from expdeg.stability import weight_envelope

n = 3
a = next(x for x in all_avectors(n) if x.index_set == {1, 2, 4})
print("a =", a.entries, "canonical support", canonical_support(a))

# %%
# Among all smooth-support cycles for this a, exactly one is stable.
for c in enumerate_configurations(n, a.index_set, "smooth"):
    v = git_stable(c)
    print(numerical_support(c), v.status.value, v.witness)

# %%
# The witness is a genuine certificate: the limit exists and the weight,
# including the line-bundle correction, stays negative.
c = Configuration.from_support(n, a.index_set, (1, 1, 1, 0))
v = git_stable(c)
env = weight_envelope(c, v.witness, v.ell_threshold)
print("omega", v.witness_weight, "envelope", (env.lower, env.upper))

# %%
# The exhaustive box scan agrees on every cycle with n <= 3.
tally = Counter()
for m in range(1, n + 1):
    for b in all_avectors(m):
        for c in enumerate_configurations(m, b.index_set, "smooth"):
            tally[git_stable(c).stable == oracle_scan(c).stable] += 1
print(tally)

# %%
# Li-Wu stability is weaker: (0, 1, 1) over I = {1, 3} passes it but is GIT unstable.
c = Configuration.from_support(2, {1, 3}, (0, 1, 1))
print("LW", lw_stable(c), "GIT", git_stable(c).stable)
