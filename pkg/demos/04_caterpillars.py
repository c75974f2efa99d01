# %% [markdown]
# # Proper q-caterpillars are told apart by their CSF
#
# A composition whose parts are all 1 mod q and larger than 1 builds a
# caterpillar. Each part becomes a spine vertex carrying (part - 1) / q legs
# of length q.

# %%
from csftrees import (
    diameter,
    is_proper_q_caterpillar_prop1,
    l_polynomial,
    phi,
    relabel,
    restrict_min_part,
    tau,
    trunk,
    twigs,
    upoly_tree_dp,
    verify_theorem1,
)

q = 2
t = tau((3, 5, 3, 7, 5), q)
print("order", t.order, "trunk", len(trunk(t)), "twigs", dict(twigs(t)), "diameter", diameter(t))
print("recognised:", is_proper_q_caterpillar_prop1(t, q))

# %% [markdown]
# Reading the tree back gives the composition, up to reversal. This works
# after any relabelling.

# %%
import random

rng = random.Random(1)
perm = list(range(t.order))
rng.shuffle(perm)
print(phi(relabel(t, perm), q))

# %% [markdown]
# Zeroing x_1..x_q in U leaves exactly the L-polynomial of the composition.

# %%
print(restrict_min_part(upoly_tree_dp(t), q) == l_polynomial(phi(t, q)))

# %% [markdown]
# The sweep groups compositions by L-polynomial and finds that no group is
# bigger than {a, a*}, so non-isomorphic caterpillars have different CSFs.

# %%
for q in (2, 3, 4):
    report = verify_theorem1(q, 21)
    print(report.lines[-3])
    print(report.text().splitlines()[-1])
