# %% [markdown]
# # Trees up to isomorphism
#
# Unlabelled trees are enumerated one per isomorphism class, and each gets a
# canonical parenthesis code. Trunk and twigs are the statistics later used
# to spot caterpillars.

# %%
from csftrees import (
    canonical_code,
    degree_sequence,
    diameter,
    enumerate_trees,
    parse_tree,
    relabel,
    spider_tree,
    trunk,
    twigs,
)

for n in range(1, 11):
    print(n, sum(1 for _ in enumerate_trees(n)))

# %% [markdown]
# Relabelling a tree leaves its code unchanged.

# %%
t = parse_tree("6; 0-1, 1-2, 2-3, 1-4, 4-5")
s = relabel(t, [5, 3, 0, 1, 2, 4])
print(t, "->", canonical_code(t))
print(s, "->", canonical_code(s))

# %% [markdown]
# A spider with legs 2, 2 and 3 has a one-vertex trunk, plus one twig for
# each leg.

# %%
sp = spider_tree([2, 2, 3])
print("degrees ", degree_sequence(sp))
print("diameter", diameter(sp))
print("trunk   ", sorted(trunk(sp)))
print("twigs   ", dict(twigs(sp)))
