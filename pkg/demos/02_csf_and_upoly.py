# %% [markdown]
# # Chromatic symmetric function and U-polynomial
#
# For a tree, the CSF in the power-sum basis is a signed sum over edge
# subsets. The U-polynomial counts the same subsets by component sizes,
# without signs. Each can be recovered from the other.

# %%
from csftrees import (
    csf_by_colorings,
    csf_from_upoly,
    csf_power_sum,
    enumerate_trees,
    parse_tree,
    power_sums_to_monomials,
    upoly_naive,
    upoly_tree_dp,
)

p4 = parse_tree("4; 0-1, 1-2, 2-3")
star = parse_tree("4; 0-1, 0-2, 0-3")
for name, t in (("path", p4), ("star", star)):
    print(name, "X =", csf_power_sum(t).serialize())
    print(name, "U =", upoly_tree_dp(t).serialize())

# %% [markdown]
# Signs flip exactly as the sign rule predicts, so the CSF comes back from U.

# %%
print(csf_from_upoly(upoly_tree_dp(p4), 4) == csf_power_sum(p4))

# %% [markdown]
# Counting proper colourings with three colours gives the same polynomial
# as expanding the power sums in three variables.

# %%
direct = csf_by_colorings(p4, 3)
expanded = power_sums_to_monomials(csf_power_sum(p4), 3)
print(direct == expanded)
for exps, c in sorted(direct.terms.items())[:5]:
    print(exps, c)

# %% [markdown]
# The tree DP agrees with the subset sum, and it also scales to much larger
# trees.

# %%
import time

for n in (8, 10):
    start = time.perf_counter()
    ok = all(upoly_tree_dp(t) == upoly_naive(t) for t in enumerate_trees(n))
    print(n, ok, f"{time.perf_counter() - start:.2f}s")

# %% [markdown]
# Every tree of order 10 has its own CSF.

# %%
trees = list(enumerate_trees(10))
print(len(trees), len({csf_power_sum(t) for t in trees}))
