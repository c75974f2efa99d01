# %% [markdown]
# # The composition monoid
#
# Compositions multiply under the product `o`. They factor uniquely into
# irreducibles, and the L-polynomial records all coarsenings of a
# composition.

# %%
from collections import defaultdict

from csftrees import (
    Composition,
    compose,
    compositions_of,
    format_factorization,
    irreducible_factorization,
    l_equivalence_class,
    l_polynomial,
    reverse,
)

a, b = Composition.parse("2 1"), Composition.parse("2 3")
print(a, "o", b, "=", compose(a, b))

# %%
c = Composition.parse("4 10 4 10")
f = irreducible_factorization(c)
print(c, "=", format_factorization(f))
print([str(x) for x in sorted(l_equivalence_class(c))])

# %% [markdown]
# The L-polynomial of 2 2 1 2, listed by partition.

# %%
for lam, coeff in l_polynomial(Composition.parse("2 2 1 2")).sorted_terms():
    print(coeff, lam)

# %% [markdown]
# Group the compositions of 9 by L-polynomial. Most groups are just a
# composition and its reverse. The one larger group has two factors, and
# each can be reversed independently of the other.

# %%
groups = defaultdict(list)
for comp in compositions_of(9):
    groups[l_polynomial(comp)].append(comp)
big = [g for g in groups.values() if len(g) > 2]
print(len(groups), "classes;", len(big), "larger than {a, a*}")
for g in big:
    print([str(x) for x in g], "factors:", format_factorization(irreducible_factorization(g[0])))

# %%
print(reverse(Composition.parse("3 1 2")))
