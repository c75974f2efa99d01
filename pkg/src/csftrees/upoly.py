"""U-polynomial of a tree.

On a tree every spanning subgraph with edge set ``F`` has exactly
``|V| - |F|`` components, so the ``y`` exponent of the U-polynomial is
always zero and ``U_T = sum over F of x_{lambda[F]}``.  We drop ``y`` and
return a :class:`SparsePolynomial` keyed by ``lambda[F]``.
"""

from __future__ import annotations

from .errors import BoundExceeded
from .symfun import SparsePolynomial, edge_subset_partitions, merge_partitions
from .trees import Tree

__all__ = ["upoly_naive", "upoly_tree_dp", "upoly", "restrict_min_part", "UPOLY_NAIVE_MAX_ORDER"]

UPOLY_NAIVE_MAX_ORDER = 20


def upoly_naive(t: Tree, max_order: int = UPOLY_NAIVE_MAX_ORDER) -> SparsePolynomial:
    """U-polynomial by visiting every edge subset."""
    if t.order > max_order:
        raise BoundExceeded("upoly_naive", t.order, max_order)
    acc: dict[tuple, int] = {}
    for _, lam in edge_subset_partitions(t):
        acc[lam] = acc.get(lam, 0) + 1
    return SparsePolynomial._raw(acc)


def _combine(parent: dict, child: dict) -> dict:
    # parent/child: {open component size: {closed parts: count}}
    out: dict[int, dict[tuple, int]] = {}
    for k1, polys1 in parent.items():
        for k2, polys2 in child.items():
            cut = out.setdefault(k1, {})
            keep = out.setdefault(k1 + k2, {})
            for lam1, c1 in polys1.items():
                for lam2, c2 in polys2.items():
                    both = merge_partitions(lam1, lam2)
                    c = c1 * c2
                    keep[both] = keep.get(both, 0) + c
                    closed = merge_partitions(both, (k2,))
                    cut[closed] = cut.get(closed, 0) + c
    return out


def upoly_tree_dp(t: Tree) -> SparsePolynomial:
    """U-polynomial by a bottom-up dynamic program over the tree rooted at 0.

    Each vertex carries a table ``size -> polynomial``: the open component
    containing the vertex has ``size`` vertices and the polynomial records
    the components already closed off below it.  A child edge is either cut
    (the child's open component becomes a finished part) or kept (sizes add).
    """
    parent = [-1] * t.order
    parent[0] = 0
    order = [0]
    for v in order:
        for w in t.adj[v]:
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    children: list[list[int]] = [[] for _ in range(t.order)]
    for v in order[1:]:
        children[parent[v]].append(v)

    table: list[dict | None] = [None] * t.order
    for v in reversed(order):
        state = {1: {(): 1}}
        for c in sorted(children[v]):
            state = _combine(state, table[c])
            table[c] = None
        table[v] = state

    acc: dict[tuple, int] = {}
    for k, polys in table[0].items():
        for lam, c in polys.items():
            key = merge_partitions(lam, (k,))
            acc[key] = acc.get(key, 0) + c
    return SparsePolynomial._raw({k: c for k, c in acc.items() if c})


def upoly(t: Tree) -> SparsePolynomial:
    """U-polynomial, using the dynamic program."""
    return upoly_tree_dp(t)


def restrict_min_part(u: SparsePolynomial, q: int) -> SparsePolynomial:
    """Set ``x_1 = ... = x_q = 0``: keep only terms whose parts all exceed ``q``."""
    if q <= 0:
        return u
    return SparsePolynomial._raw({k: c for k, c in u.items() if k[-1] > q})
