"""Trees, canonical forms, enumeration and the structural invariants
(degree counts, diameter, trunk, twigs) used to recognise caterpillars.

Vertices are always the integers ``0..order-1``.  A :class:`Tree` is
immutable; every function here is pure.
"""

from __future__ import annotations

import heapq
import random
import re
from collections import Counter, deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import BadLabel, NotATree, NoTrunk

__all__ = [
    "Tree",
    "tree_from_edges",
    "tree_from_prufer",
    "tree_from_code",
    "parse_tree",
    "format_tree",
    "path_tree",
    "star_tree",
    "spider_tree",
    "random_tree",
    "relabel",
    "canonical_code",
    "are_isomorphic",
    "enumerate_trees",
    "degree_sequence",
    "degree_counts",
    "bfs_distances",
    "diameter",
    "is_path",
    "trunk",
    "twigs",
]


class Tree:
    """A finite tree on vertices ``0..order-1``.

    ``edges`` is stored as a sorted tuple of ``(u, v)`` pairs with ``u < v``;
    ``adj[v]`` is the sorted tuple of neighbours of ``v``.
    """

    __slots__ = ("order", "edges", "adj")

    def __init__(self, order: int, edges: Iterable[Sequence[int]]):
        if order < 1:
            raise NotATree(f"order must be positive, got {order}")
        norm = []
        for e in edges:
            u, v = (int(x) for x in e)
            for x in (u, v):
                if not 0 <= x < order:
                    raise BadLabel(f"vertex {x} outside 0..{order - 1}")
            if u == v:
                raise NotATree(f"self-loop at {u}")
            norm.append((u, v) if u < v else (v, u))
        if len(set(norm)) != len(norm):
            raise NotATree("duplicate edge")
        if len(norm) != order - 1:
            raise NotATree(f"{len(norm)} edges for {order} vertices")
        adj: list[list[int]] = [[] for _ in range(order)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != order:
            raise NotATree("graph is disconnected")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other):
        # labelled equality; use are_isomorphic for the unlabelled notion
        if not isinstance(other, Tree):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def __repr__(self):
        return f"Tree({format_tree(self)!r})"

    def __str__(self):
        return format_tree(self)


def tree_from_edges(order: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate ``edges`` and build a :class:`Tree`.

    Raises :class:`BadLabel` for out-of-range vertices and :class:`NotATree`
    for self-loops, duplicate edges, a wrong edge count or disconnection.
    """
    return Tree(order, edges)


def tree_from_prufer(seq: Sequence[int]) -> Tree:
    """Decode a Prüfer sequence of length ``n - 2`` into a labelled tree."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, edges)


_TREE_RE = re.compile(r"^\s*(\d+)\s*;(.*)$")


def parse_tree(text: str) -> Tree:
    """Parse the one-line format ``"n; u1-v1, u2-v2, ..."``."""
    m = _TREE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse tree {text!r}: expected 'n; u-v, ...'")
    order = int(m.group(1))
    edges = []
    for chunk in m.group(2).split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            u, v = (int(s) for s in chunk.split("-"))
        except ValueError:
            raise ValueError(f"cannot parse edge {chunk!r}") from None
        edges.append((u, v))
    return Tree(order, edges)


def format_tree(t: Tree) -> str:
    edges = ", ".join(f"{u}-{v}" for u, v in t.edges)
    return f"{t.order}; {edges}" if edges else f"{t.order};"


def path_tree(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(k: int) -> Tree:
    """The star K_{1,k} with centre 0."""
    return Tree(k + 1, [(0, i) for i in range(1, k + 1)])


def spider_tree(legs: Sequence[int]) -> Tree:
    """A centre vertex 0 with one pendant path per entry of ``legs``."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, edges)


def random_tree(n: int, rng: random.Random | None = None) -> Tree:
    """A uniformly random labelled tree on ``n`` vertices."""
    rng = rng or random.Random()
    if n <= 2:
        return path_tree(n)
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])


def relabel(t: Tree, perm: Sequence[int]) -> Tree:
    """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
    return Tree(t.order, [(perm[u], perm[v]) for u, v in t.edges])


# ---------------------------------------------------------------------------
# canonical form


def _centers(t: Tree) -> list[int]:
    n = t.order
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in t.adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in t.adj[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Tree, root: int) -> str:
    parent = [-1] * t.order
    order = [root]
    parent[root] = root
    for v in order:
        for w in t.adj[v]:
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    child_codes: list[list[str]] = [[] for _ in range(t.order)]
    code = ""
    for v in reversed(order):
        code = "(" + "".join(sorted(child_codes[v])) + ")"
        if v != root:
            child_codes[parent[v]].append(code)
    return code


def canonical_code(t: Tree) -> str:
    """AHU parenthesis string of ``t`` rooted at its centre.

    For bicentral trees the smaller of the two centre-rooted codes is used,
    so two trees get equal codes exactly when they are isomorphic.
    """
    return min(_rooted_code(t, c) for c in _centers(t))


def are_isomorphic(a: Tree, b: Tree) -> bool:
    return a.order == b.order and canonical_code(a) == canonical_code(b)


def tree_from_code(code: str) -> Tree:
    """Inverse of the rooted encoding; vertices are numbered in preorder."""
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        elif ch == ")":
            stack.pop()
        else:
            raise ValueError(f"bad character {ch!r} in tree code")
    if stack:
        raise ValueError("unbalanced tree code")
    return Tree(nxt, edges)


@lru_cache(maxsize=None)
def _codes_of_order(n: int) -> tuple[str, ...]:
    # every tree of order n is a tree of order n-1 plus one leaf
    if n == 1:
        return ("()",)
    codes = set()
    for prev in _codes_of_order(n - 1):
        t = tree_from_code(prev)
        base = list(t.edges)
        for v in range(t.order):
            codes.add(canonical_code(Tree(n, base + [(v, n - 1)])))
    return tuple(sorted(codes))


def enumerate_trees(order: int) -> Iterator[Tree]:
    """Yield one tree per isomorphism class of the given order.

    Trees come out sorted by canonical code and labelled in preorder of
    their centre-rooted form.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    for code in _codes_of_order(order):
        yield tree_from_code(code)


# ---------------------------------------------------------------------------
# invariants


def degree_sequence(t: Tree) -> tuple[int, ...]:
    """Vertex degrees sorted non-increasingly (a single vertex has degree 0)."""
    return tuple(sorted((len(a) for a in t.adj), reverse=True))


def degree_counts(t: Tree) -> Counter:
    """``counts[i]`` is the number of vertices of degree ``i``."""
    return Counter(len(a) for a in t.adj)


def bfs_distances(t: Tree, source: int) -> list[int]:
    dist = [-1] * t.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in t.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def diameter(t: Tree) -> int:
    """Longest path length in edges, by two breadth-first searches."""
    d0 = bfs_distances(t, 0)
    far = max(range(t.order), key=d0.__getitem__)
    return max(bfs_distances(t, far))


def is_path(t: Tree) -> bool:
    return all(len(a) <= 2 for a in t.adj)


def trunk(t: Tree) -> frozenset[int]:
    """Vertex set of the smallest subtree containing every vertex of
    degree at least three.

    Raises :class:`NoTrunk` when ``t`` is a path.
    """
    if is_path(t):
        raise NoTrunk(f"{format_tree(t)} is a path")
    deg = [len(a) for a in t.adj]
    alive = [True] * t.order
    cur = deg[:]
    stack = [v for v in range(t.order) if cur[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in t.adj[v]:
            if alive[w]:
                cur[w] -= 1
                if cur[w] == 1 and deg[w] < 3:
                    stack.append(w)
    return frozenset(v for v in range(t.order) if alive[v])


def twigs(t: Tree) -> Counter:
    """Multiset of twig lengths as a ``Counter`` ``{length: multiplicity}``.

    A twig runs from a pendant vertex through degree-2 vertices to the trunk.
    """
    core = trunk(t)
    out: Counter = Counter()
    for leaf in range(t.order):
        if len(t.adj[leaf]) != 1:
            continue
        prev, cur, length = leaf, t.adj[leaf][0], 1
        while cur not in core:
            a, b = t.adj[cur]
            prev, cur = cur, (b if a == prev else a)
            length += 1
        out[length] += 1
    return out
