"""Proper q-caterpillars and their compositions.

A proper q-caterpillar has a spine path ``v_1 .. v_l``; spine vertex ``v_i``
carries ``p_i >= 1`` pendant legs, each a path of exactly ``q`` further
vertices.  It is encoded by the composition with parts ``q * p_i + 1``
(every part is > 1 and congruent to 1 mod q).  :func:`tau` builds the tree
from the composition and :func:`phi` reads the composition back.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .compositions import Composition, l_polynomial, reverse
from .errors import BadComposition, BoundExceeded, NotAProperQCaterpillar
from .trees import Tree, degree_counts, diameter, is_path, trunk, twigs
from .upoly import restrict_min_part, upoly_tree_dp

__all__ = [
    "tau",
    "phi",
    "recover_spine",
    "leg_counts",
    "is_proper_q_caterpillar_structural",
    "is_proper_q_caterpillar_prop1",
    "qualifying_compositions",
    "enumerate_proper_q_caterpillars",
    "verify_lemma3",
    "CATERPILLAR_MAX_ORDER",
]

CATERPILLAR_MAX_ORDER = 24


def _check_q(q: int) -> None:
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")


def tau(a: Sequence[int], q: int) -> Tree:
    """Build the proper q-caterpillar of composition ``a``.

    Spine vertices are ``0..len(a)-1`` in order; each spine vertex ``i`` gets
    ``(a[i] - 1) // q`` legs of ``q`` vertices, numbered consecutively after
    the spine.
    """
    _check_q(q)
    a = tuple(a)
    if not a:
        raise BadComposition("empty composition")
    for part in a:
        if part <= 1 or (part - 1) % q:
            raise BadComposition(f"part {part} is not > 1 and congruent to 1 mod {q}")
    ell = len(a)
    edges = [(i, i + 1) for i in range(ell - 1)]
    nxt = ell
    for i, part in enumerate(a):
        for _ in range((part - 1) // q):
            prev = i
            for _ in range(q):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return Tree(nxt, edges)


def leg_counts(t: Tree, spine: Sequence[int], q: int) -> list[int] | None:
    """Legs per spine vertex, or ``None`` if something other than a
    length-``q`` pendant path hangs off the spine (or a vertex has no leg)."""
    on_spine = set(spine)
    if len(on_spine) != len(spine):
        return None
    for u, v in zip(spine, spine[1:]):
        if v not in t.adj[u]:
            return None
    counts = []
    for v in spine:
        legs = 0
        for w in t.adj[v]:
            if w in on_spine:
                continue
            prev, cur, size = v, w, 1
            while True:
                nbrs = t.adj[cur]
                if len(nbrs) == 1:
                    break
                if len(nbrs) != 2:
                    return None
                prev, cur = cur, (nbrs[1] if nbrs[0] == prev else nbrs[0])
                size += 1
                if cur in on_spine:
                    return None
            if size != q:
                return None
            legs += 1
        if legs == 0:
            return None
        counts.append(legs)
    return counts


def _path_order(t: Tree) -> list[int]:
    if t.order == 1:
        return [0]
    start = next(v for v in range(t.order) if len(t.adj[v]) == 1)
    out = [start]
    prev = -1
    while True:
        nxt = [w for w in t.adj[out[-1]] if w != prev]
        if not nxt:
            return out
        prev = out[-1]
        out.append(nxt[0])


def _twig_attachments(t: Tree, core: frozenset) -> list[tuple[int, int, int]]:
    # (trunk vertex, first twig vertex next to it, twig length) for every twig
    out = []
    for leaf in range(t.order):
        if len(t.adj[leaf]) != 1:
            continue
        prev, cur, length = leaf, t.adj[leaf][0], 1
        while cur not in core:
            a, b = t.adj[cur]
            prev, cur = cur, (b if a == prev else a)
            length += 1
        out.append((cur, prev, length))
    return out


def recover_spine(t: Tree, q: int) -> list[int] | None:
    """Find a spine witnessing that ``t`` is a proper q-caterpillar.

    Paths are matched on their order (``q+1``, ``2q+1`` or ``2q+2``).
    Otherwise the trunk must be a path; it is extended by one vertex into a
    twig of length ``q+1`` at each trunk end that carries one.  The candidate
    is then validated with :func:`leg_counts`.  Returns ``None`` when ``t``
    is not a proper q-caterpillar.
    """
    _check_q(q)
    if is_path(t):
        line = _path_order(t)
        n = t.order
        if n == q + 1:
            spine = [line[0]]
        elif n == 2 * q + 1:
            spine = [line[q]]
        elif n == 2 * q + 2:
            spine = [line[q], line[q + 1]]
        else:
            return None
        return spine if leg_counts(t, spine, q) is not None else None

    core = trunk(t)
    sub_deg = {v: sum(1 for w in t.adj[v] if w in core) for v in core}
    if any(d > 2 for d in sub_deg.values()):
        return None
    if len(core) == 1:
        line = list(core)
    else:
        start = next(v for v, d in sub_deg.items() if d == 1)
        line = [start]
        prev = -1
        while True:
            nxt = [w for w in t.adj[line[-1]] if w in core and w != prev]
            if not nxt:
                break
            prev = line[-1]
            line.append(nxt[0])

    long_twigs: dict[int, list[int]] = {}
    for base, first, length in _twig_attachments(t, core):
        if length == q + 1:
            long_twigs.setdefault(base, []).append(first)
    for base, firsts in long_twigs.items():
        if len(firsts) > (2 if len(core) == 1 else 1):
            return None
        if base not in (line[0], line[-1]):
            return None
    spine = list(line)
    if len(core) == 1:
        firsts = sorted(long_twigs.get(line[0], []))
        if firsts:
            spine = [firsts[0]] + spine
        if len(firsts) > 1:
            spine = spine + [firsts[1]]
    else:
        if line[0] in long_twigs:
            spine = [long_twigs[line[0]][0]] + spine
        if line[-1] in long_twigs:
            spine = spine + [long_twigs[line[-1]][0]]
    return spine if leg_counts(t, spine, q) is not None else None


def is_proper_q_caterpillar_structural(t: Tree, q: int) -> bool:
    """True iff a spine decomposition with all legs of length ``q`` exists."""
    return recover_spine(t, q) is not None


def is_proper_q_caterpillar_prop1(t: Tree, q: int) -> bool:
    """Recognise proper q-caterpillars from tree statistics alone.

    A path qualifies iff its order is ``q+1``, ``2q+1`` or ``2q+2``.  Any
    other tree qualifies iff

    * the trunk order equals the number of vertices of degree >= 3,
    * every twig has length ``q`` or ``q+1``, with at most two of length ``q+1``,
    * the diameter equals ``(trunk order - 1) + 2q + #twigs of length q+1``.
    """
    _check_q(q)
    if is_path(t):
        return t.order in (q + 1, 2 * q + 1, 2 * q + 2)
    core_size = len(trunk(t))
    deg = degree_counts(t)
    if core_size != t.order - deg[1] - deg[2]:
        return False
    tw = twigs(t)
    if set(tw) - {q, q + 1}:
        return False
    m = tw[q + 1]
    if m > 2:
        return False
    return diameter(t) == (core_size - 1) + 2 * q + m


def phi(t: Tree, q: int) -> Composition:
    """Composition of a proper q-caterpillar, parts ``q * legs + 1`` along
    the spine.

    The spine can be read in either direction; the lexicographically smaller
    of the two readings is returned.
    """
    spine = recover_spine(t, q)
    if spine is None:
        raise NotAProperQCaterpillar(f"{t} is not a proper {q}-caterpillar")
    comp = Composition(q * p + 1 for p in leg_counts(t, spine, q))
    return min(comp, reverse(comp))


def qualifying_compositions(n: int, q: int) -> Iterator[Composition]:
    """Compositions of ``n`` with every part > 1 and congruent to 1 mod q,
    in lexicographic order."""
    _check_q(q)
    allowed = list(range(q + 1, n + 1, q))

    def rec(rest: int) -> Iterator[tuple]:
        if rest == 0:
            yield ()
            return
        for p in allowed:
            if p > rest:
                break
            for tail in rec(rest - p):
                yield (p,) + tail

    if n < 1:
        return
    for parts in rec(n):
        yield Composition(parts)


def enumerate_proper_q_caterpillars(
    q: int, max_order: int, max_bound: int = CATERPILLAR_MAX_ORDER
) -> Iterator[tuple[Composition, Tree]]:
    """``(composition, tau(composition))`` for every qualifying composition of
    every order up to ``max_order``.  Both a composition and its reverse are
    listed."""
    if max_order > max_bound:
        raise BoundExceeded("enumerate_proper_q_caterpillars", max_order, max_bound)
    for n in range(1, max_order + 1):
        for a in qualifying_compositions(n, q):
            yield a, tau(a, q)


def verify_lemma3(t: Tree, q: int) -> bool:
    """Compare ``U_T`` with ``x_1..x_q`` zeroed against ``L(phi(T))``."""
    comp = phi(t, q)
    return restrict_min_part(upoly_tree_dp(t), q) == l_polynomial(comp)
