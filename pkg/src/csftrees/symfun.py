"""Sparse integer polynomials keyed by partitions, and the chromatic
symmetric function of a tree in the power-sum basis.

A partition is a plain tuple of positive ints in non-increasing order.  The
same :class:`SparsePolynomial` type holds three kinds of object:

* ``sum c_lam * p_lam``  -- a symmetric function in the power-sum basis,
* ``sum c_lam * x_lam``  -- a U- or L-polynomial, where
  ``x_lam = x_{lam_1} x_{lam_2} ...``.

Both are just maps from partitions to integer coefficients; the reading of
the keys is up to the caller.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BoundExceeded, EdgeNotInTree, WeightMismatch
from .trees import Tree

__all__ = [
    "Partition",
    "as_partition",
    "merge_partitions",
    "SparsePolynomial",
    "TruncatedMonomialPolynomial",
    "components_partition",
    "edge_subset_partitions",
    "csf_power_sum",
    "csf_by_colorings",
    "power_sums_to_monomials",
    "csf_from_upoly",
    "poly_add",
    "poly_equal",
    "poly_serialize",
    "CSF_MAX_ORDER",
]

Partition = tuple  # tuple[int, ...], non-increasing, positive

CSF_MAX_ORDER = 20
COLORING_MAX_ORDER = 8


def as_partition(parts: Iterable[int]) -> Partition:
    """Sort ``parts`` into a partition, rejecting non-positive entries."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if out and out[-1] < 1:
        raise ValueError(f"partition parts must be positive: {out}")
    return out


def merge_partitions(a: Partition, b: Partition) -> Partition:
    """Multiset union of two partitions (the product ``x_a * x_b``)."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


class SparsePolynomial:
    """Immutable map ``partition -> nonzero int``.

    Supports ``+``, ``-``, unary ``-``, ``*`` (by another polynomial, with
    keys multiplied as multisets, or by an int) and value equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for key, c in items:
            key = as_partition(key)
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "SparsePolynomial":
        # trusted constructor: keys already partitions, zeros already dropped
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, parts: Iterable[int], coeff: int = 1) -> "SparsePolynomial":
        return cls({as_partition(parts): coeff})

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def coefficient(self, parts: Iterable[int]) -> int:
        return self._terms.get(as_partition(parts), 0)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def total(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def weights(self) -> set[int]:
        return {sum(k) for k in self._terms}

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return SparsePolynomial._raw(out)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "SparsePolynomial":
        if isinstance(other, int):
            if other == 0:
                return SparsePolynomial._raw({})
            return SparsePolynomial._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        out: dict[Partition, int] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = merge_partitions(ka, kb)
                out[k] = out.get(k, 0) + ca * cb
        return SparsePolynomial._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        """Terms in increasing lexicographic order of partition."""
        return sorted(self._terms.items())

    def serialize(self) -> str:
        """``c*[a,b,...]`` terms joined by ``" + "``; ``"0"`` when empty."""
        if not self._terms:
            return "0"
        return " + ".join(
            f"{c}*[{','.join(map(str, k))}]" for k, c in self.sorted_terms()
        )

    def to_json(self) -> dict:
        return {
            "terms": [{"partition": list(k), "coeff": c} for k, c in self.sorted_terms()]
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "SparsePolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((tuple(t["partition"]), t["coeff"]) for t in data["terms"])

    @classmethod
    def parse(cls, text: str) -> "SparsePolynomial":
        """Inverse of :meth:`serialize`."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(" + "):
            coeff, _, part = chunk.strip().partition("*")
            part = part.strip()
            if not (part.startswith("[") and part.endswith("]")):
                raise ValueError(f"bad term {chunk!r}")
            inner = part[1:-1]
            key = tuple(int(s) for s in inner.split(",")) if inner else ()
            terms.append((key, int(coeff)))
        return cls(terms)

    def format_x(self, var: str = "x") -> str:
        """Human-readable form such as ``x1*x2^3 + 2*x5``."""
        if not self._terms:
            return "0"
        out = []
        for k, c in self.sorted_terms():
            counts = {}
            for p in k:
                counts[p] = counts.get(p, 0) + 1
            mono = "*".join(
                f"{var}{p}" + (f"^{e}" if e > 1 else "") for p, e in sorted(counts.items())
            )
            if c == 1:
                out.append(mono or "1")
            elif c == -1:
                out.append("-" + (mono or "1"))
            else:
                out.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(out)

    def __repr__(self):
        return f"SparsePolynomial({self.serialize()!r})"


def poly_add(a: SparsePolynomial, b: SparsePolynomial) -> SparsePolynomial:
    return a + b


def poly_equal(a: SparsePolynomial, b: SparsePolynomial) -> bool:
    return a == b


def poly_serialize(p: SparsePolynomial) -> str:
    return p.serialize()


class TruncatedMonomialPolynomial:
    """Polynomial in ``x_1..x_m``, stored as ``{exponent tuple: coeff}``."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[tuple, int] | None = None):
        self.m = m
        self.terms = {tuple(k): c for k, c in (terms or {}).items() if c}
        for k in self.terms:
            if len(k) != m:
                raise ValueError(f"exponent vector {k} has wrong length for m={m}")

    def __eq__(self, other):
        if not isinstance(other, TruncatedMonomialPolynomial):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __repr__(self):
        return f"TruncatedMonomialPolynomial(m={self.m}, terms={self.terms!r})"


# ---------------------------------------------------------------------------


def components_partition(t: Tree, f: Iterable[Sequence[int]]) -> Partition:
    """Partition of ``t.order`` given by component sizes of the spanning
    subgraph with edge set ``f``."""
    edge_set = set(t.edges)
    parent = list(range(t.order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in f:
        u, v = sorted(e)
        if (u, v) not in edge_set:
            raise EdgeNotInTree(f"edge {u}-{v} not in tree")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    sizes: dict[int, int] = {}
    for v in range(t.order):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return as_partition(sizes.values())


def _rooted_layout(t: Tree) -> tuple[list[int], list[int], list[int]]:
    """BFS order from vertex 0, parent of each vertex, and for each
    non-root vertex the index (into ``t.edges``) of its parent edge."""
    index = {e: i for i, e in enumerate(t.edges)}
    parent = [-1] * t.order
    parent[0] = 0
    order = [0]
    for v in order:
        for w in t.adj[v]:
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    pedge = [-1] * t.order
    for v in order[1:]:
        u = parent[v]
        pedge[v] = index[(u, v) if u < v else (v, u)]
    return order, parent, pedge


def edge_subset_partitions(t: Tree) -> Iterator[tuple[int, Partition]]:
    """Yield ``(|F|, lambda[F])`` for every subset ``F`` of the edges.

    Subsets are visited as a binary counter over ``t.edges``.  Component
    sizes are recomputed from scratch for each subset by folding every
    vertex into its parent (when the parent edge is kept) in reverse BFS
    order.
    """
    order, parent, pedge = _rooted_layout(t)
    leaves_up = [(v, parent[v], 1 << pedge[v]) for v in reversed(order[1:])]
    root = order[0]
    n = t.order
    for mask in range(1 << (n - 1)):
        size = [1] * n
        parts = []
        for v, p, bit in leaves_up:
            if mask & bit:
                size[p] += size[v]
            else:
                parts.append(size[v])
        parts.append(size[root])
        parts.sort(reverse=True)
        yield mask.bit_count(), tuple(parts)


def csf_power_sum(t: Tree, max_order: int = CSF_MAX_ORDER) -> SparsePolynomial:
    """Chromatic symmetric function of ``t`` in the power-sum basis.

    ``X_T = sum over edge subsets F of (-1)^|F| p_{lambda[F]}``, computed by
    visiting all ``2^(n-1)`` subsets.
    """
    if t.order > max_order:
        raise BoundExceeded("csf_power_sum", t.order, max_order)
    acc: dict[Partition, int] = {}
    for size, lam in edge_subset_partitions(t):
        acc[lam] = acc.get(lam, 0) + (-1 if size & 1 else 1)
    return SparsePolynomial._raw({k: c for k, c in acc.items() if c})


def csf_by_colorings(
    t: Tree, m: int, max_order: int = COLORING_MAX_ORDER
) -> TruncatedMonomialPolynomial:
    """Chromatic symmetric function truncated to colours ``1..m``, by
    summing ``x^content`` over every proper colouring."""
    if m < 1:
        raise ValueError("need at least one colour")
    if t.order > max_order:
        raise BoundExceeded("csf_by_colorings", t.order, max_order)
    acc: dict[tuple, int] = {}
    for colors in itertools.product(range(m), repeat=t.order):
        if any(colors[u] == colors[v] for u, v in t.edges):
            continue
        content = [0] * m
        for c in colors:
            content[c] += 1
        key = tuple(content)
        acc[key] = acc.get(key, 0) + 1
    return TruncatedMonomialPolynomial(m, acc)


def power_sums_to_monomials(p: SparsePolynomial, m: int) -> TruncatedMonomialPolynomial:
    """Expand ``sum c_lam p_lam`` into monomials of ``x_1..x_m``
    (all other variables set to zero)."""
    acc: dict[tuple, int] = {}
    for lam, c in p.items():
        cur = {(0,) * m: 1}
        for k in lam:
            nxt: dict[tuple, int] = {}
            for expo, cc in cur.items():
                for i in range(m):
                    e = list(expo)
                    e[i] += k
                    e = tuple(e)
                    nxt[e] = nxt.get(e, 0) + cc
            cur = nxt
        for expo, cc in cur.items():
            acc[expo] = acc.get(expo, 0) + c * cc
    return TruncatedMonomialPolynomial(m, acc)


def csf_from_upoly(u: SparsePolynomial, n: int) -> SparsePolynomial:
    """Turn the U-polynomial of a tree of order ``n`` into its chromatic
    symmetric function by substituting ``x_k -> -p_k`` and multiplying by
    ``(-1)^n``."""
    out = {}
    for lam, c in u.items():
        if sum(lam) != n:
            raise WeightMismatch(f"term {list(lam)} has weight {sum(lam)}, expected {n}")
        out[lam] = c * (-1) ** (len(lam) + n)
    return SparsePolynomial._raw(out)
