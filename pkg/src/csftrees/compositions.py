"""Integer compositions as a monoid under the composition product.

``a o b`` replaces each part ``a_i`` of ``a`` by the ``a_i``-fold
near-concatenation of ``b`` and concatenates the results.  This module
provides the monoid operations, refinement, the L-polynomial, the search
for non-trivial factorizations, the unique irreducible factorization and
the L-equivalence class it describes.
"""

from __future__ import annotations

import itertools
import random
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import BadExponent, BoundExceeded, HypothesisViolated, IdentityComposition
from .symfun import SparsePolynomial

__all__ = [
    "Composition",
    "Factorization",
    "concat",
    "near_concat",
    "near_concat_power",
    "compose",
    "compose_all",
    "reverse",
    "coarsenings",
    "refines",
    "l_polynomial",
    "is_trivial_factorization",
    "factor_once",
    "irreducible_factorization",
    "format_factorization",
    "parse_factorization",
    "l_equivalence_class",
    "compositions_of",
    "check_lemma4_shape",
    "is_all_ones",
    "is_palindrome",
]

L_POLY_MAX_LENGTH = 30
COMPOSITIONS_MAX_WEIGHT = 24


class Composition(tuple):
    """A nonempty tuple of positive ints.

    Compares and hashes like a tuple; ``str`` gives the space-separated text
    form ``"4 10 4 10"`` and :meth:`parse` reads it back.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if min(parts) < 1:
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        try:
            return cls(int(s) for s in text.replace(",", " ").split())
        except ValueError as exc:
            raise ValueError(f"cannot parse composition {text!r}: {exc}") from None

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __str__(self):
        return " ".join(map(str, self))

    def __repr__(self):
        return f"Composition({tuple(self)!r})"


Factorization = list  # list[Composition], composed left to right

ONE = Composition((1,))


def _c(a) -> Composition:
    return a if isinstance(a, Composition) else Composition(a)


def concat(a: Sequence[int], b: Sequence[int]) -> Composition:
    return Composition(tuple(a) + tuple(b))


def near_concat(a: Sequence[int], b: Sequence[int]) -> Composition:
    """Concatenate and merge the two adjoining parts."""
    a, b = _c(a), _c(b)
    return Composition(a[:-1] + (a[-1] + b[0],) + b[1:])


def near_concat_power(a: Sequence[int], k: int) -> Composition:
    if k < 1:
        raise BadExponent(f"near-concatenation power must be >= 1, got {k}")
    a = _c(a)
    if len(a) == 1:
        return Composition((k * a[0],))
    middle = a[1:-1] + (a[-1] + a[0],)
    return Composition(a[:-1] + (a[-1] + a[0],) + middle * (k - 2) + a[1:]) if k > 1 else a


def compose(a: Sequence[int], b: Sequence[int]) -> Composition:
    """The monoid product ``a o b``; ``(1)`` is the two-sided identity."""
    a, b = _c(a), _c(b)
    out: tuple = ()
    for k in a:
        out += near_concat_power(b, k)
    return Composition(out)


def compose_all(factors: Sequence[Sequence[int]]) -> Composition:
    return reduce(compose, factors, ONE)


def reverse(a: Sequence[int]) -> Composition:
    return Composition(tuple(a)[::-1])


def is_all_ones(a: Sequence[int]) -> bool:
    return all(p == 1 for p in a)


def is_palindrome(a: Sequence[int]) -> bool:
    return tuple(a) == tuple(a)[::-1]


def coarsenings(a: Sequence[int]) -> Iterator[Composition]:
    """Every composition obtained by merging runs of consecutive parts.

    There are ``2^(len(a)-1)`` of them, one per set of kept boundaries,
    yielded in lexicographic order of the kept-boundary bit vector (so ``a``
    itself comes first and the single part ``(weight,)`` last).
    """
    a = _c(a)
    gaps = len(a) - 1
    for merge in itertools.product((False, True), repeat=gaps):
        parts = [a[0]]
        for i, m in enumerate(merge):
            if m:
                parts[-1] += a[i + 1]
            else:
                parts.append(a[i + 1])
        yield Composition(parts)


def refines(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when ``a`` is obtained by subdividing parts of ``b``."""
    a, b = tuple(a), tuple(b)
    if sum(a) != sum(b):
        return False
    i = 0
    for target in b:
        run = 0
        while run < target and i < len(a):
            run += a[i]
            i += 1
        if run != target:
            return False
    return i == len(a)


def l_polynomial(a: Sequence[int], max_length: int = L_POLY_MAX_LENGTH) -> SparsePolynomial:
    """Sum over coarsenings ``b`` of ``a`` of the monomial ``x_{b_1} x_{b_2} ...``."""
    a = _c(a)
    if len(a) > max_length:
        raise BoundExceeded("l_polynomial", len(a), max_length)
    acc: dict[tuple, int] = {}
    for b in coarsenings(a):
        key = tuple(sorted(b, reverse=True))
        acc[key] = acc.get(key, 0) + 1
    return SparsePolynomial._raw(acc)


def is_trivial_factorization(e: Sequence[int], h: Sequence[int]) -> bool:
    """A factorization ``e o h`` is trivial if a factor is ``(1)``, both
    factors have one part, or both factors are all ones."""
    e, h = tuple(e), tuple(h)
    return (
        e == (1,)
        or h == (1,)
        or (len(e) == 1 and len(h) == 1)
        or (is_all_ones(e) and is_all_ones(h))
    )


def _parse_blocks(a: tuple, eta: tuple) -> tuple | None:
    # read a as eta^{.k1} . eta^{.k2} . ... ; return (k1, k2, ...) or None
    L = len(eta)
    if L == 1:
        t = eta[0]
        if any(p % t for p in a):
            return None
        return tuple(p // t for p in a)
    head, last = eta[:-1], eta[-1]
    merged = last + eta[0]
    inner = eta[1:-1]
    ks = []
    i, n = 0, len(a)
    while i < n:
        if a[i : i + L - 1] != head:
            return None
        i += L - 1
        k = 1
        while True:
            if i >= n:
                return None
            if a[i] == last:
                i += 1
                break
            if a[i] == merged and a[i + 1 : i + 1 + len(inner)] == inner:
                i += 1 + len(inner)
                k += 1
                continue
            return None
        ks.append(k)
    return tuple(ks)


def factor_once(a: Sequence[int]) -> list[tuple[Composition, Composition]]:
    """All non-trivial pairs ``(e, h)`` with ``e o h == a``.

    The right factor ``h`` must agree with ``a`` on all but its last part,
    and its last part cannot exceed the matching part of ``a``; each
    candidate is tried by parsing ``a`` greedily into blocks of
    near-concatenation powers of ``h``.
    """
    a = _c(a)
    found = []
    for m in range(1, len(a) + 1):
        for t in range(1, a[m - 1] + 1):
            eta = a[: m - 1] + (t,)
            ks = _parse_blocks(tuple(a), eta)
            if ks is None:
                continue
            e, h = Composition(ks), Composition(eta)
            if is_trivial_factorization(e, h):
                continue
            if compose(e, h) != a:  # pragma: no cover - guards the parser
                raise AssertionError(f"bad factor parse {e} o {h} != {a}")
            found.append((e, h))
    return found


def _normalize(factors: list[Composition]) -> list[Composition]:
    out: list[Composition] = []
    for f in factors:
        if f == ONE:
            continue
        out.append(f)
        while len(out) >= 2:
            x, y = out[-2], out[-1]
            if len(x) == 1 and len(y) == 1:
                merged = Composition((x[0] * y[0],))
            elif is_all_ones(x) and is_all_ones(y):
                merged = Composition((1,) * (len(x) * len(y)))
            else:
                break
            out[-2:] = [merged]
    return out


def irreducible_factorization(
    a: Sequence[int], rng: random.Random | None = None
) -> Factorization:
    """The unique irreducible factorization of ``a``.

    ``a`` is split recursively at any non-trivial factorization (the first
    one found, or a random one when ``rng`` is given) and adjacent trivial
    pairs are then merged.  The result does not depend on the choices.
    """
    a = _c(a)
    if a == ONE:
        raise IdentityComposition("(1) is the identity and has no factorization")

    def split(c: Composition) -> list[Composition]:
        pairs = factor_once(c)
        if not pairs:
            return [c]
        e, h = rng.choice(pairs) if rng else pairs[0]
        return split(e) + split(h)

    return _normalize(split(a))


def format_factorization(factors: Sequence[Sequence[int]]) -> str:
    return " o ".join(str(_c(f)) for f in factors)


def parse_factorization(text: str) -> Factorization:
    return [Composition.parse(chunk) for chunk in text.split(" o ")]


def l_equivalence_class(a: Sequence[int]) -> set[Composition]:
    """Compositions with the same L-polynomial as ``a``, obtained by
    reversing any subset of the irreducible factors in place."""
    factors = irreducible_factorization(a)
    choices = [sorted({f, reverse(f)}) for f in factors]
    return {compose_all(pick) for pick in itertools.product(*choices)}


def compositions_of(n: int, max_weight: int = COMPOSITIONS_MAX_WEIGHT) -> Iterator[Composition]:
    """All ``2^(n-1)`` compositions of ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_weight:
        raise BoundExceeded("compositions_of", n, max_weight)

    def rec(rest: int) -> Iterator[tuple]:
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in rec(rest - first):
                yield (first,) + tail

    for parts in rec(n):
        yield Composition(parts)


def check_lemma4_shape(g: Sequence[int], h: int, q: int) -> bool:
    """Check that ``g`` is irreducible or factors as ``(1^m) o w`` with ``w``
    irreducible.

    Requires ``q >= 2``, ``h`` nonzero mod ``q``, every part of ``g``
    congruent to ``h`` mod ``q``, and the parts of ``g`` coprime.
    """
    g = _c(g)
    if q < 2:
        raise HypothesisViolated(f"q must be >= 2, got {q}")
    h %= q
    if h == 0:
        raise HypothesisViolated(f"q={q} divides h")
    if any(p % q != h for p in g):
        raise HypothesisViolated(f"parts of {g} are not all {h} mod {q}")
    if reduce(gcd, g) != 1:
        raise HypothesisViolated(f"parts of {g} are not coprime")
    if g == ONE:
        return True
    factors = irreducible_factorization(g)
    if len(factors) == 1:
        return True
    return len(factors) == 2 and is_all_ones(factors[0])
