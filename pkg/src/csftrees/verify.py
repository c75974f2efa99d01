"""Exhaustive desk-scale verification runs.

Each ``verify_*`` function sweeps a finite family, checks an identity on
every member, and returns a :class:`Report` whose text form is one line per
order plus a final verdict.  A failing report carries enough detail (trees,
compositions, polynomials) to serve as a counterexample certificate.
"""

from __future__ import annotations

import random
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Callable, Sequence

from .caterpillars import (
    CATERPILLAR_MAX_ORDER,
    enumerate_proper_q_caterpillars,
    is_proper_q_caterpillar_prop1,
    is_proper_q_caterpillar_structural,
    phi,
    qualifying_compositions,
    tau,
)
from .compositions import (
    Composition,
    check_lemma4_shape,
    compose,
    is_palindrome,
    irreducible_factorization,
    l_polynomial,
    reverse,
)
from .errors import BoundExceeded
from .symfun import csf_from_upoly, csf_power_sum
from .trees import enumerate_trees, format_tree
from .upoly import restrict_min_part, upoly_naive, upoly_tree_dp

__all__ = [
    "Report",
    "verify_theorem1",
    "verify_lemma3_sweep",
    "verify_eq3",
    "verify_prop1",
    "theorem1_factor_certificate",
]

TREE_SWEEP_MAX_ORDER = 14


@dataclass
class Report:
    name: str
    params: dict
    lines: list[str] = field(default_factory=list)
    passed: bool = True
    violations: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        head = " ".join(f"{k}={v}" for k, v in self.params.items())
        out = list(self.lines)
        for v in self.violations:
            out.append("violation: " + "; ".join(f"{k}={val}" for k, val in v.items()))
        out.append(f"{self.name} {head} {verdict}")
        return "\n".join(out) + "\n"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "lines": self.lines,
            "violations": self.violations,
            "summary": self.summary,
        }


def _pmap(fn: Callable, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _partition_of(keys: Sequence, items: Sequence) -> list[tuple]:
    groups: dict = defaultdict(list)
    for k, it in zip(keys, items):
        groups[k].append(it)
    return sorted(tuple(sorted(g)) for g in groups.values())


def theorem1_factor_certificate(a: Sequence[int], q: int) -> bool:
    """Check the factorization shape that forces ``[a]_L = {a, a*}`` for ``a = phi(T)``.

    With ``d`` the gcd of the parts, ``a / d`` must be irreducible or
    ``(1^m) o w`` (parts are ``h`` mod ``q`` with ``d*h = 1`` mod ``q``), and
    the irreducible factorization of ``a`` has at most one non-palindromic
    factor.
    """
    a = Composition(a)
    d = reduce(gcd, a)
    if d == 1:
        ok = a == (1,) or check_lemma4_shape(a, 1, q)
    else:
        eps = Composition(p // d for p in a)
        if compose(eps, (d,)) != a:
            return False
        h = pow(d, -1, q)
        ok = eps == (1,) or check_lemma4_shape(eps, h, q)
    if not ok:
        return False
    factors = irreducible_factorization(a) if a != (1,) else []
    return sum(1 for f in factors if not is_palindrome(f)) <= 1


def verify_theorem1(
    q: int,
    max_order: int,
    csf_max_order: int = 14,
    samples: int = 50,
    seed: int = 0,
    threads: int = 1,
) -> Report:
    """Check that grouping proper q-caterpillar compositions by L-polynomial
    only ever pairs a composition with its reverse.

    For orders up to ``csf_max_order`` the grouping is recomputed from the
    restricted U-polynomial and from the full chromatic symmetric function
    of ``tau(a)``; all three must give the same partition.  ``samples``
    random larger instances re-check U-restriction against L.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    if max_order > CATERPILLAR_MAX_ORDER:
        raise BoundExceeded("verify_theorem1", max_order, CATERPILLAR_MAX_ORDER)
    rep = Report("theorem1", {"q": q, "max_order": max_order})
    total = 0
    for n in range(1, max_order + 1):
        comps = list(qualifying_compositions(n, q))
        total += len(comps)
        polys = _pmap(l_polynomial, comps, threads)
        groups: dict = defaultdict(list)
        for a, p in zip(comps, polys):
            groups[p].append(a)
        ok = True
        for p, members in groups.items():
            a = members[0]
            if set(members) != {a, reverse(a)}:
                ok = False
                rep.violations.append(
                    {"n": n, "compositions": " | ".join(map(str, members)), "poly": p.serialize()}
                )
        for a, good in zip(comps, _pmap(lambda c: theorem1_factor_certificate(c, q), comps, threads)):
            if not good:
                ok = False
                rep.violations.append({"n": n, "factor_shape": str(a)})
        sizes = [len(set(m)) for m in groups.values()]
        rep.lines.append(
            f"q={q} n={n} classes={len(groups)} max_class={max(sizes, default=0)} "
            + ("PASS" if ok else "FAIL")
        )
        rep.passed &= ok

    # cross-check the L-grouping against U-restriction and the CSF
    small = [a for n in range(1, min(csf_max_order, max_order) + 1)
             for a in qualifying_compositions(n, q)]
    by_order: dict = defaultdict(list)
    for a in small:
        by_order[sum(a)].append(a)
    agree = True
    for n, comps in sorted(by_order.items()):
        trees = [tau(a, q) for a in comps]
        lp = [l_polynomial(a) for a in comps]
        up = _pmap(lambda t: restrict_min_part(upoly_tree_dp(t), q), trees, threads)
        cs = _pmap(csf_power_sum, trees, threads)
        if not (_partition_of(lp, comps) == _partition_of(up, comps) == _partition_of(cs, comps)):
            agree = False
            rep.violations.append({"n": n, "crosscheck": "partitions differ"})
        for a, u, l in zip(comps, up, lp):
            if u != l:
                agree = False
                rep.violations.append({"n": n, "lemma3": str(a), "u": u.serialize(), "l": l.serialize()})
    rep.lines.append(
        f"crosscheck orders<={min(csf_max_order, max_order)} instances={len(small)} "
        + ("PASS" if agree else "FAIL")
    )
    rep.passed &= agree

    large = [a for n in range(csf_max_order + 1, max_order + 1)
             for a in qualifying_compositions(n, q)]
    pick = random.Random(seed).sample(large, min(samples, len(large)))
    checks = _pmap(lambda a: restrict_min_part(upoly_tree_dp(tau(a, q)), q) == l_polynomial(a),
                   pick, threads)
    sample_ok = all(checks)
    for a, good in zip(pick, checks):
        if not good:
            rep.violations.append({"sample": str(a), "lemma3": "mismatch"})
    rep.lines.append(f"sample instances={len(pick)} seed={seed} " + ("PASS" if sample_ok else "FAIL"))
    rep.passed &= sample_ok
    rep.summary = {"compositions": total, "crosscheck_instances": len(small), "samples": len(pick)}
    return rep


def verify_lemma3_sweep(q: int, max_order: int, threads: int = 1) -> Report:
    """U-polynomial with ``x_1..x_q`` zeroed equals ``L(phi(T))`` for every
    proper q-caterpillar up to ``max_order``."""
    if max_order > CATERPILLAR_MAX_ORDER:
        raise BoundExceeded("verify_lemma3", max_order, CATERPILLAR_MAX_ORDER)
    rep = Report("lemma3", {"q": q, "max_order": max_order})
    by_order: dict = defaultdict(list)
    for a, t in enumerate_proper_q_caterpillars(q, max_order):
        by_order[t.order].append((a, t))

    def check(item):
        a, t = item
        comp = phi(t, q)
        lhs = restrict_min_part(upoly_tree_dp(t), q)
        return comp in (a, reverse(a)) and lhs == l_polynomial(comp), lhs

    count = 0
    for n in range(1, max_order + 1):
        items = by_order.get(n, [])
        results = _pmap(check, items, threads)
        ok = all(r[0] for r in results)
        for (a, t), (good, lhs) in zip(items, results):
            if not good:
                rep.violations.append({"tree": format_tree(t), "composition": str(a), "u_restricted": lhs.serialize()})
        count += len(items)
        rep.lines.append(f"q={q} n={n} instances={len(items)} " + ("PASS" if ok else "FAIL"))
        rep.passed &= ok
    rep.summary = {"instances": count}
    return rep


def verify_eq3(max_order: int, threads: int = 1) -> Report:
    """Converting the U-polynomial to the power-sum basis reproduces the
    chromatic symmetric function, for every tree up to ``max_order``."""
    if max_order > TREE_SWEEP_MAX_ORDER:
        raise BoundExceeded("verify_eq3", max_order, TREE_SWEEP_MAX_ORDER)
    rep = Report("eq3", {"max_order": max_order})

    def check(t):
        return csf_from_upoly(upoly_naive(t), t.order) == csf_power_sum(t)

    count = 0
    for n in range(1, max_order + 1):
        trees = list(enumerate_trees(n))
        results = _pmap(check, trees, threads)
        for t, good in zip(trees, results):
            if not good:
                rep.violations.append({"tree": format_tree(t)})
        ok = all(results)
        count += len(trees)
        rep.lines.append(f"n={n} trees={len(trees)} " + ("PASS" if ok else "FAIL"))
        rep.passed &= ok
    rep.summary = {"trees": count}
    return rep


def verify_prop1(q: int, max_order: int, threads: int = 1) -> Report:
    """The structural recogniser and the statistics-based recogniser agree
    on every tree up to ``max_order``."""
    if max_order > TREE_SWEEP_MAX_ORDER:
        raise BoundExceeded("verify_prop1", max_order, TREE_SWEEP_MAX_ORDER)
    rep = Report("prop1", {"q": q, "max_order": max_order})

    def check(t):
        return is_proper_q_caterpillar_structural(t, q), is_proper_q_caterpillar_prop1(t, q)

    total = found = 0
    for n in range(1, max_order + 1):
        trees = list(enumerate_trees(n))
        results = _pmap(check, trees, threads)
        cats = sum(1 for s, _ in results if s)
        ok = True
        for t, (s, p) in zip(trees, results):
            if s != p:
                ok = False
                rep.violations.append({"tree": format_tree(t), "structural": s, "prop1": p})
        total += len(trees)
        found += cats
        rep.lines.append(f"q={q} n={n} trees={len(trees)} caterpillars={cats} " + ("PASS" if ok else "FAIL"))
        rep.passed &= ok
    rep.summary = {"trees": total, "caterpillars": found}
    return rep
