import random
from collections import defaultdict

import pytest
from hypothesis import given, settings, strategies as st

from csftrees.compositions import (
    Composition,
    coarsenings,
    compose,
    compose_all,
    compositions_of,
    concat,
    check_lemma4_shape,
    factor_once,
    format_factorization,
    irreducible_factorization,
    is_all_ones,
    is_trivial_factorization,
    l_equivalence_class,
    l_polynomial,
    near_concat,
    near_concat_power,
    parse_factorization,
    refines,
    reverse,
)
from csftrees.errors import BadExponent, BoundExceeded, HypothesisViolated, IdentityComposition
from csftrees.symfun import SparsePolynomial

from oracles import brute_compose, brute_factor_pairs, brute_l_poly

C = Composition

comps = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(C)


def test_composition_type():
    c = C.parse("4 10 4 10")
    assert c == (4, 10, 4, 10) and c.weight == 28 and c.length == 4
    assert str(c) == "4 10 4 10"
    with pytest.raises(ValueError):
        C(())
    with pytest.raises(ValueError):
        C((2, 0))
    with pytest.raises(ValueError):
        C.parse("2 x")


def test_concat():
    assert concat((2, 1), (3,)) == (2, 1, 3)
    assert concat((1,), (1,)) == (1, 1)
    assert concat((2, 3), (2, 3)) == (2, 3, 2, 3)


def test_near_concat():
    assert near_concat((2, 3), (2, 3)) == (2, 5, 3)
    assert near_concat((1,), (1,)) == (2,)
    assert near_concat((4,), (7,)) == (11,)


def test_near_concat_power():
    assert near_concat_power((2, 3), 2) == (2, 5, 3)
    assert near_concat_power((2, 5, 1), 1) == (2, 5, 1)
    assert near_concat_power((2,), 5) == (10,)
    assert near_concat_power((1, 2, 3), 3) == (1, 2, 4, 2, 4, 2, 3)
    with pytest.raises(BadExponent):
        near_concat_power((2,), 0)


def test_compose_worked_examples():
    assert compose((2, 1), (2, 3)) == (2, 5, 3, 2, 3)
    assert compose(compose((1, 1), (2, 5)), (2,)) == (4, 10, 4, 10)


@given(comps)
def test_compose_identity(a):
    assert compose((1,), a) == a
    assert compose(a, (1,)) == a


@given(comps, comps)
def test_compose_matches_oracle_and_laws(a, b):
    c = compose(a, b)
    assert c == brute_compose(a, b)
    assert c.weight == a.weight * b.weight
    assert c.length == a.weight * (b.length - 1) + a.length


@settings(max_examples=300)
@given(comps, comps, comps)
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_compose_associative_exhaustive_small():
    small = [c for n in range(1, 5) for c in compositions_of(n)]
    for a in small:
        for b in small:
            ab = compose(a, b)
            for c in small:
                assert compose(ab, c) == compose(a, compose(b, c))


def test_reverse():
    assert reverse((2, 5)) == (5, 2)
    assert reverse((3, 1, 3)) == (3, 1, 3)


@given(comps)
def test_reverse_involution(a):
    assert reverse(reverse(a)) == a


def test_reverse_distributes_over_compose_small():
    # checked, not relied upon anywhere
    small = [c for n in range(1, 7) for c in compositions_of(n)]
    for e in small:
        for h in small:
            assert reverse(compose(e, h)) == compose(reverse(e), reverse(h))


def test_coarsenings():
    assert set(coarsenings((2, 1))) == {(2, 1), (3,)}
    assert set(coarsenings((1, 1, 1))) == {(1, 1, 1), (2, 1), (1, 2), (3,)}
    assert (2, 4, 5) in set(coarsenings((2, 3, 1, 3, 2)))
    cs = list(coarsenings((3, 1, 4, 1, 5)))
    assert len(cs) == 16 == len(set(cs))
    assert cs[0] == (3, 1, 4, 1, 5) and cs[-1] == (14,)


def test_refines():
    assert refines((2, 3, 1, 3, 2), (2, 4, 5))
    assert refines((2, 2), (2, 2))
    assert not refines((3,), (1, 2))
    assert not refines((1, 2), (2, 1))
    assert not refines((1, 1), (3,))


@pytest.mark.parametrize("n", range(1, 8))
def test_refines_agrees_with_coarsenings(n):
    all_n = list(compositions_of(n))
    for a in all_n:
        coarser = set(coarsenings(a))
        for b in all_n:
            assert refines(a, b) == (b in coarser)


def test_l_polynomial_worked_example():
    # x1 x2^3 + x1 x2 x4 + 2 x2^2 x3 + 2 x2 x5 + x3 x4 + x7
    expected = SparsePolynomial(
        {(2, 2, 2, 1): 1, (4, 2, 1): 1, (3, 2, 2): 2, (5, 2): 2, (4, 3): 1, (7,): 1}
    )
    assert l_polynomial((2, 2, 1, 2)) == expected
    assert l_polynomial((9,)) == SparsePolynomial({(9,): 1})
    assert l_polynomial((2, 1)) == SparsePolynomial({(2, 1): 1, (3,): 1})
    with pytest.raises(BoundExceeded):
        l_polynomial((1,) * 31)


@pytest.mark.parametrize("n", range(1, 10))
def test_l_polynomial_matches_refinement_oracle(n):
    for a in compositions_of(n):
        lp = l_polynomial(a)
        assert lp == SparsePolynomial(brute_l_poly(a))
        assert lp.total() == 2 ** (len(a) - 1)
        assert lp.coefficient((n,)) == 1
        assert lp.coefficient(a) >= 1
        assert lp == l_polynomial(reverse(a))


def test_trivial_factorization_cases():
    assert is_trivial_factorization((1,), (4, 2))
    assert is_trivial_factorization((2, 3), (1,))
    assert is_trivial_factorization((3,), (4,))
    assert is_trivial_factorization((1, 1), (1, 1, 1))
    assert not is_trivial_factorization((1, 1), (2, 5))
    assert not is_trivial_factorization((2,), (1, 1))


def test_factor_once_examples():
    pairs = factor_once((4, 10, 4, 10))
    assert ((1, 1), (4, 10)) in pairs
    for e, h in pairs:
        assert compose(e, h) == (4, 10, 4, 10)
    assert factor_once((2, 1)) == []
    assert factor_once((1, 1, 1, 1)) == []
    assert factor_once((6,)) == []


@pytest.mark.parametrize("n", range(1, 11))
def test_factor_once_complete(n):
    for a in compositions_of(n):
        expected = {(e, h) for e, h in brute_factor_pairs(a) if not is_trivial_factorization(e, h)}
        assert {(tuple(e), tuple(h)) for e, h in factor_once(a)} == expected


def test_factor_once_complete_on_4_10_4_10():
    expected = {(e, h) for e, h in brute_factor_pairs((4, 10, 4, 10))
                if not is_trivial_factorization(e, h)}
    assert {(tuple(e), tuple(h)) for e, h in factor_once((4, 10, 4, 10))} == expected
    assert expected == {((1, 1), (4, 10)), ((2, 5, 2, 5), (2,))}


def test_irreducible_factorization_examples():
    f = irreducible_factorization((4, 10, 4, 10))
    assert f == [(1, 1), (2, 5), (2,)]
    assert format_factorization(f) == "1 1 o 2 5 o 2"
    assert parse_factorization("1 1 o 2 5 o 2") == f
    assert irreducible_factorization((2, 1)) == [(2, 1)]
    assert irreducible_factorization((6,)) == [(6,)]
    assert irreducible_factorization((1, 1, 1, 1)) == [(1, 1, 1, 1)]
    with pytest.raises(IdentityComposition):
        irreducible_factorization((1,))


def _is_irreducible_factorization(factors):
    for f in factors:
        if f == (1,) or factor_once(f):
            return False
    for x, y in zip(factors, factors[1:]):
        if is_trivial_factorization(x, y):
            return False
    return True


@pytest.mark.parametrize("n", range(2, 11))
def test_unique_factorization(n):
    rng = random.Random(n)
    for a in compositions_of(n):
        f = irreducible_factorization(a)
        assert compose_all(f) == a
        assert _is_irreducible_factorization(f)
        for _ in range(3):
            assert irreducible_factorization(a, rng=rng) == f


def test_l_equivalence_class_examples():
    assert l_equivalence_class((4, 10, 4, 10)) == {(4, 10, 4, 10), (10, 4, 10, 4)}
    assert l_equivalence_class((3, 1, 3)) == {(3, 1, 3)}
    with pytest.raises(IdentityComposition):
        l_equivalence_class((1,))


@pytest.mark.parametrize("n", range(2, 11))
def test_l_equivalence_class_matches_l_grouping(n):
    groups = defaultdict(set)
    for a in compositions_of(n):
        groups[l_polynomial(a)].add(a)
    for members in groups.values():
        for a in members:
            cls = l_equivalence_class(a)
            assert cls == members
            assert a in cls and reverse(a) in cls


def test_compositions_of():
    assert list(compositions_of(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert list(compositions_of(1)) == [(1,)]
    assert sum(1 for _ in compositions_of(10)) == 512
    with pytest.raises(BoundExceeded):
        next(compositions_of(25))


def test_check_lemma4_shape_examples():
    assert check_lemma4_shape((3, 3, 1, 3, 3), 1, 2)
    assert check_lemma4_shape((5, 3), 1, 2)
    with pytest.raises(HypothesisViolated):
        check_lemma4_shape((2, 4), 1, 2)
    with pytest.raises(HypothesisViolated):
        check_lemma4_shape((3, 5), 2, 2)  # q divides h
    with pytest.raises(HypothesisViolated):
        check_lemma4_shape((3, 4), 1, 2)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_lemma4_shape_exhaustive(q):
    # every composition of weight <= 14 meeting the hypothesis has the shape
    from math import gcd
    from functools import reduce

    for n in range(1, 15):
        for a in compositions_of(n):
            for h in range(1, q):
                if all(p % q == h for p in a) and reduce(gcd, a) == 1:
                    assert check_lemma4_shape(a, h, q)
                    f = irreducible_factorization(a) if a != (1,) else []
                    assert len(f) <= 1 or is_all_ones(f[0])
