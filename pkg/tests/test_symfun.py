import json

import pytest
from hypothesis import given, strategies as st

from csftrees.errors import BoundExceeded, EdgeNotInTree, WeightMismatch
from csftrees.symfun import (
    SparsePolynomial,
    TruncatedMonomialPolynomial,
    components_partition,
    csf_by_colorings,
    csf_from_upoly,
    csf_power_sum,
    edge_subset_partitions,
    poly_add,
    poly_equal,
    poly_serialize,
    power_sums_to_monomials,
)
from csftrees.trees import canonical_code, enumerate_trees, path_tree, relabel, star_tree, tree_from_edges
from csftrees.upoly import upoly_naive

from oracles import brute_csf

P = SparsePolynomial


def test_components_partition_p3():
    t = path_tree(3)
    assert components_partition(t, []) == (1, 1, 1)
    assert components_partition(t, [(0, 1)]) == (2, 1)
    assert components_partition(t, [(1, 2), (0, 1)]) == (3,)
    with pytest.raises(EdgeNotInTree):
        components_partition(t, [(0, 2)])


def test_edge_subset_partitions_matches_union_find():
    for t in enumerate_trees(7):
        for mask, (size, lam) in enumerate(edge_subset_partitions(t)):
            f = [e for i, e in enumerate(t.edges) if mask >> i & 1]
            assert size == len(f)
            assert lam == components_partition(t, f)
            assert len(lam) == t.order - len(f)


def test_csf_small_examples():
    assert csf_power_sum(path_tree(1)) == P({(1,): 1})
    assert csf_power_sum(path_tree(2)) == P({(1, 1): 1, (2,): -1})
    # P3 value computed by the itertools.combinations oracle
    assert brute_csf(path_tree(3)) == {(1, 1, 1): 1, (2, 1): -2, (3,): 1}
    assert csf_power_sum(path_tree(3)) == P({(1, 1, 1): 1, (2, 1): -2, (3,): 1})


def test_csf_bound():
    with pytest.raises(BoundExceeded):
        csf_power_sum(path_tree(6), max_order=5)


@pytest.mark.parametrize("n", range(1, 9))
def test_csf_matches_subset_oracle(n):
    for t in enumerate_trees(n):
        assert csf_power_sum(t) == P(brute_csf(t))


@pytest.mark.parametrize("n", range(1, 11))
def test_csf_invariants(n):
    for t in enumerate_trees(n):
        x = csf_power_sum(t)
        assert x.weights() == {n}
        assert x.coefficient((1,) * n) == 1
        if n >= 2:
            assert x.total() == 0


def test_csf_by_colorings_examples():
    assert csf_by_colorings(path_tree(1), 2) == TruncatedMonomialPolynomial(2, {(1, 0): 1, (0, 1): 1})
    assert csf_by_colorings(path_tree(2), 2) == TruncatedMonomialPolynomial(2, {(1, 1): 2})
    with pytest.raises(BoundExceeded):
        csf_by_colorings(path_tree(9), 2)


def test_csf_by_colorings_p3_matches_power_sums():
    x = csf_power_sum(path_tree(3))
    assert csf_by_colorings(path_tree(3), 3) == power_sums_to_monomials(x, 3)


def test_power_sum_expansion_small():
    # p_2 in two variables is x1^2 + x2^2; p_{1,1} is (x1 + x2)^2
    assert power_sums_to_monomials(P({(2,): 1}), 2).terms == {(2, 0): 1, (0, 2): 1}
    assert power_sums_to_monomials(P({(1, 1): 1}), 2).terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_csf_from_upoly_examples():
    u2 = P({(1, 1): 1, (2,): 1})
    assert csf_from_upoly(u2, 2) == P({(1, 1): 1, (2,): -1})
    u3 = upoly_naive(path_tree(3))
    assert csf_from_upoly(u3, 3) == P({(1, 1, 1): 1, (2, 1): -2, (3,): 1})
    with pytest.raises(WeightMismatch):
        csf_from_upoly(P({(2, 1): 1}), 4)


def test_poly_plumbing():
    p = P({(1, 1): 1, (2,): -1})
    assert not poly_add(p, -p)
    assert poly_serialize(p) == "1*[1,1] + -1*[2]"
    assert poly_serialize(P()) == "0"
    p4 = path_tree(4)
    assert poly_equal(csf_power_sum(p4), csf_power_sum(relabel(p4, [3, 1, 0, 2])))


def test_poly_arithmetic():
    a = P({(2,): 1, (1, 1): 3})
    b = P({(2,): -1, (3,): 2})
    assert a + b == P({(1, 1): 3, (3,): 2})
    assert a - a == P()
    assert a * P({(1,): 1}) == P({(2, 1): 1, (1, 1, 1): 3})
    assert 2 * a == P({(2,): 2, (1, 1): 6})
    assert a * 0 == P()
    assert P([((1, 2), 1), ((2, 1), 1)]) == P({(2, 1): 2})
    assert hash(a) == hash(P({(1, 1): 3, (2,): 1}))


partitions = st.lists(st.integers(1, 6), min_size=1, max_size=5).map(lambda xs: tuple(sorted(xs, reverse=True)))
polys = st.dictionaries(partitions, st.integers(-20, 20), max_size=6).map(P)


@given(polys)
def test_serialize_round_trip(p):
    assert P.parse(p.serialize()) == p
    assert P.from_json(json.dumps(p.to_json())) == p


@given(polys, polys, polys)
def test_add_is_associative_and_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a


def test_serialize_is_sorted():
    p = P({(3,): 1, (1, 1, 1): 1, (2, 1): 2})
    assert p.serialize() == "1*[1,1,1] + 2*[2,1] + 1*[3]"
    assert [t["partition"] for t in p.to_json()["terms"]] == [[1, 1, 1], [2, 1], [3]]


def test_csf_distinguishes_trees_up_to_order_9():
    for n in range(1, 10):
        trees = list(enumerate_trees(n))
        assert len({csf_power_sum(t) for t in trees}) == len(trees)
