import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coursecluster import (ByCount, ByHeight, ByRelativeHeight, DataMatrix, Linkage,
                           RangeError, cluster_nn_chain, compare_linkages, cophenetic,
                           cut_by_count, cut_by_height, pairwise, rand_index, rank_strength)
from coursecluster.data import FeatureSet

from oracles import brute_partition_after, rand_by_enumeration


def line(*coords):
    return pairwise(FeatureSet(np.array(coords, float)[:, None],
                               [f"p{k}" for k in range(len(coords))]))


def tree(coords, linkage):
    return cluster_nn_chain(line(*coords), linkage)


def random_tree(rng, linkage, n=None):
    n = int(rng.integers(2, 25)) if n is None else n
    x = rng.normal(size=(n, int(rng.integers(1, 5))))
    return cluster_nn_chain(pairwise(FeatureSet(x, [str(i) for i in range(n)])), linkage)


def test_cut_by_count_examples():
    d = tree([0, 1, 3], Linkage.SINGLE)
    assert cut_by_count(d, 1).clusters() == [[0, 1, 2]]
    assert cut_by_count(d, 3).clusters() == [[0], [1], [2]]
    a = cut_by_count(d, 2)
    assert a.clusters() == [[0, 1], [2]]
    assert a.members() == [["p0", "p1"], ["p2"]]
    assert a.cut == ByCount(2) and a.k == 2


@pytest.mark.parametrize("k", [0, 4, -1])
def test_cut_by_count_range(k):
    with pytest.raises(RangeError):
        cut_by_count(tree([0, 1, 3], Linkage.SINGLE), k)


def test_cut_by_height_examples():
    assert cut_by_height(tree([0, 1, 3], "single"), 1.5).clusters() == [[0, 1], [2]]
    assert cut_by_height(tree([0, 1, 3], "complete"), 3).k == 1
    assert cut_by_height(tree([0, 4, 9, 15], "single"), 0).k == 4
    with pytest.raises(RangeError):
        cut_by_height(tree([0, 1, 3], "single"), -0.1)


def test_cluster_indices_follow_smallest_leaf():
    d = tree([10, 0, 11, 1], Linkage.SINGLE)
    assert cut_by_count(d, 2).cluster_of == (0, 1, 0, 1)


def test_cut_by_count_matches_brute_partition(rng):
    for _ in range(30):
        for linkage in Linkage:
            d = random_tree(rng, linkage)
            n = d.n_leaves
            for k in range(1, n + 1):
                a = cut_by_count(d, k)
                got = {frozenset(c) for c in a.clusters()}
                assert got == brute_partition_after(d.to_array(), n, n - k)
                assert sorted(i for c in a.clusters() for i in c) == list(range(n))
                assert all(a.clusters())


def test_cut_refinement_and_consistency(rng):
    for _ in range(30):
        for linkage in Linkage:
            d = random_tree(rng, linkage)
            n, h = d.n_leaves, d.heights
            levels = np.sort(np.concatenate([h, rng.uniform(0, h[-1] * 1.1, 5)]))
            for h1, h2 in zip(levels[:-1], levels[1:]):
                fine = cut_by_height(d, h1).clusters()
                coarse = [set(c) for c in cut_by_height(d, h2).clusters()]
                for c in fine:
                    assert sum(set(c) <= big for big in coarse) == 1
            for k in range(2, n):
                lo, hi = h[n - 1 - k], h[n - k]
                if lo < hi:
                    for probe in (lo, (lo + hi) / 2):
                        assert cut_by_height(d, probe).cluster_of == cut_by_count(d, k).cluster_of


def test_cophenetic_examples():
    c = cophenetic(tree([0, 1, 3], Linkage.SINGLE))
    assert (c[0, 1], c[0, 2], c[1, 2]) == (1.0, 2.0, 2.0)
    c2 = cophenetic(tree([0, 7], Linkage.COMPLETE))
    assert list(c2.condensed) == [7.0]


def test_cophenetic_max_is_root(rng):
    for linkage in Linkage:
        d = random_tree(rng, linkage)
        assert cophenetic(d).condensed.max() == d.root_height


def test_cophenetic_matches_scipy(rng):
    hierarchy = pytest.importorskip("scipy.cluster.hierarchy")
    for linkage in Linkage:
        d = random_tree(rng, linkage, n=20)
        np.testing.assert_array_equal(cophenetic(d).condensed, hierarchy.cophenet(d.to_array()))


def test_rank_strength_examples():
    m = DataMatrix([[4, 1, 3], [6, 2, 4]], ["r1", "r2"], ["A", "B", "C"])
    assert [label for label, _ in rank_strength(m)] == ["A", "C", "B"]
    assert [s for _, s in rank_strength(m)] == [10, 7, 3]
    eq = DataMatrix([[1, 1, 1]], ["r"], ["z", "b", "m"])
    assert [label for label, _ in rank_strength(eq)] == ["b", "m", "z"]
    m2 = DataMatrix([[1, 5], [2, 6]], ["r1", "r2"], ["col1", "col2"])
    assert rank_strength(m2) == [("col2", 11.0), ("col1", 3.0)]


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 3), min_size=n, max_size=n),
    st.lists(st.integers(0, 3), min_size=n, max_size=n))))
def test_rand_index_matches_enumeration(pair):
    a, b = pair
    r = rand_index(a, b)
    assert 0 <= r <= 1
    assert r == pytest.approx(rand_by_enumeration(a, b), abs=1e-15)
    assert rand_index(a, a) == 1.0


def chain4():
    return DataMatrix([[0, 1, 2.1, 3.3]], ["s1"], ["A", "B", "C", "D"])


def test_compare_chain_example():
    r = compare_linkages(chain4(), ByHeight(1.5))
    assert r.counts() == {"single": 1, "complete": 2}
    assert r.per_linkage[Linkage.COMPLETE].assignment.members() == [["A", "B"], ["C", "D"]]
    assert r.agreement == pytest.approx(2 / 6)
    assert r.strongest == ["D", "C"] and r.weakest == ["A", "B"]


def test_compare_identical_columns():
    m = DataMatrix([[2, 2, 2], [1, 1, 1]], ["s1", "s2"], ["A", "B", "C"])
    r = compare_linkages(m, ByCount(1))
    assert r.counts() == {"single": 1, "complete": 1}
    assert r.agreement == 1.0


def test_compare_all_singletons():
    r = compare_linkages(chain4(), ByCount(4))
    assert r.counts() == {"single": 4, "complete": 4}
    assert r.agreement == 1.0


def test_compare_default_cut_is_relative_per_linkage():
    r = compare_linkages(chain4())
    assert r.cut == ByRelativeHeight(0.7)
    assert r.per_linkage[Linkage.SINGLE].cut_height == pytest.approx(0.7 * 1.2)
    assert r.per_linkage[Linkage.COMPLETE].cut_height == pytest.approx(0.7 * 3.3)
    assert "0.7" in r.summary()


def test_strongest_and_weakest_are_disjoint():
    r = compare_linkages(DataMatrix([[1, 2, 3, 4, 5]], ["s"], list("abcde")))
    assert not set(r.strongest) & set(r.weakest)
    total = [label for label, _ in r.ranking]
    assert total[:len(r.strongest)] == r.strongest
    assert total[::-1][:len(r.weakest)] == r.weakest
