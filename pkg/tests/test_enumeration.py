import random
from itertools import permutations, product
from math import factorial

import networkx as nx
import pytest
from hypothesis import given

from ceitrees.degseq import all_degree_sequences
from ceitrees.enumeration import (
    UNLABELED_TREE_COUNTS,
    all_trees,
    canonical_assignment,
    labeled_tree_count,
    multiset_permutations,
    prufer_decode,
    prufer_encode,
    random_tree,
    scan_all_classes,
    scan_degree_sequence,
    tree_class_count,
    trees_with_branching,
    trees_with_degree_sequence,
)
from ceitrees.errors import BadEntry, BadR, InvalidAssignment, TooLarge, TooSmall
from ceitrees.tree import build_tree, canonical_code, path_tree, star_tree
from oracles import isomorphic_bruteforce, labeled_trees_bruteforce
from strategies import trees


class TestPrufer:
    def test_decode_star(self):
        t = prufer_decode(4, (1, 1))
        assert t == star_tree(4)

    def test_decode_p2(self):
        assert prufer_decode(2, ()) == path_tree(2)

    def test_encode_examples(self):
        assert prufer_encode(path_tree(4)) == (2, 3)
        assert prufer_encode(star_tree(4)) == (1, 1)

    @pytest.mark.parametrize("n, seq", [(4, (1, 5)), (4, (0, 1)), (4, (1,)), (3, (1, 1))])
    def test_bad_entry(self, n, seq):
        with pytest.raises(BadEntry):
            prufer_decode(n, seq)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_exhaustive_roundtrip(self, n):
        seen = set()
        for seq in product(range(1, n + 1), repeat=n - 2):
            t = prufer_decode(n, seq)
            assert prufer_encode(t) == seq
            seen.add(t)
        assert len(seen) == n ** (n - 2)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_decode_covers_every_labeled_tree(self, n):
        expected = {build_tree(n, edges) for edges in labeled_trees_bruteforce(n)}
        decoded = {prufer_decode(n, s) for s in product(range(1, n + 1), repeat=n - 2)}
        assert decoded == expected

    @given(trees(max_n=64))
    def test_random_roundtrip(self, t):
        code = prufer_encode(t)
        assert prufer_decode(t.n, code) == t
        for u in t.vertices:
            assert code.count(u) == t.degree(u) - 1


def test_random_tree_is_deterministic():
    a = [random_tree(9, random.Random(5)) for _ in range(2)]
    assert a[0] == a[1]


class TestCounts:
    def test_examples(self):
        assert labeled_tree_count((2, 2, 1, 1)) == 2
        assert labeled_tree_count((3, 3, 2, 1, 1, 1, 1)) == 30
        for n in range(2, 12):
            assert labeled_tree_count((n - 1,) + (1,) * (n - 1)) == 1

    def test_big_values_do_not_overflow(self):
        n = 60
        assert labeled_tree_count((2,) * (n - 2) + (1, 1)) == factorial(58)
        assert factorial(58) > 2**64


class TestMultisetPermutations:
    @pytest.mark.parametrize("items", [(), (1,), (1, 1, 2), (1, 2, 2, 3, 3, 3), (4, 1, 4, 2, 1)])
    def test_matches_itertools(self, items):
        expected = sorted(set(permutations(items)))
        assert list(multiset_permutations(items)) == expected

    def test_ranges_partition_the_stream(self):
        items = (1, 1, 2, 3, 3, 4)
        full = list(multiset_permutations(items))
        cuts = [0, 7, 8, 50, 101, len(full)]
        pieces = [
            p for lo, hi in zip(cuts, cuts[1:]) for p in multiset_permutations(items, lo, hi)
        ]
        assert pieces == full


class TestDegreeStreams:
    def test_two_paths(self):
        ts = list(trees_with_degree_sequence((2, 2, 1, 1)))
        assert len(ts) == 2
        assert len({canonical_code(t) for t in ts}) == 1
        for t in ts:
            assert t.degrees == (2, 2, 1, 1)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_star_stream(self, n):
        assert len(list(trees_with_degree_sequence((n - 1,) + (1,) * (n - 1)))) == 1

    def test_3321111(self):
        ts = list(trees_with_degree_sequence((3, 3, 2, 1, 1, 1, 1)))
        assert len(ts) == 30 and len(set(ts)) == 30
        # the degree-2 vertex either sits between the two 3s or at a spine end
        assert len({canonical_code(t) for t in ts}) == 2

    def test_fixed_assignment(self):
        amap = {1: 1, 2: 2, 3: 1, 4: 2}
        ts = list(trees_with_degree_sequence((2, 2, 1, 1), amap))
        assert len(ts) == 2
        for t in ts:
            assert t.degrees == (1, 2, 1, 2)

    @pytest.mark.parametrize(
        "amap", [{1: 2, 2: 2, 3: 1}, {1: 3, 2: 1, 3: 1, 4: 1}, {0: 2, 1: 2, 2: 1, 3: 1}]
    )
    def test_invalid_assignment(self, amap):
        with pytest.raises(InvalidAssignment):
            list(trees_with_degree_sequence((2, 2, 1, 1), amap))

    @pytest.mark.parametrize("n", range(2, 10))
    def test_stream_length_is_labeled_count(self, n):
        for d in all_degree_sequences(n):
            ts = list(trees_with_degree_sequence(d))
            assert len(ts) == labeled_tree_count(d)
            amap = canonical_assignment(d)
            assert all(t.degree(u) == amap[u] for t in ts for u in t.vertices)

    def test_labeled_count_matches_bruteforce(self):
        for n in range(2, 7):
            for d in all_degree_sequences(n):
                brute = sum(
                    1
                    for edges in labeled_trees_bruteforce(n)
                    if build_tree(n, edges).degrees == d.degrees
                )
                assert brute == labeled_tree_count(d)


class TestAllTrees:
    @pytest.mark.parametrize("n", range(2, 10))
    def test_class_counts(self, n):
        assert tree_class_count(n) == UNLABELED_TREE_COUNTS[n - 1]
        assert tree_class_count(n) == sum(1 for _ in nx.nonisomorphic_trees(n))

    def test_n1(self):
        assert tree_class_count(1) == 1

    def test_n4(self):
        codes = {canonical_code(t) for _, t in all_trees(4)}
        assert codes == {canonical_code(path_tree(4)), canonical_code(star_tree(4))}

    def test_representatives_match_codes(self):
        for code, t in all_trees(8):
            assert canonical_code(t) == code

    def test_sorted_by_code(self):
        codes = [c for c, _ in all_trees(7)]
        assert codes == sorted(codes)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            list(all_trees(11))
        with pytest.raises(TooSmall):
            list(all_trees(1))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_prufer_method_agrees(self, n):
        assert scan_all_classes(n, method="prufer").classes == scan_all_classes(n).classes
        assert scan_all_classes(n, method="prufer").labeled_count == n ** (n - 2)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_dedupe_matches_bruteforce_isomorphism(self, n):
        labeled = [prufer_decode(n, s) for s in product(range(1, n + 1), repeat=n - 2)]
        sample = labeled[:: max(1, len(labeled) // 120)]
        for a in sample:
            for b in sample:
                same = canonical_code(a) == canonical_code(b)
                assert same == isomorphic_bruteforce(a, b)


class TestParallel:
    def test_degree_scan_independent_of_jobs(self):
        d = (2,) * 7 + (1, 1)
        one = scan_degree_sequence(d, jobs=1)
        four = scan_degree_sequence(d, jobs=4)
        assert one == four
        assert one.labeled_count == labeled_tree_count(d)

    def test_prufer_scan_independent_of_jobs(self):
        one = scan_all_classes(7, jobs=1, method="prufer")
        three = scan_all_classes(7, jobs=3, method="prufer")
        assert one == three


class TestBranching:
    def test_n6_r2(self):
        ts = list(trees_with_branching(6, 2))
        assert len(ts) == 1
        assert ts[0].degree_sequence() == (3, 3, 1, 1, 1, 1)

    def test_n5_r1(self):
        ts = list(trees_with_branching(5, 1))
        degs = sorted(t.degree_sequence() for t in ts)
        # the star and the chair (spider with legs 1, 1, 2)
        assert degs == [(3, 2, 1, 1, 1), (4, 1, 1, 1, 1)]

    @pytest.mark.parametrize("n", range(2, 10))
    def test_r0_is_path(self, n):
        ts = list(trees_with_branching(n, 0))
        assert len(ts) == 1 and canonical_code(ts[0]) == canonical_code(path_tree(n))

    @pytest.mark.parametrize("n", range(2, 10))
    def test_union_over_r_is_everything(self, n):
        total = sum(len(list(trees_with_branching(n, r))) for r in range(0, n // 2))
        assert total == tree_class_count(n)

    @pytest.mark.parametrize("n, r", [(6, 3), (6, -1), (4, 2)])
    def test_bad_r(self, n, r):
        with pytest.raises(BadR):
            list(trees_with_branching(n, r))


@pytest.mark.parametrize("n", range(2, 10))
def test_every_class_reachable_from_its_degree_sequence(n):
    codes = set()
    for d in all_degree_sequences(n):
        codes |= set(scan_degree_sequence(d).classes)
    assert len(codes) == UNLABELED_TREE_COUNTS[n - 1]
