from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ceitrees.constructions import (
    b_sequence,
    b_tree,
    f_sequence,
    f_tree,
    greedy_caterpillar,
    greedy_levels,
    greedy_tree,
    level_greedy_tree,
    transform_a,
    transform_b,
)
from ceitrees.degseq import all_degree_sequences
from ceitrees.errors import BadA, BadPQ, BadR, BadVertex, InvalidLevelSequence, InvalidSequence
from ceitrees.tree import (
    branching_count,
    bfs_distances,
    build_tree,
    canonical_code,
    cei,
    diameter,
    is_caterpillar,
    path_tree,
    star_tree,
)
from oracles import cei_oracle
from strategies import tree_and_vertex


def same_shape(a, b):
    return canonical_code(a) == canonical_code(b)


def all_sequences(max_n):
    return [d for n in range(2, max_n + 1) for d in all_degree_sequences(n)]


class TestGreedyCaterpillar:
    @pytest.mark.parametrize("n", range(2, 10))
    def test_path(self, n):
        d = (2,) * (n - 2) + (1, 1)
        assert same_shape(greedy_caterpillar(d), path_tree(n))

    @pytest.mark.parametrize("n", range(3, 10))
    def test_star(self, n):
        assert same_shape(greedy_caterpillar((n - 1,) + (1,) * (n - 1)), star_tree(n))

    def test_ends_get_large_degrees(self):
        t = greedy_caterpillar((3, 3, 2, 1, 1, 1, 1))
        # spine is 1-2-3; two pendants at each end, none in the middle
        assert [t.degree(u) for u in (1, 2, 3)] == [3, 2, 3]
        assert t.neighbors(2) == (1, 3)

    def test_assignment_is_monotone_in_spine_eccentricity(self):
        for d in all_sequences(10):
            t = greedy_caterpillar(d)
            k = sum(1 for x in d if x > 1)
            if k < 2:
                continue
            spine_ecc = [max(i, k - 1 - i) for i in range(k)]
            for i in range(k):
                for j in range(k):
                    if spine_ecc[i] > spine_ecc[j]:
                        assert t.degree(i + 1) >= t.degree(j + 1)

    def test_rejects_invalid(self):
        with pytest.raises(InvalidSequence):
            greedy_caterpillar((3, 3, 3, 1, 1, 1))

    @pytest.mark.parametrize("d", all_sequences(9), ids=str)
    def test_degree_multiset_and_shape(self, d):
        t = greedy_caterpillar(d)
        assert t.degree_sequence() == d.degrees
        assert is_caterpillar(t)
        k = sum(1 for x in d if x > 1)
        if k >= 2:
            assert diameter(t) == k + 1


class TestLevelGreedy:
    def test_p5_rooted_at_centre(self):
        t, root = level_greedy_tree([[2], [2, 2], [1, 1]])
        assert same_shape(t, path_tree(5))
        assert max(bfs_distances(t, root)) == 2

    @pytest.mark.parametrize("n", range(3, 9))
    def test_star(self, n):
        t, root = level_greedy_tree([[n - 1], [1] * (n - 1)])
        assert same_shape(t, star_tree(n)) and t.degree(root) == n - 1

    def test_nine_vertices(self):
        t, root = level_greedy_tree([[3], [3, 2, 2], [2, 1, 1, 1], [1]])
        # BFS labels: 2 is the degree-3 child; it carries 5, whose child 9 is
        # the only vertex at height 3.
        assert t.edges() == [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7), (4, 8), (5, 9)]
        assert root == 1
        assert cei(t) == Fraction(87, 20)

    def test_invalid(self):
        with pytest.raises(InvalidLevelSequence):
            level_greedy_tree([[3], [1, 1]])


class TestGreedyTree:
    def test_path(self):
        assert same_shape(greedy_tree((2, 2, 2, 1, 1)), path_tree(5))
        assert greedy_levels((2, 2, 2, 1, 1)).levels == ((2,), (2, 2), (1, 1))

    @pytest.mark.parametrize("n", range(2, 10))
    def test_star(self, n):
        assert same_shape(greedy_tree((n - 1,) + (1,) * (n - 1)), star_tree(n))

    def test_27_vertex_levels(self):
        d = (4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 2, 2) + (1,) * 15
        assert greedy_levels(d).levels == (
            (4,),
            (4, 4, 3, 3),
            (3, 3, 3, 3, 3, 2, 2, 1, 1, 1),
            (1,) * 12,
        )
        t = greedy_tree(d)
        assert t.n == 27 and t.degree_sequence() == d

    @pytest.mark.parametrize("d", all_sequences(9), ids=str)
    def test_degree_multiset_and_level_monotonicity(self, d):
        t = greedy_tree(d)
        assert t.degree_sequence() == d.degrees
        height = bfs_distances(t, 1)
        for u in t.vertices:
            for v in t.vertices:
                if height[u - 1] == height[v - 1] + 1:
                    assert t.degree(u) <= t.degree(v)


class TestFB:
    def test_f72_is_the_caterpillar(self):
        assert f_sequence(7, 2).degrees == (3, 3, 2, 1, 1, 1, 1)
        assert f_tree(7, 2) == greedy_caterpillar((3, 3, 2, 1, 1, 1, 1))

    def test_f62(self):
        t = f_tree(6, 2)
        assert t.degree_sequence() == (3, 3, 1, 1, 1, 1)
        a, b = [u for u in t.vertices if t.degree(u) == 3]
        assert b in t.neighbors(a)

    def test_f81(self):
        # one 3, n-2r-2 = 4 twos, r+2 = 3 ones
        assert f_sequence(8, 1).degrees == (3, 2, 2, 2, 2, 1, 1, 1)

    @pytest.mark.parametrize("n", range(4, 12))
    def test_b_n1_is_star(self, n):
        assert same_shape(b_tree(n, 1), star_tree(n))

    def test_b72(self):
        t = b_tree(7, 2)
        expected = build_tree(7, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7)])
        assert t == expected
        assert t.degree(1) == 4 and t.degree(2) == 3

    def test_b10_3(self):
        assert b_sequence(10, 3).degrees == (5, 3, 3, 1, 1, 1, 1, 1, 1, 1)
        assert b_tree(10, 3) == greedy_tree((5, 3, 3, 1, 1, 1, 1, 1, 1, 1))

    @pytest.mark.parametrize("n, r", [(5, 2), (6, 3), (6, 0), (3, 1)])
    def test_bad_r(self, n, r):
        with pytest.raises(BadR):
            f_tree(n, r)
        with pytest.raises(BadR):
            b_tree(n, r)

    @pytest.mark.parametrize("n", range(4, 16))
    def test_branching_counts(self, n):
        for r in range(1, n // 2):
            assert branching_count(f_tree(n, r)) == r
            assert branching_count(b_tree(n, r)) == r


class TestTransformA:
    def test_p2(self):
        g1, g2 = transform_a(path_tree(2), 1, 1)
        assert same_shape(g1, path_tree(4)) and same_shape(g2, star_tree(4))
        assert cei(g1) == Fraction(8, 3) and cei(g2) == Fraction(9, 2)

    def test_p3_centre(self):
        _, g2 = transform_a(path_tree(3), 2, 2)
        assert same_shape(g2, star_tree(6))

    def test_labels_are_appended(self):
        g1, g2 = transform_a(path_tree(3), 1, 2)
        assert g1.edges() == [(1, 2), (1, 4), (2, 3), (4, 5), (4, 6)]
        assert g2.edges() == [(1, 2), (1, 4), (1, 5), (1, 6), (2, 3)]

    def test_errors(self):
        with pytest.raises(BadVertex):
            transform_a(path_tree(3), 4, 1)
        with pytest.raises(BadA):
            transform_a(path_tree(3), 1, 0)

    @given(tree_and_vertex(), st.integers(1, 5))
    def test_monotone(self, tv, a):
        q, u = tv
        g1, g2 = transform_a(q, u, a)
        assert g1.n == g2.n == q.n + a + 1
        assert cei_oracle(g2) >= cei_oracle(g1)


class TestTransformB:
    def test_p2(self):
        gpq, gp1q1 = transform_b(path_tree(2), 1, 1, 1)
        assert same_shape(gpq, star_tree(4)) and same_shape(gp1q1, path_tree(4))
        assert cei(gpq) == Fraction(9, 2) and cei(gp1q1) == Fraction(8, 3)

    def test_q_path_vanishes(self):
        _, gp1q1 = transform_b(path_tree(2), 2, 2, 1)
        assert same_shape(gp1q1, path_tree(5))

    def test_errors(self):
        with pytest.raises(BadVertex):
            transform_b(path_tree(2), 3, 1, 1)
        with pytest.raises(BadPQ):
            transform_b(path_tree(2), 1, 1, 2)
        with pytest.raises(BadPQ):
            transform_b(path_tree(2), 1, 1, 0)

    @given(tree_and_vertex(), st.integers(1, 5), st.integers(0, 4))
    def test_monotone(self, tv, q, extra):
        g, w = tv
        gpq, gp1q1 = transform_b(g, w, q + extra, q)
        assert cei_oracle(gpq) >= cei_oracle(gp1q1)

    @given(tree_and_vertex(), st.integers(1, 5), st.integers(0, 4))
    def test_repeated_moves_never_raise_cei(self, tv, q, extra):
        # G(p,q) -> G(p+1,q-1) -> ... -> G(p+q,0), CEI non-increasing throughout.
        g, w = tv
        p = q + extra
        values = []
        for shift in range(q + 1):
            if q - shift >= 1:
                gpq, _ = transform_b(g, w, p + shift, q - shift)
            else:
                _, gpq = transform_b(g, w, p + shift - 1, 1)
            values.append(cei(gpq))
        assert all(a >= b for a, b in zip(values, values[1:]))


def test_transform_b_degrees():
    # star centre 1; leaf 2 receives paths 2-5-6-7 and 2-8-9
    g, _ = transform_b(star_tree(4), 2, 3, 2)
    assert g.n == 9
    assert Counter(g.degrees) == Counter({3: 2, 2: 3, 1: 4})
    assert (2, 5) in g.edges() and (7, 8) not in g.edges() and (2, 8) in g.edges()
