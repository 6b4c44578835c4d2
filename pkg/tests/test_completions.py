import pytest

from rigidkit.core import ArityError, make_digraph, make_ugraph
from rigidkit.completions import (
    CLAUSE_BASE_CONTAINED,
    CLAUSE_SYMMETRY_ONLY_ON_BASE,
    build_completion,
    completion_from_index,
    completion_violations,
    enumerate_completions,
    enumerate_orientations,
    is_completion,
    non_edge_pairs,
    orientation_count,
    sample_distinct_completions,
    sample_distinct_orientations,
)

TRIANGLE = make_ugraph(3, [(0, 1), (1, 2), (0, 2)])
PATH3 = make_ugraph(3, [(0, 1), (1, 2)])
EMPTY3 = make_ugraph(3, [])


class TestNonEdgePairs:
    def test_triangle_has_none(self):
        t = non_edge_pairs(TRIANGLE)
        assert t.pairs == ()
        assert t.count == 1

    def test_path_has_one(self):
        t = non_edge_pairs(PATH3)
        assert t.pairs == ((0, 2),)
        assert t.count == 2

    def test_empty_has_all(self):
        t = non_edge_pairs(EMPTY3)
        assert t.pairs == ((0, 1), (0, 2), (1, 2))
        assert t.count == 8


class TestBuildCompletion:
    def test_path_bit_false(self):
        c = build_completion(PATH3, [False])
        assert c.realized.edges == {(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)}
        # Clauses re-verified by enumeration over ordered pairs.
        assert completion_violations(PATH3, c.realized) == []

    def test_triangle_empty_bits(self):
        c = build_completion(TRIANGLE, [])
        assert c.realized.edges == TRIANGLE.edges

    def test_wrong_arity(self):
        with pytest.raises(ArityError):
            build_completion(PATH3, [True, False])

    def test_distinct_bits_distinct_relations(self):
        seen = {build_completion(EMPTY3, bits).realized.edges
                for bits in [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]}
        assert len(seen) == 8


class TestIsCompletion:
    def test_built_member_accepted(self):
        c = build_completion(PATH3, [True])
        assert is_completion(PATH3, c.realized)

    def test_missing_base_edge(self):
        s = make_digraph(3, [(0, 1), (1, 2), (2, 1), (0, 2)])
        v = completion_violations(PATH3, s)
        assert CLAUSE_BASE_CONTAINED in v

    def test_symmetry_off_base(self):
        s = make_digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)])
        v = completion_violations(PATH3, s)
        assert CLAUSE_SYMMETRY_ONLY_ON_BASE in v

    def test_size_mismatch(self):
        with pytest.raises(ArityError):
            is_completion(PATH3, make_digraph(2, []))


class TestFamilyCounts:
    @pytest.mark.parametrize("base,expected", [
        (TRIANGLE, 1),
        (PATH3, 2),
        (EMPTY3, 8),
        (make_ugraph(4, [(0, 1)]), 2 ** 5),
    ])
    def test_enumeration_count_matches_formula(self, base, expected):
        members = list(enumerate_completions(base))
        assert len(members) == expected
        assert len({m.realized.edges for m in members}) == expected

    def test_sampling_distinct(self):
        members = sample_distinct_completions(EMPTY3, 5, seed=0)
        assert len({m.realized.edges for m in members}) == 5

    def test_sampling_too_many(self):
        with pytest.raises(ArityError):
            sample_distinct_completions(PATH3, 3, seed=0)

    def test_sampling_deterministic(self):
        a = sample_distinct_completions(EMPTY3, 4, seed=9)
        b = sample_distinct_completions(EMPTY3, 4, seed=9)
        assert [m.bits for m in a] == [m.bits for m in b]


class TestOrientations:
    def test_single_edge_two_orientations(self):
        base = make_ugraph(2, [(0, 1)])
        assert orientation_count(base) == 2
        assert {o.edges for o in enumerate_orientations(base)} == {
            frozenset({(0, 1)}), frozenset({(1, 0)})
        }

    def test_triangle_eight(self):
        os = list(enumerate_orientations(TRIANGLE))
        assert len(os) == 8
        assert len({o.edges for o in os}) == 8
        # Exactly one direction survives per base edge.
        for o in os:
            for a, b in TRIANGLE.undirected_edges():
                assert ((a, b) in o.edges) != ((b, a) in o.edges)

    def test_sample_deterministic_and_distinct(self):
        base = make_ugraph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
        a = sample_distinct_orientations(base, 6, seed=3)
        b = sample_distinct_orientations(base, 6, seed=3)
        assert [x.edges for x in a] == [x.edges for x in b]
        assert len({x.edges for x in a}) == 6
