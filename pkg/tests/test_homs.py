import random

import pytest
from hypothesis import given, settings, strategies as st

from rigidkit.core import make_digraph, make_ugraph
from rigidkit.homs import (
    HomQuery,
    count_homs,
    enumerate_homs,
    is_homomorphism,
    is_rigid,
    naive_homs,
)

T3 = make_digraph(3, [(0, 1), (1, 2), (0, 2)])
ARC = make_digraph(2, [(0, 1)])
C3 = make_digraph(3, [(0, 1), (1, 2), (2, 0)])


def random_digraph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.5]
    return make_digraph(n, edges)


class TestEnumerate:
    def test_arc_into_t3(self):
        # Oracle over all 9 maps agrees: one hom per arc of T3.
        homs = enumerate_homs(HomQuery(ARC, T3))
        oracle = naive_homs(ARC, T3)
        assert homs == oracle
        assert len(homs) == 3

    def test_c3_endomorphisms_are_rotations(self):
        homs = enumerate_homs(HomQuery(C3, C3))
        assert homs == naive_homs(C3, C3)
        assert len(homs) == 3
        assert all(len(set(h.image)) == 3 for h in homs)

    def test_identity_always_present(self):
        for g in (T3, C3, ARC, make_digraph(4, [])):
            homs = enumerate_homs(HomQuery(g, g))
            assert any(h.is_identity() for h in homs)

    def test_pin_kills_all(self):
        # Vertex 2 of T3 has no out-arc, so the arc cannot start there.
        homs = enumerate_homs(HomQuery(ARC, T3, pins=((0, 2),)))
        assert homs == []
        assert naive_homs(ARC, T3, {0: 2}) == []

    def test_limit_truncates(self):
        homs = enumerate_homs(HomQuery(ARC, T3, limit=2))
        assert len(homs) == 2

    def test_empty_source_one_map(self):
        empty = make_digraph(0, [])
        assert len(enumerate_homs(HomQuery(empty, T3))) == 1

    def test_empty_target_no_maps(self):
        empty = make_digraph(0, [])
        assert enumerate_homs(HomQuery(T3, empty)) == []

    def test_result_order_lexicographic(self):
        homs = enumerate_homs(HomQuery(ARC, T3))
        images = [h.image for h in homs]
        assert images == sorted(images)

    def test_count_matches_enumeration(self):
        assert count_homs(C3, C3) == 3
        assert count_homs(C3, C3, cap=2) == 2


class TestEngineVsOracle:
    def test_all_two_vertex_pairs(self):
        graphs = [make_digraph(2, e) for e in ([], [(0, 1)], [(1, 0)], [(0, 1), (1, 0)])]
        for s in graphs:
            for t in graphs:
                assert enumerate_homs(HomQuery(s, t)) == naive_homs(s, t)

    def test_seeded_random_pairs_with_pins(self):
        rng = random.Random(7)
        for _ in range(150):
            s = random_digraph(rng, rng.randint(1, 4))
            t = random_digraph(rng, rng.randint(1, 4))
            pins = {}
            if rng.random() < 0.5:
                pins[rng.randrange(s.n)] = rng.randrange(t.n)
            got = enumerate_homs(HomQuery(s, t, pins=tuple(pins.items())))
            assert got == naive_homs(s, t, pins)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_hypothesis_pairs(self, data):
        def dig(label):
            n = data.draw(st.integers(1, 4), label=f"{label}_n")
            pool = [(u, v) for u in range(n) for v in range(n) if u != v]
            edges = data.draw(st.sets(st.sampled_from(pool)) if pool else st.just(set()), label=f"{label}_edges")
            return make_digraph(n, edges)

        s, t = dig("s"), dig("t")
        assert enumerate_homs(HomQuery(s, t)) == naive_homs(s, t)

    def test_composition_closure_sampled(self):
        rng = random.Random(11)
        for _ in range(25):
            g1 = random_digraph(rng, 3)
            g2 = random_digraph(rng, 3)
            g3 = random_digraph(rng, 3)
            h12 = enumerate_homs(HomQuery(g1, g2))
            h23 = enumerate_homs(HomQuery(g2, g3))
            for f in h12[:4]:
                for h in h23[:4]:
                    comp = {v: h.image[f.image[v]] for v in range(g1.n)}
                    assert is_homomorphism(g1, g3, comp)


class TestIsRigid:
    def test_singleton_rigid(self):
        assert is_rigid(make_digraph(1, [])).rigid

    def test_two_isolated_not_rigid(self):
        cert = is_rigid(make_digraph(2, []))
        assert not cert.rigid
        assert cert.counterexample is not None
        assert not cert.counterexample.is_identity()

    def test_t4_rigid(self):
        t4 = make_digraph(4, [(i, j) for i in range(4) for j in range(4) if i < j])
        # Exhaustive cross-check over all 256 maps.
        assert len(naive_homs(t4, t4)) == 1
        assert is_rigid(t4).rigid

    def test_single_undirected_edge_swap(self):
        cert = is_rigid(make_ugraph(2, [(0, 1)]))
        assert not cert.rigid
        assert cert.counterexample.image == (1, 0)

    def test_counterexample_is_verified_endo(self):
        g = make_digraph(4, [(0, 1), (2, 3)])
        cert = is_rigid(g)
        assert not cert.rigid
        assert is_homomorphism(g, g, cert.counterexample.as_dict())

    def test_maps_examined_positive(self):
        assert is_rigid(T3).maps_examined > 0


class TestDeterminism:
    def test_repeat_runs_identical(self):
        rng = random.Random(3)
        s = random_digraph(rng, 4)
        t = random_digraph(rng, 4)
        first = enumerate_homs(HomQuery(s, t))
        for _ in range(3):
            assert enumerate_homs(HomQuery(s, t)) == first
