import pytest

from rigidkit.core import induced_substructure
from rigidkit.homs import naive_homs
from rigidkit.omega import (
    BoundError,
    omega_prefix,
    shift_map_is_hom,
    stability_sweep,
    verify_omega,
    witness_set,
)


class TestPrefix:
    def test_m3_equals_t3(self):
        assert omega_prefix(3).graph.edges == {(0, 1), (1, 2), (0, 2)}

    def test_m1_no_edges(self):
        assert omega_prefix(1).graph.edges == frozenset()

    def test_m0_empty(self):
        g = omega_prefix(0).graph
        assert g.n == 0

    def test_m5(self):
        assert omega_prefix(5).graph.edges == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)}

    @pytest.mark.parametrize("m", range(0, 12))
    def test_edge_count_formula(self, m):
        g = omega_prefix(m).graph
        expected = max(m - 1, 0) + (1 if m >= 3 else 0)
        assert len(g.edges) == expected


class TestWitness:
    def test_witness_of_2(self):
        assert witness_set(2) == (0, 1, 2, 3, 4)


class TestVerify:
    def test_i0_m11_exactly_one_hom(self):
        cert = verify_omega(0, 11)
        assert cert.passed
        assert cert.hom_count == 1
        # Independent oracle over all 11**3 maps.
        prefix = omega_prefix(11).graph
        pattern, _ = induced_substructure(prefix, witness_set(0))
        assert len(naive_homs(pattern, prefix)) == 1

    def test_i5_verdict_stable_across_bounds(self):
        assert verify_omega(5, 8).passed
        assert verify_omega(5, 20).passed

    def test_bound_too_small(self):
        with pytest.raises(BoundError):
            verify_omega(5, 7)

    @pytest.mark.parametrize("i", range(0, 12))
    def test_small_vertices_pass_at_default_bound(self, i):
        cert = verify_omega(i, i + 13)
        assert cert.passed
        assert cert.hom_count == 1

    def test_stability_sweep(self):
        for i in range(6):
            verdicts = stability_sweep(i, range(1, 11))
            assert set(verdicts.values()) == {True}


class TestShiftExclusion:
    @pytest.mark.parametrize("i", [0, 2, 5])
    def test_shifts_rejected(self, i):
        m = i + 13
        for c in range(1, m - i - 3):
            assert not shift_map_is_hom(i, m, c)

    def test_chain_without_extra_arc_would_allow_shifts(self):
        # The rejection above hinges on the (0, 2) arc: on the bare chain the
        # shift preserves every edge.
        from rigidkit.core import Digraph
        m = 12
        chain = Digraph(m, frozenset((j, j + 1) for j in range(m - 1)))
        ws = witness_set(2)
        pattern, _ = induced_substructure(chain, ws)
        mapping = {j: j + 3 for j in range(pattern.n)}
        assert all((mapping[a], mapping[b]) in chain.edges for a, b in pattern.edges)
