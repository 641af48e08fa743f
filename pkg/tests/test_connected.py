import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import degbal.connected as connected_mod
from degbal.connected import (
    ColoringState,
    ExceptionKind,
    Statement,
    decompose_connected,
    decompose_connected_traced,
    fallback_search,
    special_14_construction,
    stage1_grow_v3,
    stage2_fill_v2,
    stage3_fill_v1,
    target_profile,
    _find_r1,
    _find_r2,
    _find_r3,
)
from degbal.errors import (
    BudgetExceeded,
    ExceptionGraph,
    InternalStuck,
    NotConnected,
    NotRegular,
    ParityMismatch,
    PreconditionViolated,
    SpecialCaseNeeded,
)
from degbal.gen import cycles, disjoint_union, named, random_cubic
from degbal.graphs import (
    DegreeProfile,
    build_graph,
    connected_components,
    profile_of,
    shortest_cycle,
)
from degbal.oracle import is_achievable

# 14-vertex cubic graph containing the blocked-configuration pattern:
# K4 on {0,1,2,3} with edge (0,1) subdivided by vertex 4, whose single
# outside edge reaches 5; the rest is an arbitrary cubic completion.
PATTERN_14 = build_graph(
    14,
    [
        (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (4, 5),
        (5, 6), (5, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 10), (9, 11),
        (10, 12), (10, 13), (11, 12), (11, 13), (12, 13),
    ],
)

# catalog graph whose statement-III run exercises rule R3 (fixture line)
R3_GRAPH6 = "Iac`K`BJ?"


class TestTargetProfile:
    def test_statement_i(self):
        assert target_profile(8, Statement.I).counts == (2, 2, 2, 2)

    def test_statement_ii(self):
        assert target_profile(4, Statement.II).counts == (0, 0, 2, 2)

    def test_statement_iii(self):
        assert target_profile(6, Statement.III).counts == (1, 2, 1, 2)

    def test_statement_iv(self):
        assert target_profile(10, Statement.IV).counts == (1, 2, 3, 4)

    def test_parity_mismatch(self):
        with pytest.raises(ParityMismatch):
            target_profile(8, Statement.III)
        with pytest.raises(ParityMismatch):
            target_profile(10, Statement.I)

    def test_order_zero(self):
        assert target_profile(0, Statement.I).counts == (0, 0, 0, 0)
        with pytest.raises(ParityMismatch):
            target_profile(0, Statement.II)

    def test_targets_sum_to_n(self):
        for n in range(4, 40, 2):
            stmts = (
                (Statement.I, Statement.II) if n % 4 == 0 else (Statement.III, Statement.IV)
            )
            for s in stmts:
                assert target_profile(n, s).order == n


class TestBaseCases:
    def test_k4_ii_single_edge(self):
        g = named("K4")
        sub = decompose_connected(g, Statement.II)
        assert profile_of(g, sub).counts == (0, 0, 2, 2)
        assert len(sub) == 1

    def test_prism_iii(self):
        g = named("PRISM")
        sub = decompose_connected(g, Statement.III)
        assert profile_of(g, sub).counts == (1, 2, 1, 2)

    def test_k33_iv(self):
        g = named("K33")
        sub = decompose_connected(g, Statement.IV)
        assert profile_of(g, sub).counts == (0, 1, 2, 3)

    def test_prism_iv(self):
        g = named("PRISM")
        sub = decompose_connected(g, Statement.IV)
        assert profile_of(g, sub).counts == (0, 1, 2, 3)

    def test_k4_i_exception(self):
        with pytest.raises(ExceptionGraph) as exc:
            decompose_connected(named("K4"), Statement.I)
        assert exc.value.kind is ExceptionKind.K4_I

    def test_k33_iii_exception(self):
        with pytest.raises(ExceptionGraph) as exc:
            decompose_connected(named("K33"), Statement.III)
        assert exc.value.kind is ExceptionKind.K33_III


class TestValidation:
    def test_not_connected(self):
        with pytest.raises(NotConnected):
            decompose_connected(disjoint_union([named("K4")] * 2), Statement.I)

    def test_not_cubic(self):
        with pytest.raises(NotRegular):
            decompose_connected(cycles([6]), Statement.III)

    def test_parity(self):
        with pytest.raises(ParityMismatch):
            decompose_connected(named("CUBE"), Statement.III)


def applicable_statements(n):
    return (Statement.I, Statement.II) if n % 4 == 0 else (Statement.III, Statement.IV)


class TestStaged:
    def test_petersen_iii(self):
        g = named("PETERSEN")
        sub = decompose_connected(g, Statement.III)
        assert profile_of(g, sub).counts == (2, 3, 2, 3)

    def test_catalogs_all_statements(self, connected_corpus):
        for name, g in connected_corpus:
            for s in applicable_statements(g.n):
                try:
                    sub, trace = decompose_connected_traced(g, s)
                except ExceptionGraph:
                    assert (g.n, s) in ((4, Statement.I), (6, Statement.III))
                    continue
                assert profile_of(g, sub) == target_profile(g.n, s), (name, s)
                assert not trace.fallback_used, (name, s)

    def test_stage1_invariants_on_corpus(self, connected_corpus):
        for name, g in connected_corpus:
            if g.n < 8:
                continue
            for s in applicable_statements(g.n):
                _, trace = decompose_connected_traced(g, s)
                st1 = trace.stage1
                n3 = target_profile(g.n, s).counts[0]
                assert st1.out_v3 == 3 * n3 - 2 * st1.e_v3, (name, s)
                assert st1.out_v3 <= n3 + 2, (name, s)
                assert 2 * st1.v2_size + st1.v1_size == st1.out_v3, (name, s)
                assert st1.e_v3 >= n3 - 1, (name, s)
                if st1.girth <= n3:
                    assert st1.e_v3 >= n3, (name, s)
                assert st1.girth <= g.n / 2, (name, s)

    def test_cube_statement_i_first_two_cycle_vertices(self):
        g = named("CUBE")
        _, trace = decompose_connected_traced(g, Statement.I)
        # n3 = 2: V3 is two adjacent cycle vertices, hence one inner edge
        assert trace.stage1.e_v3 == 1

    def test_deep_checks_path(self):
        connected_mod.DEEP_CHECKS = True
        try:
            g = named("PETERSEN")
            sub = decompose_connected(g, Statement.IV)
            assert profile_of(g, sub).counts == (1, 2, 3, 4)
        finally:
            connected_mod.DEEP_CHECKS = False

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 10_000), n=st.sampled_from([8, 12, 16, 20]))
    def test_random_connected_cubic(self, seed, n):
        g = random_cubic(n, seed)
        if len(connected_components(g)) != 1:
            return
        for s in applicable_statements(n):
            sub = decompose_connected(g, s)
            assert profile_of(g, sub) == target_profile(n, s)

    def test_deterministic(self):
        g = named("DESARGUES")
        assert (
            decompose_connected(g, Statement.I).bits
            == decompose_connected(g, Statement.I).bits
        )


class TestRules:
    """Rule mechanics on the Petersen statement-III trajectory."""

    def _after_stage1(self, g, s):
        state = ColoringState(g, target_profile(g.n, s), shortest_cycle(g))
        return stage1_grow_v3(state)

    def test_petersen_iii_rule_sequence(self):
        g = named("PETERSEN")
        state = self._after_stage1(g, Statement.III)
        # no V1-V1 edge yet, so R1 must decline
        assert _find_r1(state) is None
        # R2 prefers the cycle edge (2,3) over any other V1-V0 edge
        i = _find_r2(state)
        assert g.edges[i] == (2, 3)
        before = tuple(state.sizes)
        state.color_edge(i)
        assert tuple(a - b for a, b in zip(state.sizes, before)) == (-1, 0, 1, 0)
        # now (3,4) joins two 1-vertices: R1 applies, shrinking V1 by 2
        j = _find_r1(state)
        assert g.edges[j] == (3, 4)
        before = tuple(state.sizes)
        state.color_edge(j)
        assert tuple(a - b for a, b in zip(state.sizes, before)) == (0, -2, 2, 0)

    def test_r3_step_effects(self):
        from degbal.formats import parse_graph6

        g = parse_graph6(R3_GRAPH6)
        state = self._after_stage1(g, Statement.III)
        assert _find_r1(state) is None and _find_r2(state) is None
        v, u, w = _find_r3(state)
        assert state.deg1[v] == state.deg1[u] == state.deg1[w] == 0
        before = tuple(state.sizes)
        state.color_edge(g.edge_index(v, u))
        state.color_edge(g.edge_index(v, w))
        assert tuple(a - b for a, b in zip(state.sizes, before)) == (-3, 2, 1, 0)
        _, trace = decompose_connected_traced(g, Statement.III)
        assert trace.rule_counts["R3"] == 1

    def test_stage2_then_stage3_full_run(self):
        g = named("PETERSEN")
        state = self._after_stage1(g, Statement.IV)
        stage2_fill_v2(state)
        assert state.sizes[2] == state.n2
        assert state.sizes[1] <= state.n1
        stage3_fill_v1(state)
        assert profile_of(g, state.subset()) == target_profile(10, Statement.IV)

    def test_parity_invariant_throughout(self):
        g = named("MOEBIUS_KANTOR")
        state = self._after_stage1(g, Statement.I)
        # |V1| and |V3| always share parity (checked after every coloring
        # inside color_edge; spot-check the boundary here)
        assert (state.sizes[1] + state.sizes[3]) % 2 == 0


class TestSpecial14:
    def test_pattern_graph(self):
        sub = special_14_construction(PATTERN_14)
        assert profile_of(PATTERN_14, sub).counts == (3, 4, 3, 4)

    def test_oracle_confirms_target_on_pattern(self):
        assert is_achievable(PATTERN_14, DegreeProfile((3, 4, 3, 4)))

    def test_precondition_wrong_order(self):
        with pytest.raises(PreconditionViolated):
            special_14_construction(named("PETERSEN"))

    def test_precondition_pattern_absent(self):
        # girth 6 rules out the K4-with-subdivided-edge block
        with pytest.raises(PreconditionViolated):
            special_14_construction(named("HEAWOOD"))


class TestBlockedDispatch:
    """Stage-2 blocks are rare; force one to exercise the routing."""

    def _force_block(self, monkeypatch):
        def boom(state):
            raise SpecialCaseNeeded("forced for dispatch test")

        monkeypatch.setattr(connected_mod, "stage2_fill_v2", boom)

    def test_routes_to_special_on_14_iii(self, monkeypatch):
        self._force_block(monkeypatch)
        sub, trace = decompose_connected_traced(PATTERN_14, Statement.III)
        assert trace.special_used and not trace.fallback_used
        assert profile_of(PATTERN_14, sub).counts == (3, 4, 3, 4)

    def test_routes_to_fallback_when_pattern_absent(self, monkeypatch):
        self._force_block(monkeypatch)
        g = named("HEAWOOD")
        sub, trace = decompose_connected_traced(g, Statement.III)
        assert trace.fallback_used and not trace.special_used
        assert profile_of(g, sub) == target_profile(14, Statement.III)

    def test_routes_to_fallback_on_small_orders(self, monkeypatch):
        self._force_block(monkeypatch)
        g = named("CUBE")
        sub, trace = decompose_connected_traced(g, Statement.I)
        assert trace.fallback_used
        assert profile_of(g, sub).counts == (2, 2, 2, 2)

    def test_no_fallback_beyond_16(self, monkeypatch):
        self._force_block(monkeypatch)
        with pytest.raises(InternalStuck):
            decompose_connected_traced(named("PAPPUS"), Statement.III)


class TestFallbackSearch:
    def test_k4_infeasible_target(self):
        assert fallback_search(named("K4"), DegreeProfile((1, 1, 1, 1))) is None

    def test_k4_single_edge_target(self):
        g = named("K4")
        sub = fallback_search(g, DegreeProfile((0, 0, 2, 2)))
        assert profile_of(g, sub).counts == (0, 0, 2, 2)
        assert len(sub) == 1

    def test_prism_iii_target(self):
        g = named("PRISM")
        sub = fallback_search(g, DegreeProfile((1, 2, 1, 2)))
        assert profile_of(g, sub).counts == (1, 2, 1, 2)

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            fallback_search(named("PETERSEN"), DegreeProfile((2, 3, 2, 3)), budget=10)

    def test_wrong_order_target(self):
        assert fallback_search(named("K4"), DegreeProfile((1, 1, 1, 2))) is None

    def test_deterministic(self):
        g = named("CUBE")
        a = fallback_search(g, DegreeProfile((2, 2, 2, 2)))
        b = fallback_search(g, DegreeProfile((2, 2, 2, 2)))
        assert a.bits == b.bits
