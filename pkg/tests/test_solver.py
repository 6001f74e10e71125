"""Exact pc search: existence queries, optimal values, sampling refuter."""

import itertools
import random

import pytest

from properconn import (
    EdgeColoring,
    PreconditionError,
    SearchBudgetExceeded,
    build_counterexample,
    corpus,
    exists_pc_coloring,
    has_strong_property,
    is_proper_connected,
    pc_exact,
    sample_refute,
)
from properconn.graph import connectivity

import oracles


class TestExistsPcColoring:
    def test_k4_one_color(self):
        g = corpus.complete(4)
        c = exists_pc_coloring(g, 1)
        assert c is not None and c.colors_used() == 1
        assert is_proper_connected(g, c) == (True, None)

    def test_p3_needs_two(self):
        g = corpus.path_graph(3)
        assert exists_pc_coloring(g, 1) is None
        c = exists_pc_coloring(g, 2)
        assert c is not None
        assert is_proper_connected(g, c) == (True, None)

    def test_c7_two_colors(self):
        g = corpus.cycle(7)
        c = exists_pc_coloring(g, 2)
        assert c is not None
        assert is_proper_connected(g, c) == (True, None)

    def test_strong_variant(self):
        c = exists_pc_coloring(corpus.cycle(4), 2, require_strong=True)
        assert c is not None
        chk = has_strong_property(corpus.cycle(4), c)
        assert chk.ok
        # trees have one path per pair, so no palette can be strong
        assert exists_pc_coloring(corpus.path_graph(3), 2, require_strong=True) is None

    def test_budget_is_inconclusive_not_absent(self):
        g = corpus.petersen()
        with pytest.raises(SearchBudgetExceeded) as ei:
            exists_pc_coloring(g, 2, budget_nodes=5)
        assert ei.value.k == 2 and ei.value.nodes >= 5

    def test_matches_brute_force_two_colors(self):
        # Symmetry reduction must not change the verdict: sweep every
        # connected graph on <= 5 vertices against the unreduced oracle.
        for n in range(2, 6):
            for g in corpus.connected_graphs(n):
                got = exists_pc_coloring(g, 2)
                want = oracles.brute_exists_pc_2coloring(g)
                assert (got is not None) == want
                if got is not None:
                    assert is_proper_connected(g, got) == (True, None)

    def test_monotone_in_palette_size(self):
        rng = random.Random(19)
        for _ in range(25):
            n = rng.randint(3, 7)
            m_hi = n * (n - 1) // 2
            g = corpus.random_connected(n, rng.randint(n - 1, min(m_hi, n + 3)), rng)
            for k in (1, 2, 3):
                if exists_pc_coloring(g, k) is not None:
                    assert exists_pc_coloring(g, k + 1) is not None


class TestPcExact:
    def test_stars(self):
        for m in range(2, 6):
            res = pc_exact(corpus.star(m))
            assert res.value == m
            assert res.evidence == "exhaustive"
            assert is_proper_connected(corpus.star(m), res.coloring) == (True, None)

    def test_trees_need_max_degree(self):
        for n in range(2, 7):
            for t in corpus.trees(n):
                delta = max(t.degree(v) for v in range(t.n))
                assert pc_exact(t).value == delta

    def test_cycles(self):
        for n in range(4, 9):
            assert pc_exact(corpus.cycle(n)).value == 2

    def test_complete_graphs(self):
        for n in range(3, 7):
            assert pc_exact(corpus.complete(n)).value == 1

    def test_petersen(self):
        res = pc_exact(corpus.petersen())
        assert res.value == 2
        assert is_proper_connected(corpus.petersen(), res.coloring) == (True, None)

    def test_matches_brute_force(self):
        rng = random.Random(23)
        for _ in range(15):
            n = rng.randint(2, 5)
            m_hi = n * (n - 1) // 2
            g = corpus.random_connected(n, rng.randint(n - 1, m_hi), rng)
            assert pc_exact(g).value == oracles.brute_pc_exact(g, 4)

    def test_stats_accumulate(self):
        res = pc_exact(corpus.cycle(5))
        assert res.stats["nodes"] > 0
        assert set(res.stats["per_k"]) == {1, 2}

    def test_budget_raises(self):
        with pytest.raises(SearchBudgetExceeded):
            pc_exact(corpus.petersen(), budget_nodes=3)

    def test_disconnected_rejected(self):
        from properconn import Graph

        with pytest.raises(PreconditionError, match="connected"):
            pc_exact(Graph(3, [(0, 1)]))

    def test_kmax_exhausted_raises(self):
        with pytest.raises(PreconditionError, match="at most 1"):
            pc_exact(corpus.star(3), k_max=1)


class TestSampleRefute:
    def test_complete_graph_never_fails(self):
        out = sample_refute(corpus.complete(4), 1, trials=5, seed=0)
        assert out.failures == []
        assert len(out.successes) == 5

    def test_p3_always_fails_on_endpoints(self):
        out = sample_refute(corpus.path_graph(3), 1, trials=10, seed=0)
        assert len(out.failures) == 10 and out.successes == []
        assert all(f.pair == (0, 2) for f in out.failures)

    def test_counterexample_family_resists_sampling(self, mini):
        out = sample_refute(mini, 2, trials=200, seed=42)
        assert out.successes == []
        assert len(out.failures) == 200
        assert [f.trial for f in out.failures] == list(range(200))

    def test_deterministic_across_schedules(self, mini):
        a = sample_refute(mini, 2, trials=20, seed=7)
        b = sample_refute(mini, 2, trials=20, seed=7, jobs=2)
        assert [f.pair for f in a.failures] == [f.pair for f in b.failures]
        assert [f.coloring.as_vector(mini) for f in a.failures] == [
            f.coloring.as_vector(mini) for f in b.failures
        ]

    def test_seed_changes_samples(self, mini):
        a = sample_refute(mini, 2, trials=5, seed=1)
        b = sample_refute(mini, 2, trials=5, seed=2)
        assert [f.coloring.as_vector(mini) for f in a.failures] != [
            f.coloring.as_vector(mini) for f in b.failures
        ]

    def test_bad_palette_rejected(self):
        with pytest.raises(PreconditionError):
            sample_refute(corpus.path_graph(3), 0, trials=1, seed=0)


class TestBounds:
    def test_spanning_subgraph_bound(self):
        # Removing edges cannot decrease pc: pc(G) <= pc(H) for spanning
        # connected H.
        rng = random.Random(29)
        done = 0
        while done < 15:
            n = rng.randint(4, 7)
            m_hi = n * (n - 1) // 2
            g = corpus.random_connected(n, rng.randint(n, min(m_hi, n + 4)), rng)
            edges = list(g.edges)
            rng.shuffle(edges)
            from properconn import Graph
            from properconn.graph import connected_components

            drop = edges[: rng.randint(1, max(1, g.m - n + 1))]
            h = Graph(g.n, [e for e in g.edges if e not in set(drop)])
            if len(connected_components(h)) != 1:
                continue
            done += 1
            assert pc_exact(g).value <= pc_exact(h).value

    def test_two_connected_at_most_three(self):
        for n in range(3, 8):
            for g in corpus.connected_graphs(n):
                if connectivity(g) >= 2:
                    assert pc_exact(g, k_max=3).value <= 3

    def test_two_connected_at_most_three_random_n8(self):
        rng = random.Random(31)
        done = 0
        while done < 12:
            g = corpus.random_connected(8, rng.randint(9, 16), rng)
            if connectivity(g) < 2:
                continue
            done += 1
            assert pc_exact(g, k_max=3).value <= 3
