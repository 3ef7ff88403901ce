import random

import networkx as nx
import pytest

from heptalab.corpus import (
    all_graphs_up_to,
    canonical_graph6,
    canonical_relabel,
    nonisomorphic_graphs,
    random_graphs,
    write_graph6_file,
)
from heptalab.graph import Graph, from_graph6, read_graph6_records, to_graph6

from .naive import isomorphic, to_networkx

# number of graphs on n vertices up to isomorphism (OEIS A000088)
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]


class TestEnumeration:
    @pytest.mark.parametrize("n", range(7))
    def test_counts(self, n):
        assert len(nonisomorphic_graphs(n)) == GRAPH_COUNTS[n]

    @pytest.mark.slow
    def test_count_n7(self):
        assert len(nonisomorphic_graphs(7)) == GRAPH_COUNTS[7]

    def test_all_canonical_and_sorted(self):
        graphs = nonisomorphic_graphs(5)
        keys = [to_graph6(g).decode() for g in graphs]
        assert keys == sorted(keys)
        for g in graphs:
            assert canonical_relabel(g) == g

    def test_pairwise_nonisomorphic_n5(self):
        graphs = nonisomorphic_graphs(5)
        for i, g in enumerate(graphs):
            for h in graphs[i + 1 :]:
                assert not isomorphic(g, h)

    def test_all_graphs_up_to(self):
        assert len(all_graphs_up_to(6)) == sum(GRAPH_COUNTS[:7])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            nonisomorphic_graphs(-1)
        with pytest.raises(ValueError):
            nonisomorphic_graphs(9)


class TestCanonicalRelabel:
    def test_invariant_under_relabeling(self):
        rng = random.Random(99)
        for g in random_graphs(60, [5, 6, 7, 8], seed=4):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_relabel(g.relabel(perm)) == canonical_relabel(g)

    def test_result_is_isomorphic(self):
        for g in random_graphs(30, [6, 7], seed=11):
            c = canonical_relabel(g)
            assert isomorphic(g, c)

    def test_distinct_graphs_distinct_forms(self):
        # relabelings of C6 and of P6 must land on different canonical forms
        rng = random.Random(3)
        c6, p6 = Graph.cycle(6), Graph.path(6)
        perm = list(range(6))
        rng.shuffle(perm)
        assert canonical_relabel(c6.relabel(perm)) != canonical_relabel(p6)

    def test_trivial_graphs(self):
        assert canonical_relabel(Graph.empty(0)) == Graph.empty(0)
        assert canonical_relabel(Graph.complete(4)) == Graph.complete(4)

    def test_canonical_graph6_string(self):
        s = canonical_graph6(Graph.cycle(5))
        assert isinstance(s, str)
        assert isomorphic(from_graph6(s), Graph.cycle(5))
        rng = random.Random(8)
        perm = list(range(5))
        rng.shuffle(perm)
        assert canonical_graph6(Graph.cycle(5).relabel(perm)) == s


class TestRandomGraphs:
    def test_deterministic(self):
        a = random_graphs(40, [6, 9], seed=123)
        b = random_graphs(40, [6, 9], seed=123)
        assert a == b

    def test_seed_changes_output(self):
        assert random_graphs(40, [8], seed=0) != random_graphs(40, [8], seed=1)

    def test_sizes_respected(self):
        for g in random_graphs(50, [4, 7], seed=2):
            assert g.n in (4, 7)

    def test_degenerate_sizes(self):
        gs = random_graphs(3, [0, 1], seed=5)
        assert all(g.edge_count == 0 for g in gs)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            random_graphs(-1, [5], seed=0)
        with pytest.raises(ValueError):
            random_graphs(1, [], seed=0)
        with pytest.raises(ValueError):
            random_graphs(1, [-2], seed=0)


class TestReferenceCrossCheck:
    def test_n4_matches_networkx_atlas(self):
        # nx.graph_atlas_g() lists all graphs with up to 7 vertices; entries
        # 8..18 are exactly the 11 four-vertex graphs
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 4]
        assert len(atlas) == 11
        ours = nonisomorphic_graphs(4)
        matched = set()
        for a in atlas:
            hits = [
                i for i, g in enumerate(ours) if nx.is_isomorphic(a, to_networkx(g))
            ]
            assert len(hits) == 1
            matched.add(hits[0])
        assert matched == set(range(11))


class TestFileOutput:
    def test_write_and_read_back(self, tmp_path):
        graphs = random_graphs(12, [0, 1, 5, 8], seed=77)
        path = tmp_path / "sample.g6"
        write_graph6_file(path, graphs)
        with open(path, "rb") as fh:
            records = list(read_graph6_records(fh))
        assert [r.graph for r in records] == graphs
        assert [r.line_number for r in records] == list(range(1, 13))
