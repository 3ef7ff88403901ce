import random
from itertools import combinations

import pytest

from heptalab.detect import (
    SearchBudgetExceeded,
    c7_complement,
    clique_number,
    find_full_house,
    find_induced_pattern,
    find_odd_hole,
    full_house_graph,
    has_c7_complement,
    is_perfect_bruteforce,
    odd_hole_naive,
    verify_hit,
)
from heptalab.graph import Graph, induced_subgraph, is_clique

from .naive import (
    clique_number_subsets,
    full_houses_by_degree,
    is_bipartite,
    naive_chromatic,
    odd_holes_by_isomorphism,
)

PETERSEN = Graph.from_edges(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
)

T11 = Graph.circulant(11, (3, 4, 5))


class TestOddHole:
    def test_five_cycle(self):
        hit = find_odd_hole(Graph.cycle(5))
        assert hit is not None and hit.length == 5
        assert verify_hit(Graph.cycle(5), hit)

    def test_six_cycle(self):
        assert find_odd_hole(Graph.cycle(6)) is None

    def test_c7_complement_none_with_subset_oracle(self):
        g = c7_complement()
        assert find_odd_hole(g) is None
        assert odd_holes_by_isomorphism(g) == []

    def test_petersen_has_five_hole(self):
        hit = find_odd_hole(PETERSEN)
        assert hit is not None and hit.length == 5
        assert verify_hit(PETERSEN, hit)

    def test_shortest_is_returned(self):
        # C7 plus a disjoint C5: the reported hole must have length 5
        edges = [(i, (i + 1) % 7) for i in range(7)]
        edges += [(7 + i, 7 + (i + 1) % 5) for i in range(5)]
        g = Graph.from_edges(12, edges)
        hit = find_odd_hole(g)
        assert hit.length == 5

    def test_matches_naive_on_small_random(self):
        rng = random.Random(2024)
        for _ in range(500):
            n = rng.randint(5, 8)
            g = Graph.from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
            fast, slow = find_odd_hole(g), odd_hole_naive(g)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert fast.length == slow.length
                assert verify_hit(g, fast)

    def test_budget_exhaustion(self):
        g = Graph.circulant(16, (1, 3))
        with pytest.raises(SearchBudgetExceeded):
            find_odd_hole(g, budget=3)


class TestFullHouse:
    def test_pattern_itself(self):
        g = full_house_graph()
        hit = find_full_house(g)
        assert hit is not None and verify_hit(g, hit)
        assert find_full_house(g, all_subsets=True) is not None

    def test_k4_and_k5(self):
        assert find_full_house(Graph.complete(4)) is None
        assert find_full_house(Graph.complete(5)) is None

    def test_agrees_with_degree_oracle(self):
        rng = random.Random(31)
        for _ in range(400):
            n = rng.randint(5, 8)
            g = Graph.from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
            fast = find_full_house(g)
            slow = full_houses_by_degree(g)
            assert (fast is None) == (len(slow) == 0)
            if fast is not None:
                assert verify_hit(g, fast)

    def test_subset_mode_cap(self):
        with pytest.raises(ValueError):
            find_full_house(Graph.empty(13), all_subsets=True)


class TestInducedPattern:
    def test_identity_c7_complement(self):
        g = c7_complement()
        hit = find_induced_pattern(g, g, kind="c7_complement")
        assert hit is not None and len(hit.vertices) == 7
        assert verify_hit(g, hit)

    def test_petersen_triangle_free(self):
        assert find_induced_pattern(PETERSEN, Graph.complete(3)) is None
        assert not any(
            is_clique(PETERSEN, set(c)) for c in combinations(range(10), 3)
        )

    def test_t11_contains_c7_complement(self):
        hit = find_induced_pattern(T11, c7_complement(), kind="c7_complement")
        assert hit is not None
        assert verify_hit(T11, hit)
        # brute confirmation over all 7-subsets
        found = False
        for combo in combinations(range(11), 7):
            sub, _ = induced_subgraph(T11, combo)
            if sorted(sub.degree(v) for v in range(7)) == [4] * 7:
                if find_induced_pattern(sub, c7_complement()) is not None:
                    found = True
                    break
        assert found

    def test_has_c7_complement_flags(self):
        assert has_c7_complement(c7_complement())
        assert has_c7_complement(T11)
        assert not has_c7_complement(Graph.cycle(7))

    def test_pattern_larger_than_host(self):
        with pytest.raises(ValueError):
            find_induced_pattern(Graph.cycle(4), Graph.cycle(5))

    def test_pattern_cap(self):
        with pytest.raises(ValueError):
            find_induced_pattern(Graph.empty(20), Graph.empty(13))


class TestCliqueNumber:
    def test_c7_complement(self):
        omega, witness = clique_number(c7_complement())
        assert omega == 3 and is_clique(c7_complement(), witness)
        assert clique_number_subsets(c7_complement()) == 3

    def test_k5(self):
        assert clique_number(Graph.complete(5))[0] == 5

    def test_t11(self):
        omega, witness = clique_number(T11)
        assert omega == 3 and is_clique(T11, witness)
        assert clique_number_subsets(T11) == 3

    def test_random_against_subsets(self):
        rng = random.Random(8)
        for _ in range(200):
            n = rng.randint(0, 8)
            g = Graph.from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
            omega, witness = clique_number(g)
            assert omega == clique_number_subsets(g)
            assert is_clique(g, witness) and len(witness) == omega


class TestPerfection:
    def test_five_cycle_imperfect(self):
        assert not is_perfect_bruteforce(Graph.cycle(5))

    def test_bipartite_perfect(self):
        rng = random.Random(12)
        checked = 0
        while checked < 20:
            n = rng.randint(2, 9)
            g = Graph.from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
            if not is_bipartite(g):
                continue
            assert is_perfect_bruteforce(g)
            assert naive_chromatic(g) == clique_number(g)[0]
            checked += 1

    def test_c7_complement_imperfect(self):
        g = c7_complement()
        assert not is_perfect_bruteforce(g)
        assert naive_chromatic(g) == 4 and clique_number(g)[0] == 3

    def test_size_cap(self):
        with pytest.raises(ValueError):
            is_perfect_bruteforce(Graph.empty(13))


class TestHitStaleness:
    def test_stale_hit_rejected_after_edge_addition(self):
        g = Graph.cycle(5)
        hit = find_odd_hole(g)
        # adding a chord makes the old witness non-induced
        g2 = Graph.from_edges(5, g.edges() + [(0, 2)])
        assert verify_hit(g, hit)
        assert not verify_hit(g2, hit)

    def test_wrong_vertex_count(self):
        from heptalab.detect import PatternHit

        assert not verify_hit(Graph.cycle(5), PatternHit("odd_hole", (0, 1, 2, 3, 3), 5))
