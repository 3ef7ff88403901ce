import random

import pytest

from heptalab.detect import c7_complement, find_full_house, find_odd_hole
from heptalab.graph import Graph, relation
from heptalab.structures import (
    GenerationError,
    HeptagramWitness,
    Tail,
    classify_outside_vertices,
    classify_vertex,
    find_tails,
    generate_heptagram_type,
    generate_t11_type,
    heptagram_consequences,
    recognize_heptagram_type,
    recognize_t11_type,
    verify_heptagram,
    verify_heptagram_type,
    verify_t11_type,
)


def naive_heptagram_check(g: Graph, parts) -> bool:
    """Relation-based recheck of the six ring axioms, written independently
    of the verifier's scan order."""
    from heptalab.graph import is_stable_set

    sets = [sorted(p) for p in parts]
    if any(not p for p in sets):
        return False
    seen = set()
    for p in sets:
        for v in p:
            if v in seen:
                return False
            seen.add(v)
    if any(not is_stable_set(g, p) for p in sets):
        return False
    for i in range(7):
        for d in (3, 4):
            if relation(g, sets[i], sets[(i + d) % 7]).label != "anticomplete":
                return False
        for d in (1, 2):
            if not relation(g, sets[i], sets[(i + d) % 7]).linked:
                return False
    for i in range(7):
        a, b, c = sets[(i - 1) % 7], sets[i], sets[(i + 1) % 7]
        for v in b:
            for u in a:
                for w in c:
                    uv, vw, uw = g.adjacent(u, v), g.adjacent(v, w), g.adjacent(u, w)
                    if uv and vw and not uw:
                        return False
                    if not uv and not vw and uw:
                        return False
        for u in a:
            for w in c:
                if not g.adjacent(u, w):
                    continue
                for v in b:
                    for x in sets[(i + 2) % 7]:
                        if g.adjacent(v, x) and not g.adjacent(u, v) and not g.adjacent(w, x):
                            return False
    return True


class TestVerifyHeptagram:
    def test_c7_complement_singletons(self):
        w = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        verdict = verify_heptagram(c7_complement(), w)
        assert verdict.ok

    def test_deleted_edge_breaks_linkage(self):
        g = c7_complement()
        edges = [e for e in g.edges() if e != (0, 1)]
        w = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        verdict = verify_heptagram(Graph.from_edges(7, edges), w)
        assert not verdict.ok and verdict.rule == "3"

    def test_doubled_blowup_with_naive_recheck(self):
        g, tw = generate_heptagram_type([2] * 7)
        w = HeptagramWitness(tw.ring)
        assert verify_heptagram(g, w).ok
        assert naive_heptagram_check(g, w.parts)

    def test_ring_parts_need_not_cover(self):
        # a heptagram ignores vertices outside its parts entirely
        g, tw = generate_heptagram_type([1] * 7, [1, 0, 0, 0, 0, 0, 0])
        assert verify_heptagram(g, HeptagramWitness(tw.ring)).ok


class TestVerifyHeptagramType:
    def test_outer_all_empty(self):
        g, w = generate_heptagram_type([1, 2, 1, 1, 2, 1, 1])
        assert verify_heptagram_type(g, w).ok

    def test_single_outer_vertex(self):
        g, w = generate_heptagram_type([1] * 7, [1, 0, 0, 0, 0, 0, 0])
        verdict = verify_heptagram_type(g, w)
        assert verdict.ok
        y = next(iter(w.outer[0]))
        for j, expect in ((0, "complete"), (3, "complete"), (4, "complete"),
                          (1, "anticomplete"), (2, "anticomplete"),
                          (5, "anticomplete"), (6, "anticomplete")):
            assert relation(g, {y}, w.ring[j]).label == expect

    def test_forbidden_near_edge_names_rule_six(self):
        g, w = generate_heptagram_type([1] * 7, [1, 0, 0, 0, 0, 0, 0])
        y = next(iter(w.outer[0]))
        bad = Graph.from_edges(g.n, g.edges() + [(y, next(iter(w.ring[1])))])
        verdict = verify_heptagram_type(bad, w)
        assert not verdict.ok and verdict.rule == "6"

    def test_missing_vertex_breaks_partition(self):
        g, w = generate_heptagram_type([1] * 7)
        bigger = Graph.from_edges(g.n + 1, g.edges())
        verdict = verify_heptagram_type(bigger, w)
        assert not verdict.ok and verdict.rule == "partition"

    def test_three_consecutive_outer_rejected(self):
        g, w = generate_heptagram_type([1] * 7, [0, 0, 1, 1, 0, 0, 0])
        assert verify_heptagram_type(g, w).ok
        with pytest.raises(GenerationError) as exc:
            generate_heptagram_type([1] * 7, [1, 1, 1, 0, 0, 0, 0])
        assert exc.value.rule == "10"


class TestVerifyT11:
    def test_canonical_circulant(self):
        g, w = generate_t11_type([1] * 11)
        assert g == Graph.circulant(11, (3, 4, 5))
        assert verify_t11_type(g, w).ok

    def test_removed_offset_edge(self):
        g, w = generate_t11_type([1] * 11)
        edges = [e for e in g.edges() if e != (0, 3)]
        verdict = verify_t11_type(Graph.from_edges(11, edges), w)
        assert not verdict.ok and verdict.rule == "complete"

    def test_added_near_edge(self):
        g, w = generate_t11_type([1] * 11)
        verdict = verify_t11_type(Graph.from_edges(11, g.edges() + [(0, 1)]), w)
        assert not verdict.ok and verdict.rule == "anticomplete"

    def test_blowup(self):
        g, w = generate_t11_type([2] + [1] * 10)
        assert g.n == 12 and verify_t11_type(g, w).ok


class TestRecognizeT11:
    def test_canonical(self):
        w = recognize_t11_type(Graph.circulant(11, (3, 4, 5)))
        assert w is not None and all(len(p) == 1 for p in w.parts)

    def test_random_blowups(self):
        rng = random.Random(321)
        for _ in range(25):
            sizes = [rng.randint(1, 3) for _ in range(11)]
            g, _ = generate_t11_type(sizes)
            w = recognize_t11_type(g)
            assert w is not None
            assert verify_t11_type(g, w).ok
            assert sorted(map(len, w.parts)) == sorted(sizes)

    def test_relabeled_blowup(self):
        rng = random.Random(5)
        g, _ = generate_t11_type([2, 1, 1, 2, 1, 1, 1, 1, 3, 1, 1])
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        w = recognize_t11_type(h)
        assert w is not None and verify_t11_type(h, w).ok

    def test_too_small(self):
        assert recognize_t11_type(c7_complement()) is None

    def test_near_miss(self):
        g, _ = generate_t11_type([1] * 11)
        g2 = Graph.from_edges(11, g.edges() + [(0, 1)])
        assert recognize_t11_type(g2) is None


class TestClassifyVertex:
    def make(self, ysizes):
        g, w = generate_heptagram_type([1] * 7, ysizes)
        return g, HeptagramWitness(w.ring), w

    def test_y_vertex(self):
        g, hw, w = self.make([1, 0, 0, 0, 0, 0, 0])
        y = next(iter(w.outer[0]))
        cls = classify_vertex(g, hw, y)
        assert cls.kind == "y_vertex" and cls.ring_index == 0

    def test_hat(self):
        base = c7_complement()
        g = base.with_vertex((1 << 3) | (1 << 4))
        hw = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        cls = classify_vertex(g, hw, 7)
        assert cls.kind == "hat" and cls.ring_index == 0

    def test_local_window(self):
        base = c7_complement()
        g = base.with_vertex(1 << 1)
        hw = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        cls = classify_vertex(g, hw, 7)
        assert cls.kind == "local" and cls.window == (0, 1, 2)

    def test_unclassifiable_spread(self):
        base = c7_complement()
        g = base.with_vertex((1 << 0) | (1 << 3))
        hw = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        assert classify_vertex(g, hw, 7).kind == "unclassifiable"

    def test_ring_vertex_rejected(self):
        hw = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        with pytest.raises(ValueError):
            classify_vertex(c7_complement(), hw, 3)


class TestFindTails:
    def test_y_vertex_is_length_zero_tail(self):
        g, w = generate_heptagram_type([1] * 7, [1, 0, 0, 0, 0, 0, 0])
        hw = HeptagramWitness(w.ring)
        y = next(iter(w.outer[0]))
        assert find_tails(g, hw, [y]) == [Tail((y,), 0)]

    def test_constructed_three_vertex_tail(self):
        # ring is the antihole 0..6; 7 is a hat at parts 3,4; 9 lands on part 0
        base = c7_complement()
        g = base.with_vertex((1 << 3) | (1 << 4))   # 7
        g = g.with_vertex(1 << 7)                    # 8
        g = g.with_vertex((1 << 8) | (1 << 0))       # 9
        hw = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        tails = find_tails(g, hw, [7, 8, 9])
        assert len(tails) == 1
        assert tails[0].vertices == (7, 8, 9) and tails[0].ring_index == 0

    def test_even_path_not_a_tail(self):
        base = c7_complement()
        g = base.with_vertex((1 << 3) | (1 << 4))
        g = g.with_vertex((1 << 7) | (1 << 0))
        hw = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        assert find_tails(g, hw, [7, 8]) == []

    def test_empty_outside(self):
        hw = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        assert find_tails(c7_complement(), hw, []) == []

    def test_outside_taxonomy(self):
        base = c7_complement()
        g = base.with_vertex((1 << 3) | (1 << 4))
        g = g.with_vertex(1 << 7)
        g = g.with_vertex((1 << 8) | (1 << 0))
        hw = HeptagramWitness(tuple(frozenset({i}) for i in range(7)))
        kinds = {v: c.kind for v, c in classify_outside_vertices(g, hw, [7, 8, 9]).items()}
        assert kinds[7] == "hat"
        assert kinds[8] == "tail_member"
        assert kinds[9] == "tail_member"


class TestRecognizeHeptagramType:
    def test_c7_complement(self):
        w = recognize_heptagram_type(c7_complement())
        assert w is not None
        assert all(len(p) == 1 for p in w.ring)
        assert all(not p for p in w.outer)

    def test_round_trip_with_outer_three(self):
        g, gen = generate_heptagram_type([2, 1, 1, 1, 2, 1, 1], [0, 0, 1, 0, 0, 0, 0])
        w = recognize_heptagram_type(g)
        assert w is not None
        assert verify_heptagram_type(g, w).ok
        assert sorted(len(p) for p in w.ring) == sorted(len(p) for p in gen.ring)
        assert sorted(len(p) for p in w.outer) == sorted(len(p) for p in gen.outer)

    def test_five_cycle_rejected(self):
        assert recognize_heptagram_type(Graph.cycle(5)) is None

    def test_relabeled_instance(self):
        rng = random.Random(44)
        g, _ = generate_heptagram_type([1, 2, 1, 1, 1, 1, 2], [0, 1, 0, 0, 1, 0, 0])
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        w = recognize_heptagram_type(h)
        assert w is not None and verify_heptagram_type(h, w).ok


class TestGenerators:
    def test_t11_sizes_validated(self):
        with pytest.raises(GenerationError):
            generate_t11_type([0] + [1] * 10)
        with pytest.raises(GenerationError):
            generate_t11_type([1] * 10)

    def test_t11_random_vectors_stay_in_class(self):
        rng = random.Random(777)
        for _ in range(50):
            sizes = [rng.randint(1, 3) for _ in range(11)]
            g, w = generate_t11_type(sizes)
            assert verify_t11_type(g, w).ok
            assert find_odd_hole(g) is None
            assert find_full_house(g) is None

    def test_heptagram_minimal_is_antihole(self):
        g, _ = generate_heptagram_type([1] * 7)
        assert g == c7_complement()

    def test_heptagram_eight_vertex(self):
        g, w = generate_heptagram_type([1] * 7, [1, 0, 0, 0, 0, 0, 0])
        assert g.n == 8
        assert verify_heptagram_type(g, w).ok
        assert find_odd_hole(g) is None and find_full_house(g) is None

    def test_custom_profile_reports_attempts(self):
        stats = {}
        g, w = generate_heptagram_type(
            [2, 1, 2, 1, 1, 1, 1],
            [0, 1, 0, 0, 0, 0, 0],
            profile="custom",
            rng=random.Random(13),
            stats_out=stats,
        )
        assert verify_heptagram_type(g, w).ok
        assert stats["attempts"] >= 1

    def test_unknown_profile(self):
        with pytest.raises(ValueError):
            generate_heptagram_type([1] * 7, profile="sparse")


class TestConsequences:
    def test_generated_instances_clean(self):
        rng = random.Random(2718)
        for _ in range(20):
            sizes = [rng.randint(1, 3) for _ in range(7)]
            g, w = generate_heptagram_type(sizes)
            assert heptagram_consequences(g, HeptagramWitness(w.ring)) == []

    def test_custom_instances_clean(self):
        rng = random.Random(6)
        for _ in range(10):
            g, w = generate_heptagram_type(
                [2, 1, 1, 2, 1, 1, 1], profile="custom", rng=rng
            )
            assert heptagram_consequences(g, HeptagramWitness(w.ring)) == []


class TestWitnessSerialization:
    def test_t11_json(self):
        _, w = generate_t11_type([2] + [1] * 10)
        d = w.to_json_dict()
        assert d["kind"] == "t11_type"
        assert sorted(map(tuple, d["parts"])) == sorted(
            tuple(sorted(p)) for p in w.parts
        )

    def test_heptagram_type_json(self):
        _, w = generate_heptagram_type([1] * 7, [1, 0, 0, 0, 0, 0, 0])
        d = w.to_json_dict()
        assert d["kind"] == "heptagram_type"
        assert len(d["parts"]) == 14

    def test_canonical_is_idempotent_and_minimal(self):
        _, w = generate_t11_type([3, 1, 2, 1, 1, 2, 1, 1, 1, 1, 1])
        c = w.canonical()
        assert c.canonical() == c
        sizes = w.size_vector()
        images = [
            tuple(sizes[(a + j) % 11] for j in range(11)) for a in range(11)
        ] + [
            tuple(sizes[(a - j) % 11] for j in range(11)) for a in range(11)
        ]
        assert c.size_vector() == min(images)
