"""Recognition machinery for the two structured graph classes.

The toolkit works with three related part systems:

* an 11-part ring where consecutive parts (distance 1 and 2) are
  anticomplete and distant parts (distance 3, 4, 5) are complete;
* a 7-part ring ("heptagram") where distance 3 pairs are anticomplete,
  distance 1 and 2 pairs are linked, and three local coherence rules tie
  consecutive parts together;
* the 7-part ring extended with seven optional stable outer groups, each
  attached to one ring part and the two parts opposite it, under rules
  "1" through "10" checked by ``verify_heptagram_type``.

Rule identifiers are opaque labels; each verifier's docstring states what
the numbered rules check.  Everything here is pure and deterministic:
verifiers scan exhaustively, recognizers grow witnesses greedily from a
seeded embedding with exhaustive fallbacks at small sizes, and generators
build instances part by part.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .detect import c7_complement, iter_induced_embeddings
from .graph import Graph, iter_bits, mask_of


class GenerationError(ValueError):
    """Requested instance shape violates a class rule (named in ``rule``)."""

    def __init__(self, message: str, rule: str | None = None):
        super().__init__(message)
        self.rule = rule


@dataclass(frozen=True)
class StructureVerdict:
    ok: bool
    rule: str | None = None
    witness: tuple[int, ...] | None = None


def _dihedral_maps(m: int) -> list[tuple[int, ...]]:
    maps = []
    for a in range(m):
        maps.append(tuple((j + a) % m for j in range(m)))
        maps.append(tuple((a - j) % m for j in range(m)))
    return maps


def _min_relabel(
    parts_groups: tuple[tuple[frozenset[int], ...], ...],
    maps: Iterable[tuple[int, ...]],
) -> tuple[tuple[frozenset[int], ...], ...]:
    """Pick the index relabeling minimizing (size vectors, sorted contents)."""

    def key(groups: tuple[tuple[frozenset[int], ...], ...]):
        sizes = tuple(tuple(len(p) for p in g) for g in groups)
        contents = tuple(tuple(tuple(sorted(p)) for p in g) for g in groups)
        return (sizes, contents)

    best = None
    for sigma in maps:
        cand = tuple(tuple(g[sigma[j]] for j in range(len(g))) for g in parts_groups)
        if best is None or key(cand) < key(best):
            best = cand
    assert best is not None
    return best


@dataclass(frozen=True)
class T11Witness:
    """Eleven disjoint nonempty stable parts on a ring, anticomplete at
    distance 1 and 2 and complete at distance 3, 4, 5."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.parts) != 11:
            raise ValueError("exactly 11 parts required")

    def size_vector(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def canonical(self) -> "T11Witness":
        (parts,) = _min_relabel((self.parts,), _dihedral_maps(11))
        return T11Witness(parts)

    def to_json_dict(self) -> dict:
        return {"kind": "t11_type", "parts": [sorted(p) for p in self.parts]}


@dataclass(frozen=True)
class HeptagramWitness:
    """Seven disjoint nonempty stable parts, ring-indexed mod 7."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.parts) != 7:
            raise ValueError("exactly 7 parts required")

    def size_vector(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def canonical(self) -> "HeptagramWitness":
        (parts,) = _min_relabel((self.parts,), _dihedral_maps(7))
        return HeptagramWitness(parts)

    def to_json_dict(self) -> dict:
        return {"kind": "heptagram", "parts": [sorted(p) for p in self.parts]}


# The full-class rules are not rotation symmetric: only the identity and the
# reflection j -> 2 - j preserve the designated linked pairs and the special
# (0, 1, 2) triple.
_TYPE_MAPS = (tuple(range(7)), tuple((2 - j) % 7 for j in range(7)))


@dataclass(frozen=True)
class HeptagramTypeWitness:
    """Seven nonempty ring parts plus seven optional outer groups which,
    together, partition the vertex set."""

    ring: tuple[frozenset[int], ...]
    outer: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.ring) != 7 or len(self.outer) != 7:
            raise ValueError("exactly 7 ring parts and 7 outer groups required")

    def size_vector(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (
            tuple(len(p) for p in self.ring),
            tuple(len(p) for p in self.outer),
        )

    def canonical(self) -> "HeptagramTypeWitness":
        ring, outer = _min_relabel((self.ring, self.outer), _TYPE_MAPS)
        return HeptagramTypeWitness(ring, outer)

    def to_json_dict(self) -> dict:
        return {
            "kind": "heptagram_type",
            "parts": [sorted(p) for p in self.ring] + [sorted(p) for p in self.outer],
        }


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------


def _first_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _edge_between(g: Graph, a: int, b: int) -> tuple[int, int] | None:
    """First (u, v) with u in mask a, v in mask b, uv an edge; None if the
    masks are anticomplete."""
    for u in iter_bits(a):
        hit = g.rows[u] & b
        if hit:
            return (u, _first_bit(hit))
    return None


def _missing_edge(g: Graph, a: int, b: int) -> tuple[int, int] | None:
    """First (u, v) with u in a, v in b, uv not an edge; None if complete."""
    for u in iter_bits(a):
        miss = b & ~g.rows[u]
        if miss:
            return (u, _first_bit(miss))
    return None


def _unlinked_vertex(g: Graph, a: int, b: int) -> int | None:
    for u in iter_bits(a):
        if not g.rows[u] & b:
            return u
    for v in iter_bits(b):
        if not g.rows[v] & a:
            return v
    return None


def _check_sets(g: Graph, parts: Iterable[frozenset[int]]) -> None:
    for part in parts:
        for v in part:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")


def verify_t11_type(g: Graph, w: T11Witness) -> StructureVerdict:
    """Check the 11-ring conditions.

    Rules: "partition" (parts disjoint and covering), "nonempty", "stable",
    "anticomplete" (ring distance 1 and 2), "complete" (distance 3, 4, 5).
    """
    _check_sets(g, w.parts)
    masks = [mask_of(p) for p in w.parts]
    union = 0
    for m in masks:
        if union & m:
            return StructureVerdict(False, "partition", (_first_bit(union & m),))
        union |= m
    if union != (1 << g.n) - 1:
        missing = ~union & ((1 << g.n) - 1)
        return StructureVerdict(False, "partition", (_first_bit(missing),))
    for i, m in enumerate(masks):
        if not m:
            return StructureVerdict(False, "nonempty", (i,))
        hit = _edge_between(g, m, m)
        if hit:
            return StructureVerdict(False, "stable", hit)
    for i in range(11):
        for d in (1, 2):
            hit = _edge_between(g, masks[i], masks[(i + d) % 11])
            if hit:
                return StructureVerdict(False, "anticomplete", hit)
        for d in (3, 4, 5):
            miss = _missing_edge(g, masks[i], masks[(i + d) % 11])
            if miss:
                return StructureVerdict(False, "complete", miss)
    return StructureVerdict(True)


def verify_heptagram(g: Graph, w: HeptagramWitness) -> StructureVerdict:
    """Check the 7-ring conditions, rules "1" through "6".

    "1" disjoint nonempty stable parts; "2" distance 3 pairs anticomplete;
    "3" parts at distance 1 and 2 pairwise linked; "4" a vertex adjacent to
    neighbors on both sides forces that pair adjacent; "5" a vertex adjacent
    to neither forces the pair nonadjacent; "6" for a cross pair of edges
    u-w, v-x spanning four consecutive parts, u-v or w-x must be an edge.
    """
    _check_sets(g, w.parts)
    masks = [mask_of(p) for p in w.parts]
    union = 0
    for i, m in enumerate(masks):
        if not m:
            return StructureVerdict(False, "1", (i,))
        if union & m:
            return StructureVerdict(False, "1", (_first_bit(union & m),))
        union |= m
        hit = _edge_between(g, m, m)
        if hit:
            return StructureVerdict(False, "1", hit)
    rows = g.rows
    for i in range(7):
        hit = _edge_between(g, masks[i], masks[(i + 3) % 7])
        if hit:
            return StructureVerdict(False, "2", hit)
    for i in range(7):
        for d in (1, 2):
            v = _unlinked_vertex(g, masks[i], masks[(i + d) % 7])
            if v is not None:
                return StructureVerdict(False, "3", (v,))
    for i in range(7):
        prev, cur, nxt = masks[(i + 6) % 7], masks[i], masks[(i + 1) % 7]
        for v in iter_bits(cur):
            back, fwd = rows[v] & prev, rows[v] & nxt
            for u in iter_bits(back):
                miss = fwd & ~rows[u]
                if miss:
                    return StructureVerdict(False, "4", (u, v, _first_bit(miss)))
    for i in range(7):
        prev, cur, nxt = masks[(i + 6) % 7], masks[i], masks[(i + 1) % 7]
        for v in iter_bits(cur):
            back, fwd = prev & ~rows[v], nxt & ~rows[v]
            for u in iter_bits(back):
                hit = rows[u] & fwd
                if hit:
                    return StructureVerdict(False, "5", (u, v, _first_bit(hit)))
    for i in range(7):
        a, b = masks[(i + 6) % 7], masks[i]
        c, d = masks[(i + 1) % 7], masks[(i + 2) % 7]
        for u in iter_bits(a):
            for wv in iter_bits(rows[u] & c):
                bad_v = b & ~rows[u]
                bad_x = d & ~rows[wv]
                for v in iter_bits(bad_v):
                    hit = rows[v] & bad_x
                    if hit:
                        return StructureVerdict(
                            False, "6", (u, v, wv, _first_bit(hit))
                        )
    return StructureVerdict(True)


# ring-pair regimes for the full class, 0-indexed: (i, j) -> required relation
_COMPLETE_PAIRS = (
    (1, 3), (2, 4), (3, 5), (4, 6), (5, 0), (6, 1),  # distance-2 pairs, rule "2"
    (2, 3), (3, 4), (5, 6), (6, 0),  # distance-1 pairs, rule "3"
)
_LINKED_PAIRS_2 = ((0, 2),)
_LINKED_PAIRS_3 = ((0, 1), (1, 2), (4, 5))


def verify_heptagram_type(g: Graph, w: HeptagramTypeWitness) -> StructureVerdict:
    """Check the full-class conditions, rules "1" through "10".

    Preamble rules: "partition" (the 14 sets partition the vertex set),
    "nonempty" (ring parts), "stable" (all 14 sets).  Numbered rules:
    "1" ring distance 3 anticomplete; "2" distance 2 pairs complete except
    (0,2) which is only linked; "3" distance 1 pairs (2,3),(3,4),(5,6),(6,0)
    complete and (0,1),(1,2),(4,5) linked; "4"/"5" the coherence conditions
    on the (0,1,2) triple; "6" outer group i sees ring parts i and i+-3 and
    nothing else on the ring; "7" per-vertex neighborhood coherence for
    outer vertices; "8" consecutive outer groups complete, distance 2 and 3
    anticomplete; "9" an outer group not complete to its two far parts
    forces those far parts complete to their distance-2 neighbors and the
    four surrounding outer groups empty; "10" among any three consecutive
    outer groups one is empty.
    """
    _check_sets(g, list(w.ring) + list(w.outer))
    ring = [mask_of(p) for p in w.ring]
    outer = [mask_of(p) for p in w.outer]
    union = 0
    for m in ring + outer:
        if union & m:
            return StructureVerdict(False, "partition", (_first_bit(union & m),))
        union |= m
    if union != (1 << g.n) - 1:
        missing = ~union & ((1 << g.n) - 1)
        return StructureVerdict(False, "partition", (_first_bit(missing),))
    for i in range(7):
        if not ring[i]:
            return StructureVerdict(False, "nonempty", (i,))
    for m in ring + outer:
        hit = _edge_between(g, m, m)
        if hit:
            return StructureVerdict(False, "stable", hit)

    rows = g.rows
    for i in range(7):
        hit = _edge_between(g, ring[i], ring[(i + 3) % 7])
        if hit:
            return StructureVerdict(False, "1", hit)
    for idx, (i, j) in enumerate(_COMPLETE_PAIRS):
        miss = _missing_edge(g, ring[i], ring[j])
        if miss:
            return StructureVerdict(False, "2" if idx < 6 else "3", miss)
    for i, j in _LINKED_PAIRS_2:
        v = _unlinked_vertex(g, ring[i], ring[j])
        if v is not None:
            return StructureVerdict(False, "2", (v,))
    for i, j in _LINKED_PAIRS_3:
        v = _unlinked_vertex(g, ring[i], ring[j])
        if v is not None:
            return StructureVerdict(False, "3", (v,))

    for v in iter_bits(ring[1]):
        back, fwd = rows[v] & ring[0], rows[v] & ring[2]
        for u in iter_bits(back):
            miss = fwd & ~rows[u]
            if miss:
                return StructureVerdict(False, "4", (u, v, _first_bit(miss)))
        back, fwd = ring[0] & ~rows[v], ring[2] & ~rows[v]
        for u in iter_bits(back):
            hit = rows[u] & fwd
            if hit:
                return StructureVerdict(False, "5", (u, v, _first_bit(hit)))

    for i in range(7):
        near = ring[(i + 1) % 7] | ring[(i + 2) % 7] | ring[(i + 5) % 7] | ring[(i + 6) % 7]
        for y in iter_bits(outer[i]):
            for j in (i, (i + 3) % 7, (i + 4) % 7):
                if not rows[y] & ring[j]:
                    return StructureVerdict(False, "6", (y, j))
            hit = rows[y] & near
            if hit:
                return StructureVerdict(False, "6", (y, _first_bit(hit)))
    for i in range(7):
        far_hi, far_lo = ring[(i + 3) % 7], ring[(i + 4) % 7]
        near = ring[(i + 1) % 7] | ring[(i + 2) % 7] | ring[(i + 5) % 7] | ring[(i + 6) % 7]
        for y in iter_bits(outer[i]):
            n_hi, n_lo = rows[y] & far_hi, rows[y] & far_lo
            n_center = rows[y] & ring[i]
            miss = _missing_edge(g, n_hi, n_lo)
            if miss:
                return StructureVerdict(False, "7", (y,) + miss)
            hit = _edge_between(g, n_hi, far_lo & ~n_lo)
            if hit is None:
                hit = _edge_between(g, n_lo, far_hi & ~n_hi)
            if hit:
                return StructureVerdict(False, "7", (y,) + hit)
            miss = _missing_edge(g, n_center, near)
            if miss:
                return StructureVerdict(False, "7", (y,) + miss)
    for i in range(7):
        miss = _missing_edge(g, outer[i], outer[(i + 1) % 7])
        if miss:
            return StructureVerdict(False, "8", miss)
        for d in (2, 3):
            hit = _edge_between(g, outer[i], outer[(i + d) % 7])
            if hit:
                return StructureVerdict(False, "8", hit)
    for i in range(7):
        far = ring[(i + 3) % 7] | ring[(i + 4) % 7]
        if _missing_edge(g, outer[i], far) is None:
            continue
        flank = ring[(i + 2) % 7] | ring[(i + 5) % 7]
        miss = _missing_edge(g, far, flank)
        if miss:
            return StructureVerdict(False, "9", (i,) + miss)
        for d in (1, 3, 4, 6):
            if outer[(i + d) % 7]:
                return StructureVerdict(False, "9", (i, _first_bit(outer[(i + d) % 7])))
    for i in range(7):
        if outer[i] and outer[(i + 1) % 7] and outer[(i + 2) % 7]:
            return StructureVerdict(False, "10", (i,))
    return StructureVerdict(True)


# ---------------------------------------------------------------------------
# vertex taxonomy relative to a 7-ring
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexClassification:
    vertex: int
    kind: str  # "y_vertex" | "hat" | "tail_member" | "local" | "unclassifiable"
    ring_index: int | None = None
    window: tuple[int, int, int] | None = None
    neighborhoods: tuple[frozenset[int], ...] = ()


@dataclass(frozen=True)
class Tail:
    """An odd induced path outside the ring whose first vertex attaches to
    the two parts opposite ``ring_index`` and whose last attaches to the
    part itself."""

    vertices: tuple[int, ...]
    ring_index: int


def _anchor_coherent(g: Graph, v: int, far_hi: int, far_lo: int) -> bool:
    """Neighborhood coherence at an attachment vertex: its two far-part
    neighborhoods are complete to each other and anticomplete to the
    non-neighbors of the opposite part."""
    n_hi, n_lo = g.rows[v] & far_hi, g.rows[v] & far_lo
    if _missing_edge(g, n_hi, n_lo):
        return False
    if _edge_between(g, n_hi, far_lo & ~n_lo):
        return False
    if _edge_between(g, n_lo, far_hi & ~n_hi):
        return False
    return True


def classify_vertex(g: Graph, w: HeptagramWitness, v: int) -> VertexClassification:
    """Classify an outside vertex by its ring neighborhoods.

    Priority: "y_vertex" (attached to part t and both far parts, with the
    coherence conditions); then "hat" (attached to exactly the two far
    parts, coherently); then "local" (all neighbors inside a window of
    three consecutive parts; the reported window prefers a nonempty center,
    then the smallest center index); else "unclassifiable".
    """
    masks = [mask_of(p) for p in w.parts]
    union = 0
    for m in masks:
        union |= m
    if (1 << v) & union:
        raise ValueError(f"vertex {v} lies inside the ring parts")
    rows = g.rows
    neigh = tuple(frozenset(iter_bits(rows[v] & m)) for m in masks)
    nonempty = [i for i in range(7) if neigh[i]]

    for t in range(7):
        hi, lo = (t + 3) % 7, (t + 4) % 7
        if set(nonempty) != {t, hi, lo}:
            continue
        near = masks[(t + 1) % 7] | masks[(t + 2) % 7] | masks[(t + 5) % 7] | masks[(t + 6) % 7]
        if not _anchor_coherent(g, v, masks[hi], masks[lo]):
            continue
        center = rows[v] & masks[t]
        if _missing_edge(g, center, near):
            continue
        return VertexClassification(v, "y_vertex", ring_index=t, neighborhoods=neigh)

    for t in range(7):
        hi, lo = (t + 3) % 7, (t + 4) % 7
        if set(nonempty) != {hi, lo}:
            continue
        if _anchor_coherent(g, v, masks[hi], masks[lo]):
            return VertexClassification(v, "hat", ring_index=t, neighborhoods=neigh)

    windows = [
        i
        for i in range(7)
        if all(j in ((i + 6) % 7, i, (i + 1) % 7) for j in nonempty)
    ]
    if windows:
        centered = [i for i in windows if neigh[i]]
        center = min(centered) if centered else min(windows)
        return VertexClassification(
            v,
            "local",
            window=((center + 6) % 7, center, (center + 1) % 7),
            neighborhoods=neigh,
        )
    return VertexClassification(v, "unclassifiable", neighborhoods=neigh)


def find_tails(g: Graph, w: HeptagramWitness, outside: Iterable[int]) -> list[Tail]:
    """Enumerate the odd induced paths outside the ring satisfying all six
    attachment conditions; single attached vertices count as length-zero
    paths.  Deterministic order: by ring index, then by path."""
    out_set = sorted(set(outside))
    masks = [mask_of(p) for p in w.parts]
    union = 0
    for m in masks:
        union |= m
    out_mask = mask_of(out_set)
    if out_mask & union:
        raise ValueError("outside vertices overlap the ring parts")
    rows = g.rows
    tails: list[Tail] = []

    for t in range(7):
        core = masks[t]
        far_hi, far_lo = masks[(t + 3) % 7], masks[(t + 4) % 7]
        side = masks[(t + 1) % 7] | masks[(t + 6) % 7]
        diag_hi, diag_lo = masks[(t + 2) % 7], masks[(t + 5) % 7]
        ring_near = side  # never allowed anywhere on the path

        def emit_ok(path: tuple[int, ...], hit_hi: bool, hit_lo: bool) -> bool:
            if len(path) % 2 == 0 or (hit_hi and hit_lo):
                return False
            head_core = rows[path[-1]] & core
            if not head_core:
                return False
            target = side | diag_hi | diag_lo
            return _missing_edge(g, head_core, target) is None

        for start in out_set:
            if not (rows[start] & far_hi and rows[start] & far_lo):
                continue
            if rows[start] & ring_near:
                continue
            if not _anchor_coherent(g, start, far_hi, far_lo):
                continue
            h0 = bool(rows[start] & diag_hi)
            l0 = bool(rows[start] & diag_lo)
            # stack entries: (path, blocked mask for induced-ness, hit flags)
            stack = [((start,), 1 << start, h0, l0)]
            while stack:
                path, blocked, hit_hi, hit_lo = stack.pop()
                head = path[-1]
                if emit_ok(path, hit_hi, hit_lo):
                    tails.append(Tail(path, t))
                if rows[head] & core:
                    continue  # interior vertices may not touch the core part
                ext = rows[head] & out_mask & ~blocked
                for nxt in sorted(iter_bits(ext), reverse=True):
                    if rows[nxt] & (far_hi | far_lo | ring_near):
                        continue
                    nh = hit_hi or bool(rows[nxt] & diag_hi)
                    nl = hit_lo or bool(rows[nxt] & diag_lo)
                    if nh and nl:
                        continue
                    stack.append(
                        (path + (nxt,), blocked | rows[head] | (1 << nxt), nh, nl)
                    )
    tails.sort(key=lambda tl: (tl.ring_index, tl.vertices))
    return tails


def classify_outside_vertices(
    g: Graph, w: HeptagramWitness, outside: Iterable[int]
) -> dict[int, VertexClassification]:
    """Per-vertex taxonomy for a whole outside set; interior members of
    found tails are reported as "tail_member" when not already attachment
    vertices in their own right."""
    out_set = sorted(set(outside))
    result = {v: classify_vertex(g, w, v) for v in out_set}
    in_tail = {v for tail in find_tails(g, w, out_set) for v in tail.vertices}
    for v in out_set:
        if result[v].kind in ("local", "unclassifiable") and v in in_tail:
            result[v] = VertexClassification(
                v, "tail_member", neighborhoods=result[v].neighborhoods
            )
    return result


# ---------------------------------------------------------------------------
# recognizers
# ---------------------------------------------------------------------------


def _t11_fits(g: Graph, masks: list[int], v: int, i: int) -> bool:
    row = g.rows[v]
    for d in range(11):
        m = masks[(i + d) % 11]
        if d in (0, 1, 2, 9, 10):
            if row & m:
                return False
        else:
            if m & ~row:
                return False
    return True


def recognize_t11_type(g: Graph) -> T11Witness | None:
    """Recover an 11-ring witness, or None.

    Seeds singleton parts from an embedded 11-vertex circulant core, then
    assigns every vertex matching a unique index, iterating to fixpoint.
    For n <= 14 an exhaustive leftover assignment backs up the greedy pass.
    """
    if g.n < 11:
        return None
    core = Graph.circulant(11, (3, 4, 5))
    embeddings = iter_induced_embeddings(g, core)
    for emb in embeddings:
        masks = [1 << emb[i] for i in range(11)]
        rest = sorted(set(range(g.n)) - set(emb))
        progress = True
        while rest and progress:
            progress = False
            still = []
            for v in rest:
                fits = [i for i in range(11) if _t11_fits(g, masks, v, i)]
                if len(fits) == 1:
                    masks[fits[0]] |= 1 << v
                    progress = True
                else:
                    still.append(v)
            rest = still
        if not rest:
            w = T11Witness(tuple(frozenset(iter_bits(m)) for m in masks))
            if verify_t11_type(g, w).ok:
                return w.canonical()
    if g.n <= 14:
        for emb in iter_induced_embeddings(g, core):
            rest = sorted(set(range(g.n)) - set(emb))
            for combo in product(range(11), repeat=len(rest)):
                masks = [1 << emb[i] for i in range(11)]
                for v, i in zip(rest, combo):
                    masks[i] |= 1 << v
                w = T11Witness(tuple(frozenset(iter_bits(m)) for m in masks))
                if verify_t11_type(g, w).ok:
                    return w.canonical()
    return None


def _grow_heptagram(g: Graph, seed: tuple[int, ...]) -> HeptagramWitness:
    """Greedy fixpoint growth: each unused vertex joins the first part where
    the ring conditions still verify; passes repeat until stable.

    Full reverification is attempted only for placements that pass the two
    mask-checkable necessary conditions (stability within the part,
    anticompleteness to the parts at offsets 3 and 4)."""
    parts = [{seed[i]} for i in range(7)]
    masks = [1 << seed[i] for i in range(7)]
    used = set(seed)
    while True:
        added = False
        for v in range(g.n):
            if v in used:
                continue
            row = g.rows[v]
            for i in range(7):
                if row & (masks[i] | masks[(i + 3) % 7] | masks[(i + 4) % 7]):
                    continue
                parts[i].add(v)
                w = HeptagramWitness(tuple(frozenset(p) for p in parts))
                if verify_heptagram(g, w).ok:
                    masks[i] |= 1 << v
                    used.add(v)
                    added = True
                    break
                parts[i].discard(v)
        if not added:
            return HeptagramWitness(tuple(frozenset(p) for p in parts))


def _orient_heptagram_type(
    g: Graph, ring: tuple[frozenset[int], ...], groups: list[set[int]]
) -> HeptagramTypeWitness | None:
    for sigma in _dihedral_maps(7):
        cand = HeptagramTypeWitness(
            tuple(ring[sigma[j]] for j in range(7)),
            tuple(frozenset(groups[sigma[j]]) for j in range(7)),
        )
        if verify_heptagram_type(g, cand).ok:
            return cand.canonical()
    return None


def recognize_heptagram_type(g: Graph) -> HeptagramTypeWitness | None:
    """Recover a full-class witness, or None.

    Seeds a singleton ring from an embedded 7-vertex antihole, grows it
    greedily, classifies the remainder, and tries every ring orientation
    against the full rule set.  Growth runs once per embedded antihole
    vertex set: its acceptance test is symmetric under the antihole's
    automorphisms, and the orientation sweep downstream restores every
    index alignment, so relabeled seeds are redundant restarts.  For
    n <= 12 an exhaustive assignment of leftover vertices backs up the
    greedy pass (there the seed labeling pins the alignment, so all
    labelings are kept).
    """
    if g.n < 7:
        return None
    pat = c7_complement()
    seen_cores: set[frozenset[int]] = set()
    for emb in iter_induced_embeddings(g, pat):
        core = frozenset(emb)
        if core in seen_cores:
            continue
        seen_cores.add(core)
        w = _grow_heptagram(g, emb)
        covered = set()
        for p in w.parts:
            covered |= p
        groups: list[set[int]] = [set() for _ in range(7)]
        ok = True
        for v in range(g.n):
            if v in covered:
                continue
            cls = classify_vertex(g, w, v)
            if cls.kind != "y_vertex":
                ok = False
                break
            groups[cls.ring_index].add(v)
        if not ok:
            continue
        found = _orient_heptagram_type(g, w.parts, groups)
        if found is not None:
            return found
    if g.n <= 12:
        return _recognize_heptagram_type_exhaustive(g)
    return None


def _recognize_heptagram_type_exhaustive(g: Graph) -> HeptagramTypeWitness | None:
    pat = c7_complement()
    for emb in iter_induced_embeddings(g, pat):
        rest = sorted(set(range(g.n)) - set(emb))
        ring0 = [1 << emb[i] for i in range(7)]

        def assign(idx: int, ring: list[int], outer: list[int]) -> HeptagramTypeWitness | None:
            if idx == len(rest):
                cand = HeptagramTypeWitness(
                    tuple(frozenset(iter_bits(m)) for m in ring),
                    tuple(frozenset(iter_bits(m)) for m in outer),
                )
                if verify_heptagram_type(g, cand).ok:
                    return cand.canonical()
                return None
            v = rest[idx]
            row = g.rows[v]
            for j in range(7):
                # quick feasibility: stability and the hard anticompleteness
                if row & ring[j] or row & ring[(j + 3) % 7] or row & ring[(j + 4) % 7]:
                    continue
                ring[j] |= 1 << v
                found = assign(idx + 1, ring, outer)
                ring[j] &= ~(1 << v)
                if found:
                    return found
            near_ok = [
                j
                for j in range(7)
                if not row & outer[j]
                and not row
                & (ring[(j + 1) % 7] | ring[(j + 2) % 7] | ring[(j + 5) % 7] | ring[(j + 6) % 7])
            ]
            for j in near_ok:
                outer[j] |= 1 << v
                found = assign(idx + 1, ring, outer)
                outer[j] &= ~(1 << v)
                if found:
                    return found
            return None

        found = assign(0, ring0, [0] * 7)
        if found:
            return found
    return None


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def _layout(sizes: Iterable[int]) -> list[list[int]]:
    parts = []
    nxt = 0
    for s in sizes:
        parts.append(list(range(nxt, nxt + s)))
        nxt += s
    return parts


def generate_t11_type(sizes: Iterable[int]) -> tuple[Graph, T11Witness]:
    """Blow-up of the 11-vertex (3,4,5)-circulant with the given part sizes."""
    sizes = tuple(sizes)
    if len(sizes) != 11:
        raise GenerationError("exactly 11 part sizes required", rule="partition")
    if any(s < 1 for s in sizes):
        raise GenerationError("part sizes must be positive", rule="nonempty")
    parts = _layout(sizes)
    edges = []
    # each unordered part pair at circular distance 3, 4, 5 arises exactly
    # once here (the reverse arc would need distance 6, 7, 8)
    for i in range(11):
        for d in (3, 4, 5):
            for u in parts[i]:
                for v in parts[(i + d) % 11]:
                    edges.append((u, v))
    g = Graph.from_edges(sum(sizes), edges)
    return g, T11Witness(tuple(frozenset(p) for p in parts))


def _validate_outer_sizes(y_sizes: tuple[int, ...]) -> None:
    if any(s < 0 for s in y_sizes):
        raise GenerationError("outer group sizes must be nonnegative", rule="partition")
    for i in range(7):
        if y_sizes[i] and y_sizes[(i + 1) % 7] and y_sizes[(i + 2) % 7]:
            raise GenerationError(
                "three consecutive outer groups are nonempty, violating rule 10 "
                "(each window of three consecutive groups needs an empty one)",
                rule="10",
            )


def generate_heptagram_type(
    w_sizes: Iterable[int],
    y_sizes: Iterable[int] | None = None,
    profile: str = "all_complete",
    rng: random.Random | None = None,
    max_attempts: int = 200,
    stats_out: dict | None = None,
) -> tuple[Graph, HeptagramTypeWitness]:
    """Build a full-class instance with the given ring and outer sizes.

    The default profile makes every linked ring pair fully complete and
    every outer vertex complete to its three attachment parts, which meets
    all ten rules by construction.  The "custom" profile samples sparser
    linkages and partial attachment neighborhoods at random and keeps the
    first draw that verifies; the attempt count lands in ``stats_out`` and
    feasibility is not guaranteed.
    """
    w_sizes = tuple(w_sizes)
    y_sizes = tuple(y_sizes) if y_sizes is not None else (0,) * 7
    if len(w_sizes) != 7 or len(y_sizes) != 7:
        raise GenerationError("exactly 7 ring and 7 outer sizes required", rule="partition")
    if any(s < 1 for s in w_sizes):
        raise GenerationError("ring part sizes must be positive", rule="nonempty")
    _validate_outer_sizes(y_sizes)

    ring = _layout(w_sizes)
    outer = _layout(y_sizes)
    base = sum(w_sizes)
    outer = [[v + base for v in grp] for grp in outer]
    n = base + sum(y_sizes)

    def witness() -> HeptagramTypeWitness:
        return HeptagramTypeWitness(
            tuple(frozenset(p) for p in ring), tuple(frozenset(p) for p in outer)
        )

    def outer_outer_edges() -> list[tuple[int, int]]:
        out = []
        for i in range(7):
            for u in outer[i]:
                for v in outer[(i + 1) % 7]:
                    out.append((min(u, v), max(u, v)))
        return out

    if profile == "all_complete":
        edges = []
        # each distance-1 or distance-2 pair on the 7-ring arises once here
        for i in range(7):
            for d in (1, 2):
                for u in ring[i]:
                    for v in ring[(i + d) % 7]:
                        edges.append((u, v))
        for i in range(7):
            for y in outer[i]:
                for j in (i, (i + 3) % 7, (i + 4) % 7):
                    for v in ring[j]:
                        edges.append((v, y))
        edges.extend(outer_outer_edges())
        g = Graph.from_edges(n, edges)
        if stats_out is not None:
            stats_out["attempts"] = 1
        return g, witness()

    if profile != "custom":
        raise ValueError(f"unknown profile {profile!r}")

    rng = rng if rng is not None else random.Random(0)
    linked_only = set(_LINKED_PAIRS_2) | set(_LINKED_PAIRS_3)
    complete_pairs = set(_COMPLETE_PAIRS)
    last_rule = None
    for attempt in range(1, max_attempts + 1):
        edges = []
        for i, j in complete_pairs:
            for u in ring[i]:
                for v in ring[j]:
                    edges.append((min(u, v), max(u, v)))
        for i, j in linked_only:
            chosen = set()
            for u in ring[i]:
                for v in ring[j]:
                    if rng.random() < 0.7:
                        chosen.add((min(u, v), max(u, v)))
            for u in ring[i]:
                if not any(u in e for e in chosen):
                    v = rng.choice(ring[j])
                    chosen.add((min(u, v), max(u, v)))
            for v in ring[j]:
                if not any(v in e for e in chosen):
                    u = rng.choice(ring[i])
                    chosen.add((min(u, v), max(u, v)))
            edges.extend(chosen)
        for i in range(7):
            for y in outer[i]:
                for j in (i, (i + 3) % 7, (i + 4) % 7):
                    pool = ring[j]
                    pick = [v for v in pool if rng.random() < 0.8]
                    if not pick:
                        pick = [rng.choice(pool)]
                    for v in pick:
                        edges.append((v, y))
        edges.extend(outer_outer_edges())
        g = Graph.from_edges(n, edges)
        cand = witness()
        verdict = verify_heptagram_type(g, cand)
        if verdict.ok:
            if stats_out is not None:
                stats_out["attempts"] = attempt
            return g, cand
        last_rule = verdict.rule
    if stats_out is not None:
        stats_out["attempts"] = max_attempts
    raise GenerationError(
        f"no verifying instance after {max_attempts} draws "
        f"(last violated rule: {last_rule})",
        rule=last_rule,
    )


# ---------------------------------------------------------------------------
# consequence checks
# ---------------------------------------------------------------------------


def heptagram_consequences(g: Graph, w: HeptagramWitness) -> list[str]:
    """Exhaustively check the structural consequences every verified 7-ring
    must satisfy; returns human-readable violations (empty when all hold).

    Checked: completeness propagation (part complete to its successor forces
    completeness to the part two ahead and between its neighbors); for each
    index, the pair (i, i+1) or the pair (i+2, i+3) is complete; there is an
    alignment index t with the stated completeness pattern, and every vertex
    pair spanning distance 4 has common neighbors in the three bridging
    parts plus a length-3 connecting path through the flanking parts.
    """
    masks = [mask_of(p) for p in w.parts]
    rows = g.rows

    def complete(i: int, j: int) -> bool:
        return _missing_edge(g, masks[i % 7], masks[j % 7]) is None

    issues: list[str] = []
    for i in range(7):
        if complete(i, i + 1):
            if not complete(i, i + 2):
                issues.append(
                    f"parts {i},{(i + 1) % 7} complete but {i},{(i + 2) % 7} not"
                )
            if not complete(i - 1, i + 1):
                issues.append(
                    f"parts {i},{(i + 1) % 7} complete but {(i + 6) % 7},{(i + 1) % 7} not"
                )
    for i in range(7):
        if not complete(i, i + 1) and not complete(i + 2, i + 3):
            issues.append(
                f"neither parts {i},{(i + 1) % 7} nor {(i + 2) % 7},{(i + 3) % 7} complete"
            )

    def is_alignment(t: int) -> bool:
        for j in range(7):
            if j != t and not complete(j - 1, j + 1):
                return False
        return all(complete(j, j + 1) for j in (t - 3, t - 2, t + 1, t + 2))

    if not any(is_alignment(t) for t in range(7)):
        issues.append("no alignment index with the required completeness pattern")

    for i in range(7):
        a, b = masks[(i + 5) % 7], masks[(i + 2) % 7]
        for u in iter_bits(a):
            for v in iter_bits(b):
                for j in ((i + 4) % 7, i, (i + 3) % 7):
                    if not rows[u] & rows[v] & masks[j]:
                        issues.append(
                            f"vertices {u},{v} lack a common neighbor in part {j}"
                        )
                mid_a = rows[u] & masks[(i + 6) % 7]
                ok = any(rows[x] & rows[v] & masks[(i + 1) % 7] for x in iter_bits(mid_a))
                if not ok:
                    issues.append(
                        f"no length-3 path from {u} to {v} through parts "
                        f"{(i + 6) % 7},{(i + 1) % 7}"
                    )
    return issues
