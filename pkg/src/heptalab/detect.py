"""Detectors for the forbidden configurations and basic graph measures.

The searches here are exact.  ``find_odd_hole`` walks induced paths with
bitmask pruning and returns a shortest induced odd cycle of length at least
five; ``find_full_house`` enumerates 4-cliques and scans for the attached
fifth vertex.  Both have deliberately simple exhaustive counterparts used as
cross-check oracles in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, induced_subgraph, iter_bits, mask_of

MAX_PATTERN_SIZE = 12
MAX_PERFECTION_SIZE = 12


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of its node budget before finishing."""

    def __init__(self, steps: int) -> None:
        super().__init__(f"search budget exhausted after {steps} steps")
        self.steps = steps


@dataclass(frozen=True)
class PatternHit:
    """Witness of an induced configuration: the vertex set plus its kind."""

    kind: str
    vertices: tuple[int, ...]
    length: int | None = None


def full_house_graph() -> Graph:
    """K4 on vertices 0..3 plus vertex 4 seeing both ends of the edge 0-1."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)]
    return Graph.from_edges(5, edges)


def c7_complement() -> Graph:
    """The 7-vertex ring where i ~ j exactly when they are 1 or 2 apart."""
    return Graph.circulant(7, (1, 2))


def find_odd_hole(g: Graph, budget: int | None = None) -> PatternHit | None:
    """Return a shortest induced odd cycle of length >= 5, or None.

    The search enumerates induced paths from each root r using only vertices
    above r, closing cycles back at r.  A ``budget`` bounds the number of
    extension steps; exceeding it raises SearchBudgetExceeded rather than
    returning a possibly wrong answer.
    """
    n = g.n
    if n < 5:
        return None
    rows = g.rows
    best: tuple[int, ...] | None = None
    steps = 0

    for r in range(n - 4):
        higher = ~((1 << (r + 1)) - 1)
        root_row = rows[r]
        # stack entries: (path, mid_adj) where mid_adj covers neighbors of
        # the interior vertices path[1:-1]; the root is excluded so that
        # closers (necessarily adjacent to the root) survive the mask
        stack = [((r, v1), 0) for v1 in iter_bits(root_row & higher)]
        while stack:
            path, mid_adj = stack.pop()
            head = path[-1]
            k = len(path) - 1
            if budget is not None:
                steps += 1
                if steps > budget:
                    raise SearchBudgetExceeded(steps)
            if k >= 3 and k % 2 == 1:
                # close: w adjacent to head and r, above path[1], clear of the interior
                closers = rows[head] & root_row & higher & ~mid_adj & ~((1 << (path[1] + 1)) - 1)
                for w in iter_bits(closers):
                    cycle = path + (w,)
                    if best is None or len(cycle) < len(best):
                        best = cycle
                        if len(best) == 5:
                            return PatternHit("odd_hole", best, 5)
            if best is not None and k + 3 >= len(best):
                continue  # any extension closes at length > current best
            ext = rows[head] & higher & ~mid_adj & ~root_row
            new_mid = mid_adj | rows[head]
            for v in iter_bits(ext):
                stack.append((path + (v,), new_mid))
    if best is None:
        return None
    return PatternHit("odd_hole", best, len(best))


def odd_hole_naive(g: Graph) -> PatternHit | None:
    """Exhaustive cross-check: scan all odd vertex subsets for induced cycles.

    Returns a hit on a smallest odd hole.  Only sensible for small n.
    """
    for size in range(5, g.n + 1, 2):
        for combo in combinations(range(g.n), size):
            if _induces_cycle(g, combo):
                return PatternHit("odd_hole", combo, size)
    return None


def _induces_cycle(g: Graph, vs: tuple[int, ...]) -> bool:
    sel = mask_of(vs)
    for v in vs:
        if (g.rows[v] & sel).bit_count() != 2:
            return False
    # degrees all 2: a cycle iff connected
    start = vs[0]
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.rows[u]
        frontier = nxt & sel & ~seen
        seen |= frontier
    return seen == sel


def find_full_house(g: Graph, all_subsets: bool = False) -> PatternHit | None:
    """Find five vertices inducing a K4 with a pendant vertex on one edge.

    The default route enumerates 4-cliques and scans fifth vertices with
    exactly two neighbors inside.  ``all_subsets=True`` switches to a direct
    scan of every 5-subset (allowed up to n = 12) for cross-checking.
    """
    if all_subsets:
        if g.n > MAX_PERFECTION_SIZE:
            raise ValueError("all-subsets mode supports at most 12 vertices")
        return full_house_naive(g)
    rows = g.rows
    for a in range(g.n):
        above_a = ~((1 << (a + 1)) - 1)
        for b in iter_bits(rows[a] & above_a):
            common_ab = rows[a] & rows[b] & ~((1 << (b + 1)) - 1)
            for c in iter_bits(common_ab):
                common = common_ab & rows[c] & ~((1 << (c + 1)) - 1)
                for d in iter_bits(common):
                    quad = (1 << a) | (1 << b) | (1 << c) | (1 << d)
                    for v in range(g.n):
                        if (1 << v) & quad:
                            continue
                        if (rows[v] & quad).bit_count() == 2:
                            return PatternHit(
                                "full_house", tuple(sorted((a, b, c, d, v)))
                            )
    return None


def full_house_naive(g: Graph) -> PatternHit | None:
    """Scan every 5-subset for the full-house shape.

    Five vertices with eight induced edges and degree multiset {2,3,3,4,4}
    are necessarily a K4 plus a vertex on one edge, so the degree profile is
    a complete test.
    """
    for combo in combinations(range(g.n), 5):
        sel = mask_of(combo)
        degs = sorted((g.rows[v] & sel).bit_count() for v in combo)
        if degs == [2, 3, 3, 4, 4]:
            return PatternHit("full_house", combo)
    return None


def find_induced_embedding(g: Graph, pattern: Graph) -> tuple[int, ...] | None:
    for emb in iter_induced_embeddings(g, pattern):
        return emb
    return None


def iter_induced_embeddings(g: Graph, pattern: Graph):
    """Yield every injective map (pattern vertex -> host vertex) preserving
    both adjacency and non-adjacency.  Backtracking with forward checking on
    candidate bitmasks."""
    if pattern.n > MAX_PATTERN_SIZE:
        raise ValueError(f"pattern larger than the supported cap {MAX_PATTERN_SIZE}")
    if pattern.n > g.n:
        raise ValueError("pattern larger than host")
    p = pattern.n
    if p == 0:
        yield ()
        return
    # most-constrained-first static order: descending degree, connected growth
    order: list[int] = []
    placed = 0
    while len(order) < p:
        cand = [
            v
            for v in range(p)
            if not (placed >> v) & 1
        ]
        cand.sort(key=lambda v: (-(pattern.rows[v] & placed).bit_count(), -pattern.degree(v), v))
        v = cand[0]
        order.append(v)
        placed |= 1 << v
    full = (1 << g.n) - 1
    base = []
    for v in range(p):
        dv = pattern.degree(v)
        base.append(mask_of(u for u in range(g.n) if g.degree(u) >= dv))
    assignment = [-1] * p

    def extend(idx: int, cands: list[int], used: int):
        if idx == p:
            yield tuple(assignment)
            return
        v = order[idx]
        options = cands[v] & ~used
        for u in iter_bits(options):
            assignment[v] = u
            nxt = list(cands)
            ok = True
            for w in order[idx + 1 :]:
                if pattern.adjacent(v, w):
                    nxt[w] = nxt[w] & g.rows[u]
                else:
                    nxt[w] = nxt[w] & ~g.rows[u] & (full ^ (1 << u))
                if not nxt[w] & ~(used | (1 << u)):
                    ok = False
                    break
            if ok:
                yield from extend(idx + 1, nxt, used | (1 << u))
        assignment[v] = -1

    yield from extend(0, base, 0)


def find_induced_pattern(g: Graph, pattern: Graph, kind: str = "custom") -> PatternHit | None:
    """First induced copy of ``pattern`` in ``g`` as a PatternHit, else None."""
    emb = find_induced_embedding(g, pattern)
    if emb is None:
        return None
    return PatternHit(kind, tuple(sorted(emb)))


def has_c7_complement(g: Graph) -> bool:
    return g.n >= 7 and find_induced_embedding(g, c7_complement()) is not None


def verify_hit(g: Graph, hit: PatternHit, pattern: Graph | None = None) -> bool:
    """Re-check a reported hit from scratch against its named pattern."""
    if pattern is None:
        if hit.kind == "odd_hole":
            if hit.length is None or hit.length % 2 == 0 or hit.length < 5:
                return False
            pattern = Graph.cycle(hit.length)
        elif hit.kind == "full_house":
            pattern = full_house_graph()
        elif hit.kind == "c7_complement":
            pattern = c7_complement()
        elif hit.kind == "k4":
            pattern = Graph.complete(4)
        else:
            raise ValueError(f"cannot re-derive pattern for kind {hit.kind!r}")
    if len(set(hit.vertices)) != pattern.n:
        return False
    sub, _ = induced_subgraph(g, hit.vertices)
    return find_induced_embedding(sub, pattern) is not None if sub.n == pattern.n else False


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique size with a witness.

    Branch and bound: candidates are greedily colored and visited in reverse
    color order, pruning branches whose color bound cannot beat the best.
    """
    n = g.n
    if n == 0:
        return 0, ()
    rows = g.rows
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(current) > len(best):
                best = list(current)
            return
        # greedy coloring of the candidate set
        color_of: dict[int, int] = {}
        seq: list[int] = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                color_of[v] = color
                seq.append(v)
                avail &= ~rows[v] & ~((1 << (v + 1)) - 1)
                rest ^= 1 << v
        pool = cand
        for v in reversed(seq):
            if len(current) + color_of[v] <= len(best):
                return
            current.append(v)
            expand(current, pool & rows[v])
            current.pop()
            pool ^= 1 << v

    expand([], (1 << n) - 1)
    return len(best), tuple(sorted(best))


def _chromatic_small(g: Graph) -> int:
    """Plain ascending-k backtracking chromatic number for small graphs."""
    n = g.n
    if n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    rows = g.rows
    colors = [-1] * n

    def feasible(k: int, idx: int) -> bool:
        if idx == n:
            return True
        for c in range(k):
            ok = True
            for v in iter_bits(rows[idx] & ((1 << idx) - 1)):
                if colors[v] == c:
                    ok = False
                    break
            if ok:
                colors[idx] = c
                if feasible(k, idx + 1):
                    colors[idx] = -1
                    return True
                colors[idx] = -1
        return False

    k = 2
    while not feasible(k, 0):
        k += 1
    return k


def is_perfect_bruteforce(g: Graph) -> bool:
    """Check chi == omega on every connected induced subgraph.

    Restricting to connected subgraphs is enough: both invariants are maxima
    over components, so any violation survives in some component.  Capped at
    12 vertices by design.
    """
    if g.n > MAX_PERFECTION_SIZE:
        raise ValueError(f"perfection brute force capped at {MAX_PERFECTION_SIZE} vertices")
    for sub_mask in range(1, 1 << g.n):
        if not _mask_connected(g, sub_mask):
            continue
        sub, _ = induced_subgraph(g, iter_bits(sub_mask))
        omega, _ = clique_number(sub)
        if _chromatic_small(sub) != omega:
            return False
    return True


def _mask_connected(g: Graph, sel: int) -> bool:
    start = sel & -sel
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.rows[u]
        frontier = nxt & sel & ~seen
        seen |= frontier
    return seen == sel
