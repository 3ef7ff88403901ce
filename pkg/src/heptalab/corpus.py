"""Small-graph corpora: exhaustive enumeration up to isomorphism, canonical
labeling, and seeded random samples.

Canonical form is the labeling whose graph6 bit string is lexicographically
minimal, found by placing vertices one position at a time with prefix
pruning.  Exhaustive enumeration extends each (n-1)-vertex representative by
one vertex with every possible neighbor mask and dedups on the canonical
encoding; this is intended for n <= 8.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import Graph, to_graph6

MAX_ENUMERATION_N = 8


def canonical_relabel(g: Graph) -> Graph:
    """Isomorph of g whose graph6 encoding is lexicographically minimal.

    Vertices are placed one position at a time.  At each node only the
    placements whose next column of upper-triangle bits is minimal among the
    remaining vertices are explored (a larger column loses against any
    completion of a smaller one), and whole accumulated prefixes are compared
    against the best full string found so far.
    """
    n = g.n
    if n <= 1 or g.edge_count in (0, n * (n - 1) // 2):
        return g
    rows = g.rows
    hint = sorted(range(n), key=lambda v: (g.degree(v), v))
    best: list[int] | None = None
    best_perm: tuple[int, ...] | None = None

    def rec(placed: list[int], placed_mask: int, bits: list[int]) -> None:
        nonlocal best, best_perm
        if len(placed) == n:
            if best is None or bits < best:
                best = bits
                best_perm = tuple(placed)
            return
        ties: list[tuple[int, list[int]]] = []
        low: list[int] | None = None
        for v in hint:
            if placed_mask & (1 << v):
                continue
            row = rows[v]
            col = [1 if row & (1 << u) else 0 for u in placed]
            if low is None or col < low:
                low = col
                ties = [(v, col)]
            elif col == low:
                ties.append((v, col))
        prefix = bits + low
        if best is not None and prefix > best[: len(prefix)]:
            return
        for v, col in ties:
            placed.append(v)
            rec(placed, placed_mask | (1 << v), bits + col)
            placed.pop()

    rec([], 0, [])
    assert best_perm is not None
    # best_perm[pos] = original vertex placed at that position, which is
    # exactly the argument order relabel expects
    return g.relabel(list(best_perm))


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_relabel(g)).decode("ascii")


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, in canonical form,
    ordered by canonical graph6 string."""
    if not 0 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supported for 0 <= n <= {MAX_ENUMERATION_N}")
    if n == 0:
        return (Graph.empty(0),)
    seen: dict[str, Graph] = {}
    for base in nonisomorphic_graphs(n - 1):
        for neighbor_mask in range(1 << (n - 1)):
            cand = canonical_relabel(base.with_vertex(neighbor_mask))
            seen.setdefault(to_graph6(cand).decode("ascii"), cand)
    return tuple(seen[key] for key in sorted(seen))


def all_graphs_up_to(n_max: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(n_max + 1):
        out.extend(nonisomorphic_graphs(n))
    return out


def random_graphs(count: int, sizes: Sequence[int], seed: int) -> list[Graph]:
    """Uniform edge-probability-1/2 samples with n drawn uniformly from
    ``sizes``; fully determined by the seed."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if not sizes or any(s < 0 for s in sizes):
        raise ValueError("sizes must be nonempty and nonnegative")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = sizes[rng.randrange(len(sizes))]
        pairs = n * (n - 1) // 2
        out.append(Graph.from_edge_mask(n, rng.getrandbits(pairs) if pairs else 0))
    return out


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + b"\n")
