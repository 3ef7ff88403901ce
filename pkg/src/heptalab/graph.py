"""Immutable small graphs with bit-row adjacency, plus the graph6 wire format.

Vertices are dense integers 0..n-1.  Adjacency is one Python int bitmask per
vertex: for n <= 64 each row fits in a machine word, and the same code stays
correct for larger graphs because Python ints are unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

GRAPH6_HEADER = b">>graph6<<"

_SIZE_SHORT_MAX = 62
_SIZE_MEDIUM_MAX = 258047
_SIZE_LONG_MAX = 68719476735


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` points at the offending byte."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class Graph:
    """An immutable simple undirected graph.

    ``rows[u]`` is the neighbor bitmask of vertex ``u``.  Construction
    validates symmetry and rejects loops; instances never mutate, so they
    are safe to share across threads or worker processes.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]) -> None:
        rows = tuple(rows)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        for u, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ValueError(f"row {u} has bits outside the vertex range")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
        for u, row in enumerate(rows):
            m = row
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if not (rows[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
                m ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):  # pragma: no cover - guards misuse
        raise AttributeError("Graph is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Build from a bitmask over vertex pairs.

        Pair bits are ordered (0,1), (0,2), (1,2), (0,3), ... which matches
        the graph6 column-major upper triangle.
        """
        rows = [0] * n
        k = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> k) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        return cls(n, rows)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << u) for u in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def circulant(cls, n: int, offsets: Iterable[int]) -> "Graph":
        """Ring graph: i ~ j iff their circular distance is a listed offset."""
        offs = {d % n for d in offsets} | {(-d) % n for d in offsets}
        offs.discard(0)
        edges = [(i, (i + d) % n) for i in range(n) for d in offs if i < (i + d) % n]
        return cls.from_edges(n, edges)

    # -- queries -----------------------------------------------------------

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> Iterator[int]:
        return iter_bits(self.rows[u])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.rows[u] >> (u + 1)
            while m:
                low = m & -m
                out.append((u, u + 1 + low.bit_length() - 1))
                m ^= low
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edge_mask(self) -> int:
        mask = 0
        k = 0
        for j in range(1, self.n):
            row = self.rows[j]
            for i in range(j):
                if (row >> i) & 1:
                    mask |= 1 << k
                k += 1
        return mask

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= self.rows[u]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components (as bitmasks) of the subgraph induced on
        ``within`` (all vertices when omitted), ordered by smallest member."""
        remaining = (1 << self.n) - 1 if within is None else within
        comps = []
        while remaining:
            start = remaining & -remaining
            seen = start
            frontier = start
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & remaining & ~seen
                seen |= frontier
            comps.append(seen)
            remaining &= ~seen
        return comps

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ r) & ~(1 << u) for u, r in enumerate(self.rows)))

    def with_vertex(self, neighbor_mask: int) -> "Graph":
        """Extend by one vertex adjacent to the vertices in ``neighbor_mask``."""
        if neighbor_mask >> self.n:
            raise ValueError("neighbor mask outside vertex range")
        new = self.n
        rows = [r | ((neighbor_mask >> u & 1) << new) for u, r in enumerate(self.rows)]
        rows.append(neighbor_mask)
        return Graph(self.n + 1, rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with new vertex i taking the role of ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        pos = [0] * self.n
        for new, old in enumerate(perm):
            pos[old] = new
        rows = [0] * self.n
        for new, old in enumerate(perm):
            m = 0
            for v in iter_bits(self.rows[old]):
                m |= 1 << pos[v]
            rows[new] = m
        return Graph(self.n, rows)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges."""
    return g.complement()


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the index map (new index -> original vertex).

    Vertices are taken in ascending order, so the map is the sorted tuple of
    the requested set.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside range")
    pos = {old: new for new, old in enumerate(vs)}
    rows = []
    sel = mask_of(vs)
    for old in vs:
        m = 0
        for w in iter_bits(g.rows[old] & sel):
            m |= 1 << pos[w]
        rows.append(m)
    return Graph(len(vs), rows), tuple(vs)


def is_stable_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True when no two of the given vertices are adjacent."""
    sel = mask_of(vertices)
    for v in iter_bits(sel):
        if g.rows[v] & sel:
            return False
    return True


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    sel = mask_of(vertices)
    for v in iter_bits(sel):
        if (g.rows[v] & sel) != sel ^ (1 << v):
            return False
    return True


@dataclass(frozen=True)
class SetRelation:
    """How two disjoint vertex sets see each other.

    ``complete``: every cross pair is an edge.  ``anticomplete``: no cross
    edges at all.  ``linked``: every vertex on each side has at least one
    neighbor on the other.  ``label`` reports the strongest that applies.
    """

    complete: bool
    anticomplete: bool
    linked: bool

    @property
    def label(self) -> str:
        if self.complete:
            return "complete"
        if self.anticomplete:
            return "anticomplete"
        if self.linked:
            return "linked"
        return "mixed"


def relation(g: Graph, a: Iterable[int], b: Iterable[int]) -> SetRelation:
    am = mask_of(a)
    bm = mask_of(b)
    if (am | bm) >> g.n:
        raise ValueError("vertex outside range")
    if am & bm:
        raise ValueError("sets overlap")
    complete = True
    anticomplete = True
    linked = True
    for u in iter_bits(am):
        hit = g.rows[u] & bm
        if hit != bm:
            complete = False
        if hit:
            anticomplete = False
        else:
            linked = False
    for v in iter_bits(bm):
        if not g.rows[v] & am:
            linked = False
            break
    return SetRelation(complete, anticomplete, linked)


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------


def _encode_size(n: int) -> bytes:
    if n <= _SIZE_SHORT_MAX:
        return bytes([n + 63])
    if n <= _SIZE_MEDIUM_MAX:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    if n <= _SIZE_LONG_MAX:
        return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> bytes:
    """Encode to canonical graph6 bytes (no header, no trailing newline)."""
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _decode_size(data: bytes, base: int) -> tuple[int, int]:
    def word(pos: int) -> int:
        byte = data[pos]
        if not 63 <= byte <= 126:
            raise Graph6Error("size byte out of printable range", base + pos)
        return byte - 63

    b0 = data[0]
    if b0 != 126:
        return word(0), 1
    if len(data) < 2:
        raise Graph6Error("truncated size header", base + 1)
    if data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated size header", base + len(data))
        n = (word(1) << 12) | (word(2) << 6) | word(3)
        if n <= _SIZE_SHORT_MAX:
            raise Graph6Error("non-canonical size header", base)
        return n, 4
    if len(data) < 8:
        raise Graph6Error("truncated size header", base + len(data))
    n = 0
    for pos in range(2, 8):
        n = (n << 6) | word(pos)
    if n <= _SIZE_MEDIUM_MAX:
        raise Graph6Error("non-canonical size header", base)
    return n, 8


def from_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 line.  Accepts an optional ``>>graph6<<`` header and
    a trailing newline; anything else malformed raises ``Graph6Error`` with
    the byte offset of the problem."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII input", exc.start) from None
    while data[-1:] in (b"\n", b"\r"):
        data = data[:-1]
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    if not data:
        raise Graph6Error("empty graph6 payload", base)
    n, used = _decode_size(data, base)
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    payload = data[used:]
    if len(payload) < need:
        raise Graph6Error(
            f"payload too short: need {need} bytes for n={n}", base + len(data)
        )
    if len(payload) > need:
        raise Graph6Error(
            f"payload too long: need {need} bytes for n={n}", base + used + need
        )
    rows = [0] * n
    i, j = 0, 1
    pair = 0
    for k, byte in enumerate(payload):
        if not 63 <= byte <= 126:
            raise Graph6Error("payload byte out of printable range", base + used + k)
        val = byte - 63
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if pair < npairs:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i = 0
                    j += 1
            elif bit:
                raise Graph6Error("nonzero padding bits", base + used + k)
            pair += 1
    return Graph(n, rows)


@dataclass(frozen=True)
class Graph6Record:
    """A decoded graph together with its normalized graph6 text."""

    text: str
    graph: Graph
    line_number: int | None = None

    @classmethod
    def parse(cls, line: bytes | str, line_number: int | None = None) -> "Graph6Record":
        g = from_graph6(line)
        return cls(to_graph6(g).decode("ascii"), g, line_number)


def read_graph6_records(lines: Iterable[bytes | str]) -> Iterator[Graph6Record]:
    """Parse a stream of graph6 lines, skipping blanks, one record per line."""
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip() if isinstance(line, str) else line.strip()
        if not stripped:
            continue
        yield Graph6Record.parse(stripped, lineno)
