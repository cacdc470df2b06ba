"""Labeled simple graphs on at most 32 vertices.

Adjacency is stored as one integer bitmask per vertex, which keeps every
row in a single machine word and makes neighborhood intersection, degree
counts, and edge toggles cheap. On top of the type live the pattern
constructions (complete graphs, complements, joins, the complete graph
minus a 4-cycle), injective subgraph embedding, a canonical form for
isomorphism dedup, and the graph6 text codec.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Graph6Error, InputError, LimitError
from .sequences import DegreeSequence

MAX_VERTICES = 32
DEFAULT_VERTEX_LIMIT = 12


def _bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SmallGraph:
    """Immutable simple graph with vertices 0..n-1 and bitmask rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges=()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        if n > MAX_VERTICES:
            raise LimitError(f"graphs limited to {MAX_VERTICES} vertices (got {n})")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def _from_rows(cls, n: int, rows) -> "SmallGraph":
        # Internal fast path; callers guarantee symmetry and an empty diagonal.
        g = object.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            for off in _bits(row):
                out.append((u, u + 1 + off))
        return out

    def neighbors(self, v: int):
        return _bits(self.rows[v])

    def __eq__(self, other):
        return (isinstance(other, SmallGraph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"SmallGraph({self.n}, {self.edges()})"


@dataclass(frozen=True)
class TargetPattern:
    """A fixed subgraph to hunt for inside realizations."""

    m: int
    pattern: SmallGraph


def complete_graph(k: int) -> SmallGraph:
    if not isinstance(k, int) or k < 0:
        raise InputError(f"order must be a nonnegative integer, got {k!r}")
    if k > MAX_VERTICES:
        raise LimitError(f"graphs limited to {MAX_VERTICES} vertices (got {k})")
    full = (1 << k) - 1
    return SmallGraph._from_rows(k, [full ^ (1 << v) for v in range(k)])


def empty_graph(k: int) -> SmallGraph:
    if not isinstance(k, int) or k < 0:
        raise InputError(f"order must be a nonnegative integer, got {k!r}")
    if k > MAX_VERTICES:
        raise LimitError(f"graphs limited to {MAX_VERTICES} vertices (got {k})")
    return SmallGraph._from_rows(k, [0] * k)


def cycle_graph(k: int) -> SmallGraph:
    if k < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {k}")
    return SmallGraph(k, [(i, (i + 1) % k) for i in range(k)])


def complement(g: SmallGraph) -> SmallGraph:
    full = (1 << g.n) - 1
    return SmallGraph._from_rows(
        g.n, [(full ^ row) & ~(1 << v) for v, row in enumerate(g.rows)])


def join(g1: SmallGraph, g2: SmallGraph) -> SmallGraph:
    """Disjoint union plus all cross edges; g1's vertices come first."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise LimitError(f"join would have {n} vertices (limit {MAX_VERTICES})")
    high = ((1 << g2.n) - 1) << g1.n
    low = (1 << g1.n) - 1
    rows = [row | high for row in g1.rows]
    rows += [(row << g1.n) | low for row in g2.rows]
    return SmallGraph._from_rows(n, rows)


def km_minus_c4(m: int) -> TargetPattern:
    """Complete graph on m vertices with the four edges of a 4-cycle removed.

    The cycle runs through vertices 0,1,2,3, so those keep only their
    diagonal partner plus everything outside the cycle. Isomorphic to the
    join of a complete graph on m-4 vertices with two independent edges.
    """
    if not isinstance(m, int) or m < 4:
        raise InputError(f"pattern needs m >= 4, got {m!r}")
    g = complete_graph(m)
    rows = list(g.rows)
    for u, v in ((0, 1), (1, 2), (2, 3), (3, 0)):
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return TargetPattern(m, SmallGraph._from_rows(m, rows))


def degree_sequence_of(g: SmallGraph) -> DegreeSequence:
    if g.n == 0:
        raise InputError("the empty graph has no degree sequence")
    return DegreeSequence(g.degrees())


def delete_vertex(g: SmallGraph, v: int) -> SmallGraph:
    """Remove vertex v; higher-numbered vertices shift down by one."""
    if not (0 <= v < g.n):
        raise InputError(f"vertex {v} out of range for n={g.n}")
    low_mask = (1 << v) - 1
    rows = []
    for u, row in enumerate(g.rows):
        if u == v:
            continue
        rows.append((row & low_mask) | ((row >> (v + 1)) << v))
    return SmallGraph._from_rows(g.n - 1, rows)


# ----------------------------------------------------------------------
# Subgraph containment
# ----------------------------------------------------------------------

def find_embedding(host: SmallGraph, pattern) -> tuple[int, ...] | None:
    """First injective map sending pattern edges onto host edges.

    Pattern vertices are placed in decreasing-degree order with degree
    feasibility pruning; host candidates are tried in ascending index, so
    the embedding found is deterministic. Returns a tuple indexed by
    pattern vertex, or None. The pattern may be a SmallGraph or a
    TargetPattern.
    """
    if isinstance(pattern, TargetPattern):
        pattern = pattern.pattern
    pn, hn = pattern.n, host.n
    if pn > hn:
        return None
    if pn == 0:
        return ()
    order = sorted(range(pn), key=lambda v: (-pattern.degree(v), v))
    pdeg = [pattern.degree(v) for v in order]
    placed_nbrs: list[list[int]] = []
    for k, pv in enumerate(order):
        placed_nbrs.append(
            [j for j in range(k) if pattern.has_edge(pv, order[j])])
    hdeg = host.degrees()
    hrows = host.rows
    full = (1 << hn) - 1
    assign = [-1] * pn

    def place(k: int, used: int) -> bool:
        if k == pn:
            return True
        cand = full & ~used
        for j in placed_nbrs[k]:
            cand &= hrows[assign[order[j]]]
        need = pdeg[k]
        for hv in _bits(cand):
            if hdeg[hv] >= need:
                assign[order[k]] = hv
                if place(k + 1, used | (1 << hv)):
                    return True
        return False

    if place(0, 0):
        return tuple(assign)
    return None


def contains_subgraph(host: SmallGraph, pattern) -> bool:
    return find_embedding(host, pattern) is not None


# ----------------------------------------------------------------------
# Canonical form
# ----------------------------------------------------------------------

def _refine_colors(n: int, rows) -> list[int]:
    """Iterated neighbor-multiset refinement starting from degrees.

    Color ids are ranks of sorted signature keys, so the final coloring is
    invariant under relabeling.
    """
    sig = sorted({r.bit_count() for r in rows})
    rank = {d: i for i, d in enumerate(sig)}
    colors = [rank[r.bit_count()] for r in rows]
    ncells = len(sig)
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[u] for u in _bits(rows[v]))
            sigs.append((colors[v], tuple(nbr)))
        keys = sorted(set(sigs))
        if len(keys) == ncells:
            return colors
        rank2 = {s: i for i, s in enumerate(keys)}
        colors = [rank2[s] for s in sigs]
        ncells = len(keys)


def canonical_form(g: SmallGraph, limit: int = DEFAULT_VERTEX_LIMIT) -> bytes:
    """Canonical byte string: equal exactly for isomorphic graphs.

    Minimum adjacency encoding over all vertex orderings compatible with
    the refined degree partition, found by branch-and-bound. The search
    space is the product of the cell factorials, so the refinement is
    what keeps this usable; the limit guards the worst case.
    """
    n = g.n
    if n > limit:
        raise LimitError(f"canonical form limited to {limit} vertices (got {n})")
    if n == 0:
        return b"\x00"
    rows = g.rows
    colors = _refine_colors(n, rows)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    blocks = [by_color[c] for c in sorted(by_color)]
    block_at_pos: list[int] = []
    for i, blk in enumerate(blocks):
        block_at_pos.extend([i] * len(blk))

    INF = 1 << (n + 1)
    best = [INF] * n
    cur = [0] * n
    placed = [False] * n
    # adjacency bits of each vertex toward already placed positions
    adjbits = [0] * n

    def descend(pos: int):
        if pos == n:
            best[:] = cur
            return
        cands = [v for v in blocks[block_at_pos[pos]] if not placed[v]]
        cands.sort(key=lambda v: adjbits[v])
        for v in cands:
            chunk = adjbits[v]
            if chunk > best[pos]:
                break
            if chunk < best[pos]:
                best[pos] = chunk
                for k in range(pos + 1, n):
                    best[k] = INF
            cur[pos] = chunk
            placed[v] = True
            touched = []
            for w in _bits(rows[v]):
                if not placed[w]:
                    adjbits[w] |= 1 << pos
                    touched.append(w)
            descend(pos + 1)
            for w in touched:
                adjbits[w] ^= 1 << pos
            placed[v] = False

    descend(0)
    acc = 0
    shift = 0
    for pos, chunk in enumerate(best):
        acc |= chunk << shift
        shift += pos
    nbytes = max(1, (shift + 7) // 8)
    return bytes([n]) + acc.to_bytes(nbytes, "little")


# ----------------------------------------------------------------------
# graph6 codec
# ----------------------------------------------------------------------

def encode_graph6(g: SmallGraph) -> str:
    """Standard header-free graph6 text for a graph on at most 62 vertices."""
    n = g.n
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(text: str) -> SmallGraph:
    """Inverse of encode_graph6; strict about length and padding.

    Accepts an optional ``>>graph6<<`` prefix. Errors carry the byte
    offset of the offending character.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", offset=0)
    c0 = ord(s[0])
    if c0 == 126:
        raise Graph6Error("multi-byte vertex counts not supported", offset=0)
    if not (63 <= c0 <= 125):
        raise Graph6Error(f"invalid size byte {s[0]!r}", offset=0)
    n = c0 - 63
    if n > MAX_VERTICES:
        raise LimitError(f"graphs limited to {MAX_VERTICES} vertices (got {n})")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes, found {len(body)}",
                          offset=1 + min(len(body), need))
    rows = [0] * n
    bit_index = 0
    total_bits = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for k, ch in enumerate(body):
        value = ord(ch) - 63
        if not (0 <= value < 64):
            raise Graph6Error(f"invalid data byte {ch!r}", offset=1 + k)
        for b in range(5, -1, -1):
            bit = (value >> b) & 1
            if bit_index < total_bits:
                if bit:
                    i, j = pairs[bit_index]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits", offset=1 + k)
            bit_index += 1
    return SmallGraph._from_rows(n, rows)


def parse_edge_text(text: str, n: int | None = None) -> SmallGraph:
    """Build a graph from ``u-v`` pairs separated by spaces or commas.

    Vertex count defaults to one past the largest endpoint mentioned.
    """
    edges = []
    hi = -1
    for tok in text.replace(",", " ").split():
        a, sep, b = tok.partition("-")
        if not sep:
            raise InputError(f"bad edge token {tok!r}, expected u-v")
        try:
            u, v = int(a), int(b)
        except ValueError:
            raise InputError(f"bad edge token {tok!r}") from None
        edges.append((u, v))
        hi = max(hi, u, v)
    if n is None:
        n = hi + 1
    return SmallGraph(n, edges)
