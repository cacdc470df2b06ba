"""Oracles for the tests, built from first principles.

Everything here recomputes ground truth by brute force over raw edge
sets and bitmasks, independent of the library's search and canonical
machinery, so the two can be compared honestly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from random import Random

from kmc4 import SmallGraph


@lru_cache(maxsize=None)
def gray_code_degree_map(n: int) -> dict[tuple[int, ...], bool]:
    """Visit every labeled graph on n vertices once.

    Walks the 2^C(n,2) edge subsets in Gray-code order, flipping a
    single edge per step. Returns, for each sorted degree tuple that
    occurs, whether any graph with that tuple contains a bowtie: a
    vertex of degree >= 4 whose neighborhood spans two disjoint edges.
    The key set is therefore exactly the graphical tuples of length n.
    """
    edge_list = list(combinations(range(n), 2))
    rows = [0] * n
    degs = [0] * n
    state: dict[tuple[int, ...], bool] = {tuple(degs): False}

    def has_bowtie() -> bool:
        for v in range(n):
            if degs[v] < 4:
                continue
            nb = rows[v]
            inner = []
            m = nb
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                w = rows[u] & nb & ~((1 << (u + 1)) - 1)
                while w:
                    c = w & -w
                    inner.append(b | c)
                    w ^= c
            for i in range(len(inner)):
                for j in range(i + 1, len(inner)):
                    if not inner[i] & inner[j]:
                        return True
        return False

    for i in range(1, 1 << len(edge_list)):
        bit = (i & -i).bit_length() - 1
        u, v = edge_list[bit]
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        d = 1 if (rows[u] >> v) & 1 else -1
        degs[u] += d
        degs[v] += d
        t = tuple(sorted(degs, reverse=True))
        cur = state.get(t)
        if cur is not True:
            if has_bowtie():
                state[t] = True
            elif cur is None:
                state[t] = False
    return state


def brute_embedding_exists(host: SmallGraph, pattern: SmallGraph) -> bool:
    """Subgraph test by trying every injective vertex map."""
    p_edges = pattern.edges()
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[a], image[b]) for a, b in p_edges):
            return True
    return False


def random_graph(n: int, p: float, rng: Random) -> SmallGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return SmallGraph(n, edges)


def relabel(g: SmallGraph, perm: list[int]) -> SmallGraph:
    """Image of g under vertex permutation (perm[v] is v's new name)."""
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return SmallGraph(g.n, edges)


def nonincreasing_tuples(length: int, bound: int):
    """Every non-increasing tuple of the given length with entries in
    [0, bound], enumerated directly."""
    def rec(slots: int, hi: int):
        if slots == 0:
            yield ()
            return
        for first in range(hi, -1, -1):
            for rest in rec(slots - 1, first):
                yield (first,) + rest
    yield from rec(length, bound)


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(name: str, ok: bool) -> None:
    """Queue one pass/fail line for the end-of-run acceptance section."""
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {name}")
