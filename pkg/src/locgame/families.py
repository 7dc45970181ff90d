"""Named fixture graphs and small-graph generators used for verification."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graphs import Graph, GraphError, outerplanar_embedding


def t33() -> Graph:
    """The 10-vertex spider: a center, three middle vertices, two leaves each."""
    edges = [(0, 1), (0, 2), (0, 3)]
    leaf = 4
    for mid in (1, 2, 3):
        edges += [(mid, leaf), (mid, leaf + 1)]
        leaf += 2
    return Graph(10, edges)


def gm(m: int) -> Graph:
    """t33 with m-2 extra leaves attached to the first middle vertex."""
    if m < 2:
        raise GraphError("gm requires m >= 2")
    base = t33()
    edges = base.edges()
    n = base.n
    for i in range(m - 2):
        edges.append((1, n + i))
    return Graph(n + m - 2, edges)


def star(n: int) -> Graph:
    if n < 1:
        raise GraphError("star requires n >= 1")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def example41() -> Graph:
    """The 5-vertex tree used throughout the structure fixtures."""
    return Graph(5, [(0, 1), (0, 2), (2, 3), (2, 4)])


_NAMED = {
    "T33": (t33, 0),
    "Gm": (gm, 1),
    "star": (star, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "example41": (example41, 0),
}


def build_named(name: str, param: int | None = None) -> Graph:
    if name not in _NAMED:
        raise GraphError(f"unknown named graph {name!r}")
    fn, arity = _NAMED[name]
    if arity == 0:
        if param is not None:
            raise GraphError(f"{name} takes no parameter")
        return fn()
    if param is None:
        raise GraphError(f"{name} requires a parameter, e.g. {name}:5")
    return fn(param)


def parse_named(spec: str) -> Graph:
    """Parse "name" or "name:param" as used on the command line."""
    if ":" in spec:
        name, _, p = spec.partition(":")
        try:
            param = int(p)
        except ValueError:
            raise GraphError(f"bad parameter in {spec!r}") from None
        return build_named(name, param)
    return build_named(spec)


# -- non-isomorphic free trees --------------------------------------------


def _canonical_form(G: Graph) -> str:
    """AHU canonical form of a free tree (rooted at its centroid set)."""

    def encode(root: int, parent: int) -> str:
        subs = sorted(
            encode(c, root) for c in G.adj[root] if c != parent
        )
        return "(" + "".join(subs) + ")"

    # centroid(s): remove-leaves peeling
    deg = [G.degree(v) for v in range(G.n)]
    alive = set(range(G.n))
    layer = [v for v in alive if deg[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for u in G.adj[v]:
                if u in alive:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return min(encode(r, -1) for r in alive)


def generate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices.

    Emitted in canonical-form order so runs are reproducible.
    """
    if not 1 <= n <= 14:
        raise GraphError("generate_trees supports 1 <= n <= 14")
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    import networkx as nx

    trees = []
    for t in nx.nonisomorphic_trees(n):
        g = Graph(n, list(t.edges()))
        trees.append((_canonical_form(g), g))
    trees.sort(key=lambda pair: pair[0])
    for _, g in trees:
        yield g


# -- 2-connected outerplanar graphs ---------------------------------------


def _noncrossing_chord_sets(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    chords = [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if not (i == 0 and j == n - 1)
    ]

    def crossing(a, b) -> bool:
        (i, j), (k, l) = sorted((a, b))
        return i < k < j < l

    def extend(start: int, chosen: list[tuple[int, int]]):
        yield tuple(chosen)
        for idx in range(start, len(chords)):
            c = chords[idx]
            if all(not crossing(c, d) for d in chosen):
                chosen.append(c)
                yield from extend(idx + 1, chosen)
                chosen.pop()

    yield from extend(0, [])


def generate_2connected_outerplanar(n: int, *, dedupe: bool = False) -> Iterator[Graph]:
    """C_n plus every non-crossing chord subset, in lexicographic chord order."""
    if not 3 <= n <= 10:
        raise GraphError("generate_2connected_outerplanar supports 3 <= n <= 10")
    seen: list[Graph] = []
    base = [(i, (i + 1) % n) for i in range(n)]
    for chords in _noncrossing_chord_sets(n):
        g = Graph(n, base + list(chords))
        if dedupe:
            import networkx as nx

            h = nx.Graph(g.edges())
            if any(
                prev.num_edges() == g.num_edges()
                and nx.is_isomorphic(nx.Graph(prev.edges()), h)
                for prev in seen
            ):
                continue
            seen.append(g)
        yield g


def random_block_outerplanar(n: int, seed: int) -> Graph:
    """Random connected outerplanar graph glued from edge-disjoint blocks.

    Blocks are single edges or cycles with a random non-crossing chord
    subset, attached at random cut vertices.  Deterministic per (n, seed).
    """
    if n < 2:
        raise GraphError("random_block_outerplanar requires n >= 2")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    used = 1  # vertex count so far

    def add_block(attach: int, size: int) -> None:
        nonlocal used
        fresh = list(range(used, used + size - 1))
        used += size - 1
        ring = [attach] + fresh
        if size == 2:
            edges.append((ring[0], ring[1]))
            return
        m = len(ring)
        edges.extend((ring[i], ring[(i + 1) % m]) for i in range(m))
        candidates = [
            (i, j)
            for i in range(m)
            for j in range(i + 2, m)
            if not (i == 0 and j == m - 1)
        ]
        rng.shuffle(candidates)

        def crossing(a, b):
            (i, j), (k, l) = sorted((a, b))
            return i < k < j < l

        chosen: list[tuple[int, int]] = []
        for c in candidates:
            if rng.random() < 0.4 and all(not crossing(c, d) for d in chosen):
                chosen.append(c)
        edges.extend((ring[i], ring[j]) for i, j in chosen)

    while used < n:
        remaining = n - used
        size = rng.randint(2, min(6, remaining + 1))
        attach = rng.randrange(used)
        add_block(attach, size)
    g = Graph(n, edges)
    return g
