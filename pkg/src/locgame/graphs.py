"""Core graph type, parsing, distances, and structural predicates.

Graphs are simple, undirected, and connected (the game is only played on
connected graphs; construction of a disconnected graph must be requested
explicitly).  Vertices are 0..n-1.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .bits import VertexSet, bits, mask_of, popcount


class GraphError(ValueError):
    """Malformed graph input or violated structural precondition."""


class Graph:
    """Immutable simple undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "adj", "_nbhd", "_dist", "_nb_cache")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        *,
        allow_disconnected: bool = False,
    ):
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        self._nbhd: tuple[int, ...] = tuple(
            (1 << v) | mask_of(self.adj[v]) for v in range(n)
        )
        self._dist: tuple[tuple[int, ...], ...] | None = None
        self._nb_cache: dict[int, int] = {}
        if not allow_disconnected and not self.is_connected():
            raise GraphError("graph is disconnected")

    # -- basic accessors -------------------------------------------------

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_connected(self) -> bool:
        seen = 1
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if not seen >> v & 1:
                    seen |= 1 << v
                    stack.append(v)
        return seen == self.full_mask

    def is_tree(self) -> bool:
        return self.is_connected() and self.num_edges() == self.n - 1

    def closed_neighborhood(self, s: VertexSet) -> VertexSet:
        """N[S]: S together with every neighbor of a vertex of S."""
        cached = self._nb_cache.get(s)
        if cached is not None:
            return cached
        acc = 0
        m = s
        while m:
            low = m & -m
            acc |= self._nbhd[low.bit_length() - 1]
            m ^= low
        self._nb_cache[s] = acc
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def parse_edge_list(text: str, *, allow_disconnected: bool = False) -> Graph:
    """Parse whitespace-separated "u v" lines ('#' starts a comment)."""
    edges = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) % 2 != 0:
            raise GraphError(f"line {lineno}: odd number of tokens")
        try:
            ids = [int(t) for t in tokens]
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer token") from None
        if any(i < 0 for i in ids):
            raise GraphError(f"line {lineno}: negative vertex id")
        for u, v in zip(ids[::2], ids[1::2]):
            if u == v:
                raise GraphError(f"line {lineno}: loop at vertex {u}")
            edges.append((u, v))
            max_id = max(max_id, u, v)
    if max_id < 0:
        raise GraphError("no edges in input")
    return Graph(max_id + 1, edges, allow_disconnected=allow_disconnected)


def distance_matrix(G: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs hop distances via BFS from every vertex."""
    if G._dist is not None:
        return G._dist
    rows = []
    for s in range(G.n):
        dist = [-1] * G.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in G.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    q.append(v)
        if min(dist) < 0:
            raise GraphError("distance matrix requires a connected graph")
        rows.append(tuple(dist))
    G._dist = tuple(rows)
    return G._dist


def leaf_count(T: Graph) -> int:
    """Number of degree-1 vertices of a tree."""
    if not T.is_tree():
        raise GraphError("leaf_count requires a tree")
    return sum(1 for v in range(T.n) if T.degree(v) == 1)


def contains_T33(T: Graph) -> bool:
    """Whether a tree contains the 10-vertex spider with three 2-leaf legs.

    In a tree this holds exactly when some vertex has three or more
    neighbors of degree >= 3: the neighbors' remaining neighbors are
    automatically distinct, yielding the spider as a subgraph.
    """
    if not T.is_tree():
        raise GraphError("contains_T33 requires a tree")
    return any(
        sum(1 for u in T.adj[v] if T.degree(u) >= 3) >= 3 for v in range(T.n)
    )


# -- rooted trees --------------------------------------------------------


class RootedTree:
    """A tree rooted at a chosen vertex, with level/subtree precomputation."""

    __slots__ = ("graph", "root", "parent", "level", "children", "subtree", "leaves")

    def __init__(self, T: Graph, root: int):
        if not T.is_tree():
            raise GraphError("RootedTree requires a tree")
        n = T.n
        parent = [-1] * n
        level = [0] * n
        order = [root]
        seen = {root}
        for u in order:
            for v in T.adj[u]:
                if v not in seen:
                    seen.add(v)
                    parent[v] = u
                    level[v] = level[u] + 1
                    order.append(v)
        children: list[list[int]] = [[] for _ in range(n)]
        for v in range(n):
            if parent[v] >= 0:
                children[parent[v]].append(v)
        subtree = [1 << v for v in range(n)]
        for u in reversed(order):
            for c in children[u]:
                subtree[u] |= subtree[c]
        self.graph = T
        self.root = root
        self.parent = tuple(parent)
        self.level = tuple(level)
        self.children = tuple(tuple(sorted(c)) for c in children)
        self.subtree = tuple(subtree)
        self.leaves = tuple(
            mask_of(v for v in bits(subtree[u]) if not children[v])
            for u in range(n)
        )

    def strict_desc(self, v: int) -> VertexSet:
        return self.subtree[v] & ~(1 << v)

    def leaf_count_below(self, v: int) -> int:
        return popcount(self.leaves[v])

    def lca(self, u: int, v: int) -> int:
        while self.level[u] > self.level[v]:
            u = self.parent[u]
        while self.level[v] > self.level[u]:
            v = self.parent[v]
        while u != v:
            u = self.parent[u]
            v = self.parent[v]
        return u

    def meet(self, mask: VertexSet) -> int:
        """Deepest vertex whose strict descendants contain the whole mask."""
        it = bits(mask)
        a = next(it)
        for v in it:
            a = self.lca(a, v)
        if mask >> a & 1:
            a = self.parent[a]
            if a < 0:
                raise GraphError("mask covers the root; no meet exists")
        return a

    def rel_levels(self, mask: VertexSet, anchor: int) -> set[int]:
        base = self.level[anchor]
        return {self.level[v] - base for v in bits(mask)}


# -- block decomposition -------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Biconnected components (blocks) and cut vertices, Hopcroft-Tarjan."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    stack: list[tuple[int, int]] = []
    timer = itertools.count()

    def dfs(u: int, parent: int) -> None:
        disc[u] = low[u] = next(timer)
        child_count = 0
        for v in G.adj[u]:
            if v == parent:
                continue
            if disc[v] == -1:
                child_count += 1
                stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if (parent == -1 and child_count > 1) or (
                    parent != -1 and low[v] >= disc[u]
                ):
                    cuts.add(u)
                if low[v] >= disc[u]:
                    comp: set[int] = set()
                    while True:
                        e = stack.pop()
                        comp.update(e)
                        if e == (u, v):
                            break
                    blocks.append(tuple(sorted(comp)))
            elif disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    dfs(0, -1)
    if stack:
        comp = set()
        while stack:
            comp.update(stack.pop())
        blocks.append(tuple(sorted(comp)))
    if n == 1:
        blocks = [(0,)]
    return BlockDecomposition(tuple(sorted(blocks)), tuple(sorted(cuts)))


def is_two_connected(G: Graph) -> bool:
    if G.n < 3:
        return False
    bd = block_decomposition(G)
    return len(bd.blocks) == 1 and len(bd.blocks[0]) == G.n


# -- outerplanar embedding ----------------------------------------------


@dataclass(frozen=True)
class OuterplanarEmbedding:
    order: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    @property
    def chord_count(self) -> int:
        return len(self.chords)


def _chords_noncrossing(order: tuple[int, ...], edges: set[frozenset[int]]):
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    cycle_edges = {frozenset((order[i], order[(i + 1) % n])) for i in range(n)}
    chords = []
    for e in edges:
        if e in cycle_edges:
            continue
        u, v = sorted(e, key=pos.get)
        chords.append((u, v))
    for (a, b), (c, d) in itertools.combinations(chords, 2):
        i, j = sorted((pos[a], pos[b]))
        k, l = sorted((pos[c], pos[d]))
        if i < k < j < l or k < i < l < j:
            return None
    return tuple(sorted(chords))


def outerplanar_embedding(G: Graph) -> OuterplanarEmbedding | None:
    """Outer Hamiltonian order plus chord list, or None if not outerplanar.

    Brute-force Hamiltonian-cycle search with a non-crossing chord check;
    intended for the small orders this package solves exactly.
    """
    if not is_two_connected(G):
        raise GraphError("outerplanar_embedding requires a 2-connected graph")
    n = G.n
    if G.num_edges() > 2 * n - 3:
        return None
    edges = {frozenset(e) for e in G.edges()}

    path = [0]
    used = 1

    def search() -> OuterplanarEmbedding | None:
        if len(path) == n:
            if path[-1] in G.adj[0]:
                order = tuple(path)
                chords = _chords_noncrossing(order, edges)
                if chords is not None:
                    return OuterplanarEmbedding(order, chords)
            return None
        nonlocal used
        for v in G.adj[path[-1]]:
            if not used >> v & 1:
                path.append(v)
                used |= 1 << v
                found = search()
                if found:
                    return found
                path.pop()
                used ^= 1 << v
        return None

    return search()
