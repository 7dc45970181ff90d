"""Game structure over colorings: leveled family of vertex sets.

Row 1 holds all singletons.  A set S joins row i >= 2 when some coloring,
restricted to the closed neighborhood N[S], has all of its classes placed
in rows below i; every such coloring is adjoined to S.  Construction runs
until a row comes up empty, whether or not every subset got placed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bits import VertexSet, label, popcount, verts
from .colorings import Coloring, is_monochromatic, restrict_masks
from .graphs import Graph, GraphError


def closed_neighborhood(G: Graph, s: VertexSet) -> VertexSet:
    return G.closed_neighborhood(s)


@dataclass(frozen=True)
class GameStructure:
    n: int
    rows: tuple[tuple[int, ...], ...]  # rows[i-1] = masks of row i
    row_of: dict[int, int]
    adjoined: dict[int, tuple[int, ...]]  # mask -> indices of qualifying colorings
    colorings: tuple[Coloring, ...]

    @property
    def covers_all(self) -> bool:
        return len(self.row_of) == (1 << self.n) - 1


@dataclass(frozen=True)
class ReducedGameStructure:
    n: int
    rows: tuple[tuple[int, ...], ...]
    row_of: dict[int, int]
    parents: dict[int, tuple[int, ...]]
    children: dict[int, tuple[int, ...]]
    colorings: tuple[Coloring, ...]


def _row_sort_key(n: int):
    return lambda m: (popcount(m), verts(m))


def build_structure(G: Graph, colorings: list[Coloring] | tuple[Coloring, ...]) -> GameStructure:
    n = G.n
    if not colorings:
        raise GraphError("build_structure requires at least one coloring")
    for c in colorings:
        if c.n != n:
            raise GraphError("coloring size does not match graph")
    full = (1 << n) - 1

    by_ns: dict[int, list[int]] = {}
    for s in range(1, full + 1):
        by_ns.setdefault(G.closed_neighborhood(s), []).append(s)

    row_of: dict[int, int] = {1 << v: 1 for v in range(n)}
    adjoined: dict[int, tuple[int, ...]] = {}
    watchers: dict[int, list[tuple[int, int]]] = {}
    count: dict[tuple[int, int], int] = {}
    maxrow: dict[tuple[int, int], int] = {}
    completed: dict[int, list[tuple[int, int]]] = {}  # ns -> [(effective_row, j)]
    bucket: dict[int, list[tuple[int, int]]] = {}

    for ns in by_ns:
        for j, col in enumerate(colorings):
            classes = set(restrict_masks(col, ns))
            unplaced = {b for b in classes if b not in row_of}
            key = (ns, j)
            count[key] = len(unplaced)
            maxrow[key] = max((row_of[b] for b in classes - unplaced), default=0)
            if not unplaced:
                eff = max(2, maxrow[key] + 1)
                bucket.setdefault(eff, []).append(key)
                completed.setdefault(ns, []).append((eff, j))
            else:
                for b in unplaced:
                    watchers.setdefault(b, []).append(key)

    key_fn = _row_sort_key(n)
    rows: list[tuple[int, ...]] = [tuple(sorted((1 << v for v in range(n)), key=key_fn))]
    i = 1
    while True:
        i += 1
        entries = bucket.pop(i, [])
        newly = sorted(
            {s for ns, _ in entries for s in by_ns[ns] if s not in row_of},
            key=key_fn,
        )
        if not newly:
            break
        rows.append(tuple(newly))
        for s in newly:
            row_of[s] = i
            ns = G.closed_neighborhood(s)
            adjoined[s] = tuple(sorted(j for eff, j in completed[ns] if eff <= i))
        for s in newly:
            for key in watchers.pop(s, ()):  # classes equal to s are now placed
                count[key] -= 1
                if maxrow[key] < i:
                    maxrow[key] = i
                if count[key] == 0:
                    eff = i + 1
                    bucket.setdefault(eff, []).append(key)
                    completed.setdefault(key[0], []).append((eff, key[1]))

    return GameStructure(n, tuple(rows), row_of, adjoined, tuple(colorings))


def height(gs: GameStructure | ReducedGameStructure) -> int:
    return len(gs.rows)


def is_solvable(G: Graph, colorings) -> bool:
    """Whether the structure over the colorings places every nonempty subset."""
    return build_structure(G, colorings).covers_all


def reduce_structure(gs: GameStructure) -> ReducedGameStructure:
    """Top-down pruning: keep sets with all proper subsets strictly below and,
    off the top row, a parent in the reduced row above (a set there with an
    adjoined coloring in which this set is monochromatic)."""
    h = len(gs.rows)
    key_fn = _row_sort_key(gs.n)
    kept: list[tuple[int, ...]] = [()] * (h + 1)
    parents: dict[int, tuple[int, ...]] = {}
    big = 1 << 60
    for r in range(h, 0, -1):
        keep = []
        for s in gs.rows[r - 1]:
            t = (s - 1) & s
            ok = True
            while t:
                if gs.row_of.get(t, big) >= r:
                    ok = False
                    break
                t = (t - 1) & s
            if not ok:
                continue
            if r < h:
                ps = tuple(
                    p
                    for p in kept[r + 1]
                    if any(
                        is_monochromatic(gs.colorings[j], s)
                        for j in gs.adjoined[p]
                    )
                )
                if not ps:
                    continue
                parents[s] = ps
            keep.append(s)
        kept[r] = tuple(sorted(keep, key=key_fn))
    children: dict[int, tuple[int, ...]] = {}
    for s, ps in parents.items():
        for p in ps:
            children[p] = children.get(p, ()) + (s,)
    row_of = {s: r for r in range(1, h + 1) for s in kept[r]}
    return ReducedGameStructure(
        gs.n, tuple(kept[1 : h + 1]), row_of, parents, children, gs.colorings
    )


# -- lemma check over two colorings ---------------------------------------


@dataclass(frozen=True)
class Lemma44Report:
    n: int
    height: int
    bound: int
    height_ok: bool
    pair_claim_ok: bool
    violations: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return self.height_ok and self.pair_claim_ok


def check_lemma44(G: Graph, c_a: Coloring, c_b: Coloring) -> Lemma44Report:
    """Two-coloring structure: height <= C(n,2)+1, and every reduced-structure
    set strictly between row 2 and the top row has cardinality exactly 2.

    The cardinality claim deliberately exempts the top row: a top-row set has
    no parent, and sets of size >= 3 whose proper subsets all sit lower do
    survive the reduction there (e.g. a 4-vertex star with colorings
    {0,1|2|3} and {0|1|2,3} keeps {0,2,3} in its top row).
    """
    gs = build_structure(G, [c_a, c_b])
    h = len(gs.rows)
    bound = comb(G.n, 2) + 1
    red = reduce_structure(gs)
    violations = []
    for r in range(3, h):  # non-top rows >= 3
        for s in red.rows[r - 1]:
            if popcount(s) != 2:
                violations.append((r, verts(s)))
    return Lemma44Report(
        G.n, h, bound, h <= bound, not violations, tuple(violations)
    )


# -- dumps -----------------------------------------------------------------


def format_rows(gs: GameStructure | ReducedGameStructure, *, top_down: bool = True) -> str:
    lines = []
    indices = range(len(gs.rows), 0, -1) if top_down else range(1, len(gs.rows) + 1)
    for i in indices:
        row = gs.rows[i - 1]
        lines.append(f"Row {i}: " + ",".join(label(s, gs.n) for s in row))
    return "\n".join(lines)


def structure_to_json(gs: GameStructure) -> dict:
    return {
        "n": gs.n,
        "rows": [[list(verts(s)) for s in row] for row in gs.rows],
        "adjoined": {
            ",".join(map(str, verts(s))): list(js) for s, js in sorted(gs.adjoined.items())
        },
    }
