"""Colorings of V(G) as canonical partitions, and distance colorings.

Only the partition a coloring induces matters to the game machinery
(monochromaticity and color classes are partition properties), so two
probe sets producing the same partition are interchangeable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bits import VertexSet, bits, is_subset, mask_of, subsets_by_size_then_lex, verts
from .graphs import Graph, GraphError, distance_matrix


@dataclass(frozen=True)
class Coloring:
    """Canonical partition of 0..n-1: blocks ascending, ordered by minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...]
    label: tuple[int, ...] | None = None

    @staticmethod
    def from_blocks(
        n: int,
        blocks: Iterable[Iterable[int]],
        label: tuple[int, ...] | None = None,
    ) -> "Coloring":
        blks = sorted(tuple(sorted(set(b))) for b in blocks if tuple(b))
        union = 0
        for b in blks:
            m = mask_of(b)
            if union & m:
                raise GraphError("coloring blocks overlap")
            union |= m
        if union != (1 << n) - 1:
            raise GraphError("coloring blocks must cover all vertices")
        return Coloring(n, tuple(blks), tuple(mask_of(b) for b in blks), label)

    @staticmethod
    def from_assignment(colors: Sequence[object], label=None) -> "Coloring":
        groups: dict[object, list[int]] = {}
        for v, c in enumerate(colors):
            groups.setdefault(c, []).append(v)
        return Coloring.from_blocks(len(colors), groups.values(), label)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return self.blocks

    def __len__(self) -> int:
        return len(self.blocks)


def distance_coloring(G: Graph, probe: Iterable[int]) -> Coloring:
    """Partition of V(G) by the vector of distances to the probe set."""
    s = tuple(sorted(set(probe)))
    if not s:
        raise GraphError("distance_coloring requires a nonempty probe set")
    if any(not 0 <= v < G.n for v in s):
        raise GraphError("probe vertex out of range")
    d = distance_matrix(G)
    vec = lambda v: tuple(d[p][v] for p in s)
    return Coloring.from_assignment([vec(v) for v in range(G.n)], label=s)


def distance_colorings(G: Graph, k: int, *, dedupe: bool = True) -> list[Coloring]:
    """One coloring per nonempty probe set of size <= k.

    With dedupe (default) partition-identical probes collapse, keeping the
    lexicographically smallest inducing set as the label.
    """
    if not 1 <= k <= G.n:
        raise GraphError("distance_colorings requires 1 <= k <= n")
    out: list[Coloring] = []
    seen: set[tuple[tuple[int, ...], ...]] = set()
    for s in subsets_by_size_then_lex(G.n, k):
        c = distance_coloring(G, s)
        if dedupe:
            if c.key() in seen:
                continue
            seen.add(c.key())
        out.append(c)
    return out


def restrict(C: Coloring, W: VertexSet) -> tuple[tuple[int, ...], ...]:
    """The partition of W induced by C (blocks ordered by minimum element)."""
    out = []
    for m in C.masks:
        piece = m & W
        if piece:
            out.append(verts(piece))
    return tuple(out)


def restrict_masks(C: Coloring, W: VertexSet) -> list[int]:
    return [m & W for m in C.masks if m & W]


def is_monochromatic(C: Coloring, W: VertexSet) -> bool:
    if not W:
        raise GraphError("is_monochromatic requires a nonempty set")
    return any(is_subset(W, m) for m in C.masks)


def random_coloring(n: int, rng: random.Random) -> Coloring:
    """Each vertex gets one of b colors uniformly, b drawn from 2..n."""
    b = rng.randint(2, n)
    return Coloring.from_assignment([rng.randrange(b) for _ in range(n)])


# -- text format (1-based labels, e.g. "1|2,3|4,5") ------------------------


def format_coloring(C: Coloring) -> str:
    return "|".join(",".join(str(v + 1) for v in blk) for blk in C.blocks)


def parse_colorings(text: str, n: int) -> list[Coloring]:
    """One coloring per line; blocks split by '|', vertices by ','."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        blocks = []
        for part in line.split("|"):
            try:
                blk = [int(t) - 1 for t in part.split(",") if t.strip()]
            except ValueError:
                raise GraphError(f"coloring line {lineno}: bad vertex token") from None
            if any(not 0 <= v < n for v in blk):
                raise GraphError(f"coloring line {lineno}: vertex out of range")
            blocks.append(blk)
        out.append(Coloring.from_blocks(n, blocks))
    if not out:
        raise GraphError("no colorings in input")
    return out
