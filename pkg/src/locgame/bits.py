"""Vertex sets as integer bitmasks.

Every subset of vertices 0..n-1 is an int whose bit v is set iff v is in
the set.  Membership, union, and subset tests are single machine-word
operations at the sizes this package solves exactly (n <= 14).
"""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = int


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the vertices of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def verts(mask: VertexSet) -> tuple[int, ...]:
    return tuple(bits(mask))


def is_singleton(mask: VertexSet) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


def single_vertex(mask: VertexSet) -> int:
    if not is_singleton(mask):
        raise ValueError(f"mask {mask:b} is not a singleton")
    return mask.bit_length() - 1


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


def subsets_by_size_then_lex(n: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """All nonempty vertex tuples of size <= max_size, lexicographic within a size."""
    import itertools

    for r in range(1, max_size + 1):
        yield from itertools.combinations(range(n), r)


def label(mask: VertexSet, n: int) -> str:
    """Human label: 1-based vertex names, concatenated while single-digit."""
    vs = [v + 1 for v in bits(mask)]
    sep = "" if n <= 9 else "-"
    return sep.join(str(v) for v in vs)
