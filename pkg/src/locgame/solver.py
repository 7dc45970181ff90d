"""Exact minimax solver for the localization game.

State is the candidate set: every vertex consistent with all distance
observations so far.  Probing splits the candidate set into distance
classes; a singleton class means the robber is pinpointed that round,
otherwise the robber moves and the class grows to its closed
neighborhood.  Values come from the least fixpoint of

    value(C) = min over probes P, |P| <= k,
               of max over classes B of C under the coloring of P
               of (1 if |B| = 1 else 1 + value(N[B]))

computed by synchronized value-iteration passes from all-unknown, with
singleton candidate sets seeded at 1.  Unreachable values are infinity:
the cops cannot finish from that candidate set with k probes per round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bits import VertexSet, is_singleton, subsets_by_size_then_lex, verts
from .colorings import distance_coloring
from .graphs import Graph, GraphError

INF = math.inf


class SizeCapError(RuntimeError):
    """Instance exceeds the exhaustive-search size cap."""


def default_cap(k: int) -> int:
    return 14 if k == 1 else 12


def _check_cap(G: Graph, k: int, n_cap: int | None) -> None:
    cap = default_cap(k) if n_cap is None else n_cap
    if G.n > cap:
        raise SizeCapError(f"n={G.n} exceeds cap {cap} for k={k}")


def probe_partitions(G: Graph, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Deduplicated distance colorings as (probe, class masks) pairs.

    Probes enumerate in lexicographic tuple order so the first probe seen
    for a partition is the lexicographically smallest inducing set.
    """
    seen: dict[tuple[int, ...], None] = {}
    out = []
    for probe in sorted(subsets_by_size_then_lex(G.n, min(k, G.n))):
        c = distance_coloring(G, probe)
        if c.masks in seen:
            continue
        seen[c.masks] = None
        out.append((probe, c.masks))
    return out


@dataclass
class GameValueTable:
    """Candidate-set values for one (G, k) instance; read-only once built."""

    G: Graph
    k: int
    values: list[float]  # indexed by candidate mask; INF where cops cannot finish

    def value(self, candidate: VertexSet) -> float:
        return self.values[candidate]

    @property
    def game_value(self) -> float:
        return self.values[self.G.full_mask]


def solve(G: Graph, k: int, *, n_cap: int | None = None) -> GameValueTable:
    if k < 1:
        raise GraphError("solver requires k >= 1")
    _check_cap(G, k, n_cap)
    n = G.n
    full = G.full_mask
    parts = [masks for _, masks in probe_partitions(G, k)]
    nb = G.closed_neighborhood

    values: list[float] = [INF] * (full + 1)
    for v in range(n):
        values[1 << v] = 1
    unknown = [c for c in range(1, full + 1) if not is_singleton(c)]

    while unknown:
        found: list[tuple[int, float]] = []
        for c in unknown:
            best = INF
            for masks in parts:
                worst = 1.0
                for km in masks:
                    b = c & km
                    if b == 0 or b & (b - 1) == 0:
                        continue
                    w = values[nb(b)]
                    if w == INF:
                        worst = INF
                        break
                    if 1 + w > worst:
                        worst = 1 + w
                if worst < best:
                    best = worst
                    if best == 1:
                        break
            if best < INF:
                found.append((c, best))
        if not found:
            break
        for c, val in found:
            values[c] = val
        unknown = [c for c in unknown if values[c] == INF]
    return GameValueTable(G, k, values)


def game_value(G: Graph, k: int, *, n_cap: int | None = None) -> float:
    """Optimal worst-case rounds from the initial candidate set V(G); inf if
    k cops cannot localize the robber."""
    return solve(G, k, n_cap=n_cap).game_value


def zeta(G: Graph, k_max: int, *, n_cap: int | None = None) -> int | None:
    """Least k <= k_max with a finite game value, or None."""
    if k_max < 1:
        raise GraphError("zeta requires k_max >= 1")
    for k in range(1, k_max + 1):
        if game_value(G, k, n_cap=n_cap) < INF:
            return k
    return None


def metric_dimension(G: Graph, *, n_cap: int | None = None) -> int:
    """Smallest probe set whose distance vectors split V(G) into singletons."""
    _check_cap(G, 1, n_cap if n_cap is not None else 14)
    if G.n == 1:
        return 1
    for probe in subsets_by_size_then_lex(G.n, G.n):
        c = distance_coloring(G, probe)
        if len(c.blocks) == G.n:
            return len(probe)
    raise AssertionError("full vertex set always resolves")


@dataclass(frozen=True)
class PolicyTrace:
    """Optimal probe per reachable candidate set, from the initial V(G)."""

    G: Graph
    k: int
    rounds: int
    policy: dict[int, tuple[int, ...]]


def value_trace(G: Graph, k: int, *, n_cap: int | None = None) -> PolicyTrace:
    """Extract one optimal policy: for each reachable candidate set the
    lexicographically smallest probe among minimizers."""
    table = solve(G, k, n_cap=n_cap)
    if table.game_value == INF:
        raise GraphError("value_trace requires a finite game value")
    parts = probe_partitions(G, k)
    nb = G.closed_neighborhood
    values = table.values
    policy: dict[int, tuple[int, ...]] = {}
    queue = [G.full_mask]
    seen = {G.full_mask}
    while queue:
        c = queue.pop(0)
        best = INF
        best_probe = None
        best_masks = None
        for probe, masks in parts:
            worst = 1.0
            for km in masks:
                b = c & km
                if b == 0 or b & (b - 1) == 0:
                    continue
                w = values[nb(b)]
                if w == INF:
                    worst = INF
                    break
                if 1 + w > worst:
                    worst = 1 + w
            if worst < best:
                best = worst
                best_probe = probe
                best_masks = masks
        assert best == values[c], "policy extraction must match the table"
        policy[c] = best_probe
        for km in best_masks:
            b = c & km
            if b and b & (b - 1):
                nxt = nb(b)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return PolicyTrace(G, k, int(table.game_value), policy)
