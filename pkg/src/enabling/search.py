"""Exhaustive decision procedure for small (k1, k2)-enabling graphs.

Graphs on n labelled vertices are enumerated as edge bitmasks in ascending
order: bit e set means pair e (in canonical order) gets colour 0, clear means
colour 1.  A graph survives only when every vertex sits in a colour-0 clique
of size k1 and a colour-1 clique of size k2, so ``exists_enabling`` decides
whether such a graph exists at a given n and ``min_n`` locates the least n.

Vertex degrees are packed eight bits per vertex into one integer, letting a
single add-and-mask test check the degree window [k1-1, n-k2] for all
vertices at once.  The mask is split into low, mid and top bit fields; when
the fixed upper fields already violate the window for some vertex, the whole
block of completions is skipped and counted as pruned.  Skipped blocks fail
the window provably, so the pruned count equals the number of window
failures regardless of the field split or shard count.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .bounds import two_colour_lower
from .cliques import verify_enabling
from .graphs import from_simple_graph

__all__ = ["SearchReport", "exists_enabling", "min_n"]

MAX_EDGE_BITS = 63
PROGRESS_STEP = 1 << 20

_LOW_CAP = 11
_MID_CAP = 12


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one exhaustive scan at a fixed vertex count."""

    k1: int
    k2: int
    n: int
    found: bool
    witness: Optional[tuple[tuple[int, int], ...]]
    graphs_enumerated: int
    graphs_pruned: int
    elapsed_seconds: float

    def to_json_dict(self, include_timings: bool = False) -> dict:
        doc = {
            "k1": self.k1,
            "k2": self.k2,
            "n": self.n,
            "found": self.found,
            "witness": None
            if self.witness is None
            else [list(e) for e in self.witness],
            "graphs_enumerated": self.graphs_enumerated,
            "graphs_pruned": self.graphs_pruned,
        }
        if include_timings:
            doc["elapsed_seconds"] = self.elapsed_seconds
        return doc

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(
            self.to_json_dict(include_timings), sort_keys=True, separators=(",", ":")
        )


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _span_tables(
    n: int, pairs: list[tuple[int, int]], lo: int, width: int
) -> tuple[list[int], list[int]]:
    """Per-value packed degrees and packed adjacency for bits [lo, lo+width).

    Degrees use eight-bit lanes (lane v = vertex v); adjacency uses n-bit
    rows at stride n.  Entry x extends entry x without its lowest bit.
    """
    degs = [0] * (1 << width)
    adjs = [0] * (1 << width)
    for x in range(1, 1 << width):
        low = x & -x
        u, v = pairs[lo + low.bit_length() - 1]
        rest = x ^ low
        degs[x] = degs[rest] + (1 << (8 * u)) + (1 << (8 * v))
        adjs[x] = adjs[rest] | (1 << (u * n + v)) | (1 << (v * n + u))
    return degs, adjs


def _value_contrib(
    n: int, pairs: list[tuple[int, int]], lo: int, value: int
) -> tuple[int, int]:
    deg = 0
    adj = 0
    while value:
        low = value & -value
        u, v = pairs[lo + low.bit_length() - 1]
        deg += (1 << (8 * u)) + (1 << (8 * v))
        adj |= (1 << (u * n + v)) | (1 << (v * n + u))
        value ^= low
    return deg, adj


def _make_cover_check(n: int, k: int) -> Callable[[int], bool]:
    """Checker for "every vertex lies in a k-clique" on packed adjacency."""
    row_mask = (1 << n) - 1
    if k <= 1:
        return lambda adj: True

    if k == 2:

        def check2(adj: int) -> bool:
            for v in range(n):
                if not (adj >> (v * n)) & row_mask:
                    return False
            return True

        return check2

    if k == 3:

        def check3(adj: int) -> bool:
            for v in range(n):
                av = (adj >> (v * n)) & row_mask
                t = av
                while t:
                    low = t & -t
                    t ^= low
                    if (adj >> ((low.bit_length() - 1) * n)) & av:
                        break
                else:
                    return False
            return True

        return check3

    def checkk(adj: int) -> bool:
        rows = [(adj >> (v * n)) & row_mask for v in range(n)]

        def grow(cand: int, need: int) -> bool:
            if need == 0:
                return True
            while cand:
                if bin(cand).count("1") < need:
                    return False
                low = cand & -cand
                cand ^= low
                if grow(cand & rows[low.bit_length() - 1], need - 1):
                    return True
            return False

        covered = 0
        for v in range(n):
            if covered >> v & 1:
                continue
            if bin(rows[v]).count("1") < k - 1 or not grow(rows[v], k - 1):
                return False
            covered |= 1 << v
        return True

    return checkk


def _report(
    n: int,
    k1: int,
    k2: int,
    mask: Optional[int],
    pairs: list[tuple[int, int]],
    enumerated: int,
    pruned: int,
    t0: float,
) -> SearchReport:
    witness = None
    if mask is not None:
        witness = tuple(pairs[e] for e in range(len(pairs)) if mask >> e & 1)
        g = from_simple_graph(n, witness)
        assert verify_enabling(g, ((0, k1), (1, k2))).ok
    return SearchReport(
        k1=k1,
        k2=k2,
        n=n,
        found=mask is not None,
        witness=witness,
        graphs_enumerated=enumerated,
        graphs_pruned=pruned,
        elapsed_seconds=time.perf_counter() - t0,
    )


def exists_enabling(
    n: int,
    k1: int,
    k2: int,
    *,
    prune: bool = True,
    shards_log2: int = 0,
    progress: Optional[Callable[[int], None]] = None,
) -> SearchReport:
    """Scan all edge bitmasks on n vertices for a (k1, k2)-enabling graph.

    Returns the first witness in ascending bitmask order, or found=False
    after covering the whole space.  The work is partitioned into
    2**shards_log2 shards by the top bits of the mask, searched in ascending
    order so the merged answer is shard-count independent; ``progress``, when
    given, is called with the running mask count about every 2**20 graphs.
    """
    if n < 1 or k1 < 1 or k2 < 1:
        raise ValueError(f"n and targets must be positive, got {(n, k1, k2)}")
    nbits = n * (n - 1) // 2
    if nbits > MAX_EDGE_BITS:
        raise ValueError(
            f"n={n} needs {nbits} edge bits; exhaustive mode stops at "
            f"{MAX_EDGE_BITS}"
        )
    if not 0 <= shards_log2 <= nbits:
        raise ValueError(f"shards_log2 must lie in [0, {nbits}]")

    t0 = time.perf_counter()
    pairs = _pairs(n)
    total = 1 << nbits
    mind = max(0, k1 - 1)
    maxd = min(n - 1, n - k2)

    if prune and mind > maxd:
        return _report(n, k1, k2, None, pairs, total, total, t0)

    top = min(nbits, max(shards_log2, nbits - _LOW_CAP - _MID_CAP))
    low = min(_LOW_CAP, nbits - top)
    mid = nbits - top - low
    ldeg, ladj = _span_tables(n, pairs, 0, low)
    mdeg, madj = _span_tables(n, pairs, low, mid)

    check1 = _make_cover_check(n, k1)
    check2 = _make_cover_check(n, k2)
    full_adj = 0
    for u, v in pairs:
        full_adj |= (1 << (u * n + v)) | (1 << (v * n + u))

    lanes = sum(1 << (8 * v) for v in range(n))
    high = lanes << 7
    over = (127 - maxd) * lanes
    under = (128 - mind) * lanes
    lmax = ldeg[-1]
    lmmax = lmax + mdeg[-1]

    nlow = 1 << low
    nmid = 1 << mid
    enumerated = 0
    pruned = 0
    next_tick = PROGRESS_STEP

    for t in range(1 << top):
        tdeg, tadj = _value_contrib(n, pairs, low + mid, t)
        if prune and (
            ((tdeg + over) & high) or ((tdeg + lmmax + under) & high) != high
        ):
            enumerated += nmid * nlow
            pruned += nmid * nlow
            if progress is not None and enumerated >= next_tick:
                while next_tick <= enumerated:
                    progress(next_tick)
                    next_tick += PROGRESS_STEP
            continue
        for h in range(nmid):
            hdeg = tdeg + mdeg[h]
            if prune and (
                ((hdeg + over) & high) or ((hdeg + lmax + under) & high) != high
            ):
                enumerated += nlow
                pruned += nlow
            else:
                hadj = tadj | madj[h]
                hover = hdeg + over
                hunder = hdeg + under
                passed = 0
                for leaf in range(nlow):
                    d = ldeg[leaf]
                    if prune and (
                        ((hover + d) & high) or ((hunder + d) & high) != high
                    ):
                        continue
                    passed += 1
                    adj = hadj | ladj[leaf]
                    if check1(adj) and check2(full_adj ^ adj):
                        enumerated += leaf + 1
                        pruned += leaf + 1 - passed
                        mask = (t << (mid + low)) | (h << low) | leaf
                        return _report(
                            n, k1, k2, mask, pairs, enumerated, pruned, t0
                        )
                enumerated += nlow
                pruned += nlow - passed
            if progress is not None and enumerated >= next_tick:
                while next_tick <= enumerated:
                    progress(next_tick)
                    next_tick += PROGRESS_STEP

    assert enumerated == total
    return _report(n, k1, k2, None, pairs, enumerated, pruned, t0)


def min_n(
    k1: int,
    k2: int,
    n_max: int,
    *,
    trusted_bounds: bool = False,
    prune: bool = True,
    shards_log2: int = 0,
    progress: Optional[Callable[[int], None]] = None,
) -> Optional[int]:
    """Least n <= n_max carrying a (k1, k2)-enabling graph, None if none.

    Scans upward from max(k1, k2); with trusted_bounds the scan starts at
    the proven lower bound instead of re-deriving it, which changes nothing
    but the work done.
    """
    if k1 < 1 or k2 < 1 or n_max < 1:
        raise ValueError(f"targets and n_max must be positive, got {(k1, k2, n_max)}")
    start = max(k1, k2)
    if trusted_bounds:
        start = max(start, two_colour_lower(k1, k2))
    for n in range(start, n_max + 1):
        if exists_enabling(
            n, k1, k2, prune=prune, shards_log2=shards_log2, progress=progress
        ).found:
            return n
    return None
