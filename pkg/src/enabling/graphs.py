"""Edge-coloured complete graphs stored as a flat colour sequence.

The colour of every unordered pair {u, v} is stored in a fixed
upper-triangular order: (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
All lookups are exact integer operations; the JSON form round-trips
byte-for-byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "EdgeColouredGraph",
    "build",
    "from_simple_graph",
    "monochromatic_complete",
    "pair_count",
    "pair_index",
    "pairs",
    "vertex_set",
]


def pair_count(n: int) -> int:
    """Number of unordered vertex pairs of a complete graph on n vertices."""
    return n * (n - 1) // 2


def pair_index(n: int, u: int, v: int) -> int:
    """Position of the pair {u, v} in the canonical colour sequence."""
    if u == v:
        raise ValueError(f"no edge from vertex {u} to itself")
    if u > v:
        u, v = v, u
    if u < 0 or v >= n:
        raise ValueError(f"pair ({u}, {v}) out of range for n={n}")
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def pairs(n: int) -> Iterator[tuple[int, int]]:
    """All unordered pairs in canonical order."""
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v


def vertex_set(members: Iterable[int], n: int) -> tuple[int, ...]:
    """Validate and normalise a collection of vertices to a sorted tuple."""
    out = sorted(members)
    for v in out:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValueError(f"duplicate vertex {a}")
    return tuple(out)


@dataclass(frozen=True)
class EdgeColouredGraph:
    """A complete graph on vertices 0..n-1 whose edges carry colours 0..r-1."""

    n: int
    r: int
    colours: tuple[int, ...]
    _adjacency: dict = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one vertex, got n={self.n}")
        if self.r < 1:
            raise ValueError(f"need at least one colour, got r={self.r}")
        expected = pair_count(self.n)
        if len(self.colours) != expected:
            raise ValueError(
                f"colour sequence has length {len(self.colours)}, "
                f"expected {expected} for n={self.n}"
            )
        for c in self.colours:
            if not 0 <= c < self.r:
                raise ValueError(f"colour {c} outside range 0..{self.r - 1}")

    def colour_of(self, u: int, v: int) -> int:
        """Colour of the edge {u, v}; symmetric in its arguments."""
        return self.colours[pair_index(self.n, u, v)]

    def adjacency(self, colour: int) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks of one colour class, cached."""
        if not 0 <= colour < self.r:
            raise ValueError(f"colour {colour} outside range 0..{self.r - 1}")
        cached = self._adjacency.get(colour)
        if cached is None:
            masks = [0] * self.n
            it = iter(self.colours)
            for u in range(self.n):
                for v in range(u + 1, self.n):
                    if next(it) == colour:
                        masks[u] |= 1 << v
                        masks[v] |= 1 << u
            cached = tuple(masks)
            self._adjacency[colour] = cached
        return cached

    def is_monochromatic_clique(self, members: Iterable[int], colour: int) -> bool:
        """Whether every pair inside ``members`` has the given colour.

        Sets of size 0 or 1 qualify vacuously for any colour.
        """
        ms = vertex_set(members, self.n)
        if not 0 <= colour < self.r:
            raise ValueError(f"colour {colour} outside range 0..{self.r - 1}")
        cols = self.colours
        n = self.n
        for i, u in enumerate(ms):
            base = u * (2 * n - u - 1) // 2 - u - 1
            for v in ms[i + 1 :]:
                if cols[base + v] != colour:
                    return False
        return True

    def permute_colours(self, perm: Sequence[int]) -> "EdgeColouredGraph":
        """Relabel colours by a bijection ``perm`` (colour c becomes perm[c])."""
        if sorted(perm) != list(range(self.r)):
            raise ValueError(f"{perm!r} is not a permutation of 0..{self.r - 1}")
        return EdgeColouredGraph(self.n, self.r, tuple(perm[c] for c in self.colours))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "colours": list(self.colours)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, doc: dict) -> "EdgeColouredGraph":
        try:
            n, r, colours = doc["n"], doc["r"], doc["colours"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"graph document missing field: {exc}") from None
        if not isinstance(n, int) or not isinstance(r, int):
            raise ValueError("graph fields n and r must be integers")
        return cls(n, r, tuple(int(c) for c in colours))

    @classmethod
    def from_json(cls, text: str) -> "EdgeColouredGraph":
        return cls.from_json_dict(json.loads(text))


def build(n: int, r: int, colours: Sequence[int]) -> EdgeColouredGraph:
    """Construct a graph from an explicit colour sequence in canonical order."""
    return EdgeColouredGraph(n, r, tuple(colours))


def from_simple_graph(n: int, edges: Iterable[tuple[int, int]]) -> EdgeColouredGraph:
    """Two-colour a complete graph: listed edges get colour 0, the rest colour 1."""
    cols = [1] * pair_count(n)
    for u, v in edges:
        cols[pair_index(n, u, v)] = 0
    return EdgeColouredGraph(n, 2, tuple(cols))


def monochromatic_complete(n: int, r: int = 2, colour: int = 0) -> EdgeColouredGraph:
    """Complete graph with every edge in one colour; handy for small tests."""
    if not 0 <= colour < r:
        raise ValueError(f"colour {colour} outside range 0..{r - 1}")
    return EdgeColouredGraph(n, r, tuple([colour] * pair_count(n)))
