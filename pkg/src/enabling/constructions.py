"""Explicit colourings in which every vertex lies in large cliques of each colour.

Four families are provided:

* ``p4_blowup``       - two colours, blow-up of a path on four vertices,
                        every vertex in cliques of size floor(n/4)+1 of both colours;
* ``two_colour_extremal`` - two colours, vertex count (sqrt(k1-1)+sqrt(k2-1))^2
                        whenever that quantity is an integer;
* ``multicolour_blocks``  - r colours on 2r(k-1) vertices, every vertex in a
                        size-k clique of every colour;
* ``prime_slope``     - p+1 colours on p^2 vertices classified by line slope
                        over the field with p elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .graphs import EdgeColouredGraph, pair_count, pair_index

__all__ = [
    "TwoColourExtremalParams",
    "biregular_bipartite",
    "integer_extremal_pairs",
    "multicolour_blocks",
    "p4_blowup",
    "prime_slope",
    "two_colour_extremal",
]


def p4_blowup(n: int) -> EdgeColouredGraph:
    """Blow-up of the two-coloured path a-b-c-d into four near-equal parts.

    Vertices are split into consecutive parts V1, V2, V3, V4, sized as equally
    as possible with any remainder going to the earlier parts.  Colour 0 fills
    the inside of V2 and V3 and the pairs (V1,V2), (V2,V3), (V3,V4); colour 1
    fills everything else.  Every vertex then lies in a size floor(n/4)+1
    clique of each colour.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    q, rem = divmod(n, 4)
    sizes = [q + (1 if i < rem else 0) for i in range(4)]
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    red_part_pairs = {(0, 1), (1, 1), (1, 2), (2, 2), (2, 3)}
    cols = [1] * pair_count(n)
    idx = 0
    for u in range(n):
        pu = part[u]
        for v in range(u + 1, n):
            if (pu, part[v]) in red_part_pairs:
                cols[idx] = 0
            idx += 1
    return EdgeColouredGraph(n, 2, tuple(cols))


def biregular_bipartite(
    m1: int, m2: int, d1: int, d2: int
) -> list[tuple[int, int]]:
    """Edges of a bipartite graph, left degrees all d1 and right degrees all d2.

    Left vertex i is joined to right vertices (i*d1 + s) mod m2 for
    s = 0..d1-1.  Walking i upwards lays the intervals end to end, so they
    wrap around the right side exactly d2 times and every right vertex is
    covered equally.  Requires the handshake identity m1*d1 == m2*d2 and
    d1 <= m2, d2 <= m1.
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("both sides must have at least one vertex")
    if d1 < 0 or d2 < 0 or d1 > m2 or d2 > m1:
        raise ValueError(f"degrees d1={d1}, d2={d2} out of range for ({m1}, {m2})")
    if m1 * d1 != m2 * d2:
        raise ValueError(f"handshake failure: {m1}*{d1} != {m2}*{d2}")
    edges = []
    for i in range(m1):
        start = i * d1
        for s in range(d1):
            edges.append((i, (start + s) % m2))
    return edges


@dataclass(frozen=True)
class TwoColourExtremalParams:
    """Number-theoretic data behind the two-colour extremal construction."""

    k1: int
    k2: int
    g: int
    a: int
    b: int

    @classmethod
    def from_targets(cls, k1: int, k2: int) -> "TwoColourExtremalParams":
        if k1 < 2 or k2 < 2:
            raise ValueError(f"need both clique targets >= 2, got ({k1}, {k2})")
        g = gcd(k1 - 1, k2 - 1)
        qa, qb = (k1 - 1) // g, (k2 - 1) // g
        a, b = isqrt(qa), isqrt(qb)
        if a * a != qa or b * b != qb:
            raise ValueError(
                f"no construction on an integer vertex count for ({k1}, {k2}): "
                f"(sqrt({k1 - 1})+sqrt({k2 - 1}))^2 = "
                f"{k1 - 1 + k2 - 1} + 2*sqrt({(k1 - 1) * (k2 - 1)}) is irrational"
            )
        return cls(k1, k2, g, a, b)

    @property
    def n(self) -> int:
        return self.g * (self.a + self.b) ** 2

    @property
    def red_size(self) -> int:
        return self.g * self.a * (self.a + self.b)

    @property
    def blue_size(self) -> int:
        return self.g * self.b * (self.a + self.b)


def two_colour_extremal(k1: int, k2: int) -> EdgeColouredGraph:
    """Extremal two-colouring: every vertex in a colour-0 clique of size k1
    and a colour-1 clique of size k2 on (sqrt(k1-1)+sqrt(k2-1))^2 vertices.

    Writing k1 = 1 + g*a^2 and k2 = 1 + g*b^2 with g = gcd(k1-1, k2-1), the
    vertices split into a colour-0 clique R of size g*a*(a+b) followed by a
    colour-1 clique B of size g*b*(a+b).  Cross pairs carry colour 0 exactly
    on a biregular graph with R-degree g*a*b and B-degree g*a^2, so each R
    vertex has exactly k2-1 colour-1 partners in B and each B vertex exactly
    k1-1 colour-0 partners in R.

    Raises ValueError when the target vertex count is irrational.
    """
    p = TwoColourExtremalParams.from_targets(k1, k2)
    n, m1 = p.n, p.red_size
    d1 = p.g * p.a * p.b
    d2 = p.g * p.a * p.a
    cols = [1] * pair_count(n)
    for u in range(m1):
        base = u * (2 * n - u - 1) // 2 - u - 1
        for v in range(u + 1, m1):
            cols[base + v] = 0
    for i, j in biregular_bipartite(m1, p.blue_size, d1, d2):
        cols[pair_index(n, i, m1 + j)] = 0
    return EdgeColouredGraph(n, 2, tuple(cols))


def integer_extremal_pairs(n_max: int) -> list[tuple[int, int]]:
    """Ordered pairs (k1, k2), both >= 2, whose extremal vertex count
    (sqrt(k1-1)+sqrt(k2-1))^2 is an integer at most n_max."""
    out = []
    for k1 in range(2, n_max + 1):
        for k2 in range(2, n_max + 1):
            s = k1 - 1 + k2 - 1
            prod = (k1 - 1) * (k2 - 1)
            root = isqrt(prod)
            if root * root != prod:
                continue
            n = s + 2 * root
            if n <= n_max:
                out.append((k1, k2))
    out.sort(key=lambda kk: (kk[0] + kk[1] - 2 + 2 * isqrt((kk[0] - 1) * (kk[1] - 1)), kk))
    return out


def multicolour_blocks(r: int, k: int) -> EdgeColouredGraph:
    """r-colouring of 2r(k-1) vertices, every vertex in a size-k clique of
    every colour.

    The vertices form r consecutive blocks of size 2(k-1).  Inside block i
    every edge has colour i.  Between blocks i < j, the vertex at position p
    of block i is joined in colour i to the k-1 positions p..p+k-2 (mod the
    block size) of block j and in colour j to the remaining k-1 positions.
    """
    if r < 2:
        raise ValueError(f"need at least two colours, got r={r}")
    if k < 2:
        raise ValueError(f"need clique target >= 2, got k={k}")
    m = 2 * (k - 1)
    n = r * m
    cols = [0] * pair_count(n)
    idx = 0
    for u in range(n):
        bi, p = divmod(u, m)
        for v in range(u + 1, n):
            bj, q = divmod(v, m)
            if bi == bj:
                cols[idx] = bi
            elif (q - p) % m <= k - 2:
                cols[idx] = bi
            else:
                cols[idx] = bj
            idx += 1
    return EdgeColouredGraph(n, r, tuple(cols))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_slope(p: int) -> EdgeColouredGraph:
    """(p+1)-colouring of the affine plane over the p-element field.

    Vertex (x, y) is encoded as x*p + y.  The edge between (x, y) and (z, w)
    gets colour (x-z)/(y-w) mod p when y != w, and colour p (the infinite
    slope) when y == w.  Each colour class splits into p parallel lines of
    size p, so every vertex lies in a size-p clique of every colour.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = p * p
    cols = [0] * pair_count(n)
    idx = 0
    for u in range(n):
        x, y = divmod(u, p)
        for v in range(u + 1, n):
            z, w = divmod(v, p)
            if y == w:
                cols[idx] = p
            else:
                cols[idx] = (x - z) * pow(y - w, -1, p) % p
            idx += 1
    return EdgeColouredGraph(n, p + 1, tuple(cols))
