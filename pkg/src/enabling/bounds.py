"""Closed-form lower and upper bounds on the least vertex count that forces
every vertex into a size-k monochromatic clique of each colour.

All arithmetic is exact: square roots only ever appear through integer
square-root comparisons, and the quadratic forms are evaluated in Fraction
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .constructions import TwoColourExtremalParams, _is_prime

__all__ = [
    "BoundReport",
    "f_eval",
    "f_max",
    "improved_inequality",
    "max_enabling_level",
    "multicolour_lower",
    "multicolour_report",
    "multicolour_upper",
    "two_colour_lower",
    "two_colour_report",
]


def two_colour_lower(k1: int, k2: int) -> int:
    """Least integer n compatible with n >= (sqrt(k1-1) + sqrt(k2-1))^2 and
    with containing a clique of each target size.

    The radicand comparison is done on squared integers, so the ceiling is
    exact for all inputs.  The clique-size floor max(k1, k2) only binds when
    one target is 1.
    """
    if k1 < 1 or k2 < 1:
        raise ValueError(f"clique targets must be positive, got ({k1}, {k2})")
    a, b = k1 - 1, k2 - 1
    root = isqrt(4 * a * b)
    ceiling = a + b + root if root * root == 4 * a * b else a + b + root + 1
    return max(k1, k2, ceiling)


def max_enabling_level(n: int) -> int:
    """Largest k such that some two-colouring of n vertices puts every vertex
    in a size-k clique of both colours; equals floor(n/4) + 1."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    return n // 4 + 1


def improved_inequality(xs: Sequence) -> Fraction:
    """Value of sum_{i<j} x_i x_j - sum_i x_i + 1 for x in [0, 1]^m.

    The value is nonnegative on the whole cube; it vanishes iff exactly one
    coordinate is 1 and the rest are 0.
    """
    vals = [Fraction(x) for x in xs]
    for v in vals:
        if not 0 <= v <= 1:
            raise ValueError(f"coordinate {v} outside [0, 1]")
    s = sum(vals, Fraction(0))
    sq = sum((v * v for v in vals), Fraction(0))
    return (s * s - sq) / 2 - s + 1


def f_eval(m: int, k: int, x) -> Fraction:
    """The quadratic k*m*x - (m*(m-1)/2)*x^2 in exact arithmetic."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    x = Fraction(x)
    return k * m * x - Fraction(m * (m - 1), 2) * x * x


def f_max(r: int, k: int, x) -> Fraction:
    """max over 0 <= m <= r of f_eval(m, k, x)."""
    if r < 0:
        raise ValueError(f"need r >= 0, got {r}")
    x = Fraction(x)
    return max(f_eval(m, k, x) for m in range(r + 1))


def multicolour_lower(r: int, k: int) -> int:
    """Best available lower bound for r colours and uniform clique target k."""
    if r < 2 or k < 2:
        raise ValueError(f"need r >= 2 and k >= 2, got ({r}, {k})")
    trivial = r * (k - 1) + 1
    quadratic = f_max(r, k, 2)
    assert quadratic.denominator == 1
    return max(trivial, int(quadratic))


def multicolour_upper(r: int, k: int) -> int:
    """Best available upper bound: the block construction on 2r(k-1)
    vertices, improved to k^2 when k is prime and r == k+1."""
    if r < 2 or k < 2:
        raise ValueError(f"need r >= 2 and k >= 2, got ({r}, {k})")
    block = 2 * r * (k - 1)
    if r == k + 1 and _is_prime(k):
        return min(block, k * k)
    return block


@dataclass(frozen=True)
class BoundReport:
    """Lower/upper bounds with the formula behind each candidate value."""

    lower: int
    upper: int | None
    exact: int | None
    provenance: tuple[tuple[str, object], ...]

    def to_json_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "provenance": [[name, value] for name, value in self.provenance],
        }


def two_colour_report(k1: int, k2: int) -> BoundReport:
    """Bounds for two colours with targets (k1, k2).

    When (sqrt(k1-1)+sqrt(k2-1))^2 is an integer the explicit construction
    matches the lower bound and the answer is exact; otherwise the gap
    between the ceiling and any construction is reported as open.
    """
    if k1 < 1 or k2 < 1:
        raise ValueError(f"clique targets must be positive, got ({k1}, {k2})")
    lower = two_colour_lower(k1, k2)
    prov: list[tuple[str, object]] = []
    a, b = k1 - 1, k2 - 1
    root = isqrt(4 * a * b)
    if root * root == 4 * a * b:
        prov.append(("sqrt_sum_squared", a + b + root))
    else:
        prov.append(("sqrt_sum_squared", f"{a + b} + 2*sqrt({a * b})"))
        prov.append(("sqrt_sum_ceiling", lower))
    if min(k1, k2) == 1:
        n = max(k1, k2)
        prov.append(("single_colour", n))
        return BoundReport(lower=n, upper=n, exact=n, provenance=tuple(prov))
    try:
        params = TwoColourExtremalParams.from_targets(k1, k2)
    except ValueError:
        return BoundReport(lower=lower, upper=None, exact=None, provenance=tuple(prov))
    prov.append(("extremal_construction", params.n))
    return BoundReport(lower=lower, upper=params.n, exact=params.n, provenance=tuple(prov))


def multicolour_report(r: int, k: int) -> BoundReport:
    """Bounds for r colours with uniform clique target k."""
    trivial = r * (k - 1) + 1
    quadratic = int(f_max(r, k, 2))
    lower = multicolour_lower(r, k)
    block = 2 * r * (k - 1)
    upper = multicolour_upper(r, k)
    prov: list[tuple[str, object]] = [
        ("pigeonhole", trivial),
        ("quadratic_at_2", quadratic),
        ("block_formula", 2 * r * k - 2 * r * (r - 1)),
        ("block_construction", block),
    ]
    if upper < block:
        prov.append(("prime_slope", k * k))
    exact = lower if lower == upper else None
    return BoundReport(lower=lower, upper=upper, exact=exact, provenance=tuple(prov))
