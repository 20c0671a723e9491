"""Exact optimality certificates for the clique-measure game.

For a clique family F of one colour, ``compute_delta`` finds

    delta = max over probability measures lam on the vertices of
            min over C in F of lam(C),

and ``construct_mu`` finds a probability measure mu on F itself whose induced
vertex masses never exceed delta.  The pair (lam, mu) certifies delta from
both sides without trusting the solver: lam achieves delta, while for any
measure lam' the average of lam'(C) under mu is at most max_v mu-mass(v), so
no measure can beat delta.

``certify`` runs the full pipeline for every target colour of a graph,
asserts the cross-colour laws (delta_i + delta_j <= 1, sum_v mu_i mu_j <= 1,
cliques of distinct colours share at most one vertex), and evaluates the
derived lower bound on the vertex count.  A violated law raises
LemmaViolation, which the command line maps to a distinct exit status.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .bounds import f_max, two_colour_lower
from .cliques import (
    ALL_CLIQUES,
    PER_VERTEX_LEX,
    CliqueFamily,
    choose_family,
    verify_enabling,
)
from .graphs import EdgeColouredGraph
from .lp import LE, solve_lp_exact

__all__ = [
    "ColourCertificate",
    "CertificationResult",
    "FamilyMeasure",
    "LemmaViolation",
    "NotEnabling",
    "PairwiseCheck",
    "VertexMeasure",
    "certificate_from_json_dict",
    "certify",
    "check_certificate",
    "check_pairwise_intersections",
    "compute_delta",
    "construct_mu",
    "mu_vertex_masses",
    "support_clique_check",
    "two_colour_bound",
]


class LemmaViolation(Exception):
    """A mathematically guaranteed inequality failed on concrete data."""


class NotEnabling(ValueError):
    """The graph does not put every vertex in the required cliques."""


@dataclass(frozen=True)
class VertexMeasure:
    """Probability measure on the vertices, indexed by vertex label."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for w in self.weights:
            if w < 0:
                raise ValueError(f"negative weight {w}")
        if sum(self.weights, Fraction(0)) != 1:
            raise ValueError("weights must sum to 1")

    def mass(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in vertices), Fraction(0))

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, w in enumerate(self.weights) if w > 0)


@dataclass(frozen=True)
class FamilyMeasure:
    """Probability measure on the cliques of a family, index-aligned."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for w in self.weights:
            if w < 0:
                raise ValueError(f"negative weight {w}")
        if sum(self.weights, Fraction(0)) != 1:
            raise ValueError("weights must sum to 1")


def compute_delta(
    g: EdgeColouredGraph, fam: CliqueFamily
) -> tuple[Fraction, VertexMeasure]:
    """Exact value and maximiser of max_lam min_{C in fam} lam(C).

    The mass constraint is posed as sum(lam) <= 1; scaling any sub-unit
    measure up improves the objective, so every optimum is tight and the
    returned measure sums to 1 exactly.
    """
    if not fam.cliques:
        raise ValueError("clique family is empty")
    n = g.n
    constraints = []
    for c in fam.cliques:
        row = [0] * (n + 1)
        for v in c:
            row[v] = -1
        row[n] = 1
        constraints.append((row, LE, 0))
    constraints.append(([1] * n + [0], LE, 1))
    objective = [0] * n + [1]
    sol = solve_lp_exact(objective, constraints)
    delta = sol.value
    lam = VertexMeasure(sol.primal[:n])
    assert min(lam.mass(c) for c in fam.cliques) == delta
    if delta < Fraction(fam.k, n):
        raise LemmaViolation(
            f"delta {delta} fell below the uniform-measure floor {fam.k}/{n}"
        )
    return delta, lam


def _essential_vertex_rows(n: int, cliques: Sequence[tuple[int, ...]]) -> list[int]:
    """Vertices whose mass constraints are not implied by another vertex.

    Vertex u dominates v when every clique through v also passes through u;
    the dominated constraint can never bind first and is dropped.
    """
    member_mask = [0] * n
    for i, c in enumerate(cliques):
        bit = 1 << i
        for v in c:
            member_mask[v] |= bit
    keep = []
    for v in range(n):
        mv = member_mask[v]
        if mv == 0:
            continue
        dominated = False
        for u in range(n):
            if u == v:
                continue
            mu_ = member_mask[u]
            if mv & ~mu_ == 0 and (mv != mu_ or u < v):
                dominated = True
                break
        if not dominated:
            keep.append(v)
    return keep


def construct_mu(
    g: EdgeColouredGraph, fam: CliqueFamily, delta: Fraction
) -> FamilyMeasure:
    """Probability measure on fam whose vertex masses all stay within delta.

    Solves max sum(mu) subject to the per-vertex mass caps directly; the
    optimum is provably at least 1 whenever delta is the exact measure value
    for fam, so a smaller optimum raises LemmaViolation.
    """
    if not fam.cliques:
        raise ValueError("clique family is empty")
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    m = len(fam.cliques)
    constraints = []
    for v in _essential_vertex_rows(g.n, fam.cliques):
        row = [1 if v in c else 0 for c in fam.cliques]
        constraints.append((row, LE, delta))
    sol = solve_lp_exact([1] * m, constraints)
    total = sol.value
    if total < 1:
        raise LemmaViolation(
            f"clique-measure packing reached only {total}; "
            f"it must reach 1 when delta={delta} is exact"
        )
    mu = FamilyMeasure(tuple(w / total for w in sol.primal))
    for mass in mu_vertex_masses(g.n, fam, mu):
        assert mass <= delta
    return mu


def mu_vertex_masses(
    n: int, fam: CliqueFamily, mu: FamilyMeasure
) -> tuple[Fraction, ...]:
    """Induced vertex masses sum_{C containing v} mu(C)."""
    masses = [Fraction(0)] * n
    for c, w in zip(fam.cliques, mu.weights):
        if w:
            for v in c:
                masses[v] += w
    return tuple(masses)


def check_pairwise_intersections(fam1: CliqueFamily, fam2: CliqueFamily) -> bool:
    """Whether every clique of fam1 meets every clique of fam2 in at most one
    vertex.  Families must have distinct colours."""
    if fam1.colour == fam2.colour:
        raise ValueError("pairwise intersection check needs distinct colours")
    sets2 = [frozenset(c) for c in fam2.cliques]
    for c1 in fam1.cliques:
        s1 = frozenset(c1)
        for s2 in sets2:
            if len(s1 & s2) > 1:
                return False
    return True


def support_clique_check(
    g: EdgeColouredGraph, colour: int, lam: VertexMeasure, delta: Fraction
) -> bool:
    """When delta exceeds 1/2, the support of any maximiser must induce a
    single clique of the colour; below that threshold the check is vacuous."""
    if delta <= Fraction(1, 2):
        return True
    return g.is_monochromatic_clique(lam.support(), colour)


def two_colour_bound(k1: int, k2: int, delta1, delta2) -> Fraction:
    """Sharpest vertex-count bound (k1-1)/d + (k2-1)/(1-d) obtainable from
    measure values delta1, delta2 of the two colours.

    Any d in [delta1, 1-delta2] yields a valid bound, so the maximum over
    that interval is returned.  The objective is convex in d, hence the
    maximum sits at an endpoint; the interior stationary point is evaluated
    too when it is rational and feasible, which only matters when the
    interval collapses to it.
    """
    if k1 < 1 or k2 < 1:
        raise ValueError(f"clique targets must be positive, got ({k1}, {k2})")
    d1, d2 = Fraction(delta1), Fraction(delta2)
    if d1 <= 0 or d2 <= 0:
        raise ValueError("measure values must be positive")
    if d1 + d2 > 1:
        raise ValueError(f"measure values sum to {d1 + d2} > 1")
    a, b = k1 - 1, k2 - 1

    def h(d: Fraction) -> Fraction:
        return Fraction(a, 1) / d + Fraction(b, 1) / (1 - d)

    candidates = [d1, 1 - d2]
    if a > 0 and b > 0:
        root = isqrt(a * b)
        if root * root == a * b:
            stationary = Fraction(a, a + root)
            if d1 <= stationary <= 1 - d2:
                candidates.append(stationary)
    return max(h(d) for d in candidates)


@dataclass(frozen=True)
class ColourCertificate:
    """Everything needed to re-check one colour's measure value by hand."""

    colour: int
    k: int
    family: CliqueFamily
    delta: Fraction
    alpha: Fraction
    lam: VertexMeasure
    mu: FamilyMeasure
    mu_vertex_mass: tuple[Fraction, ...]


@dataclass(frozen=True)
class PairwiseCheck:
    colours: tuple[int, int]
    delta_sum: Fraction
    mu_product_sum: Fraction
    max_intersection: int


@dataclass(frozen=True)
class CertificationResult:
    n: int
    r: int
    targets: tuple[tuple[int, int], ...]
    policy: str
    certificates: tuple[ColourCertificate, ...]
    pairwise: tuple[PairwiseCheck, ...]
    bound: Fraction
    bound_ceiling: int
    universal_lower: int | None
    universal_form: str | None

    def to_json_dict(self) -> dict:
        doc = {
            "n": self.n,
            "r": self.r,
            "targets": [list(t) for t in self.targets],
            "policy": self.policy,
            "certificates": [
                {
                    "colour": c.colour,
                    "k": c.k,
                    "cliques": [list(q) for q in c.family.cliques],
                    "delta": _rat(c.delta),
                    "alpha": _rat(c.alpha),
                    "lambda": [_rat(w) for w in c.lam.weights],
                    "mu": [_rat(w) for w in c.mu.weights],
                    "mu_vertex_mass": [_rat(w) for w in c.mu_vertex_mass],
                }
                for c in self.certificates
            ],
            "pairwise": [
                {
                    "colours": list(p.colours),
                    "delta_sum": _rat(p.delta_sum),
                    "mu_product_sum": _rat(p.mu_product_sum),
                    "max_intersection": p.max_intersection,
                }
                for p in self.pairwise
            ],
            "bound": {"value": _rat(self.bound), "ceiling": self.bound_ceiling},
        }
        if self.universal_lower is not None:
            doc["universal"] = {
                "lower": self.universal_lower,
                "form": self.universal_form,
            }
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def _rat(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _unrat(doc: dict) -> Fraction:
    return Fraction(int(doc["num"]), int(doc["den"]))


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def certify(
    g: EdgeColouredGraph,
    targets: Sequence[tuple[int, int]],
    policy: str = ALL_CLIQUES,
) -> CertificationResult:
    """Measure certificates for every target colour plus the derived bound.

    Raises NotEnabling when some vertex misses a required clique, ValueError
    on malformed targets, and LemmaViolation when a guaranteed inequality
    fails (which would falsify the underlying mathematics).
    """
    report = verify_enabling(g, targets)
    if not report.ok:
        v, c = report.first_failure
        raise NotEnabling(
            f"vertex {v} lies in no size-{dict((cc, kk) for cc, kk in targets)[c]} "
            f"clique of colour {c}"
        )

    certs: list[ColourCertificate] = []
    for colour, k in targets:
        fam = choose_family(g, colour, k, policy)
        delta, lam = compute_delta(g, fam)
        if not support_clique_check(g, colour, lam, delta):
            raise LemmaViolation(
                f"delta {delta} > 1/2 but the maximiser support is not a "
                f"colour-{colour} clique"
            )
        mu = construct_mu(g, fam, delta)
        certs.append(
            ColourCertificate(
                colour=colour,
                k=k,
                family=fam,
                delta=delta,
                alpha=1 / delta,
                lam=lam,
                mu=mu,
                mu_vertex_mass=mu_vertex_masses(g.n, fam, mu),
            )
        )

    pairwise: list[PairwiseCheck] = []
    for i in range(len(certs)):
        for j in range(i + 1, len(certs)):
            ci, cj = certs[i], certs[j]
            dsum = ci.delta + cj.delta
            if dsum > 1:
                raise LemmaViolation(
                    f"delta[{ci.colour}] + delta[{cj.colour}] = {dsum} > 1"
                )
            psum = sum(
                (a * b for a, b in zip(ci.mu_vertex_mass, cj.mu_vertex_mass)),
                Fraction(0),
            )
            if psum > 1:
                raise LemmaViolation(
                    f"mu-mass product sum for colours "
                    f"({ci.colour}, {cj.colour}) is {psum} > 1"
                )
            if not check_pairwise_intersections(ci.family, cj.family):
                raise LemmaViolation(
                    f"cliques of colours {ci.colour} and {cj.colour} "
                    f"share two or more vertices"
                )
            inter = max(
                (
                    len(set(x) & set(y))
                    for x in ci.family.cliques
                    for y in cj.family.cliques
                ),
                default=0,
            )
            pairwise.append(
                PairwiseCheck(
                    colours=(ci.colour, cj.colour),
                    delta_sum=dsum,
                    mu_product_sum=psum,
                    max_intersection=inter,
                )
            )

    universal_lower = None
    universal_form = None
    if len(certs) == 2:
        k1, k2 = certs[0].k, certs[1].k
        bound = two_colour_bound(k1, k2, certs[0].delta, certs[1].delta)
        universal_lower = two_colour_lower(k1, k2)
        a, b = k1 - 1, k2 - 1
        root = isqrt(a * b)
        if root * root == a * b:
            universal_form = str(a + b + 2 * root)
        else:
            universal_form = f"{a + b} + 2*sqrt({a * b})"
    else:
        ks = {k for _, k in targets}
        if len(ks) != 1:
            raise ValueError(
                "multicolour certification needs a uniform clique target, "
                f"got {sorted(ks)}"
            )
        k = ks.pop()
        r = len(certs)
        alpha_bar = sum((c.alpha for c in certs), Fraction(0)) / r
        if alpha_bar < 2:
            raise LemmaViolation(f"mean alpha {alpha_bar} fell below 2")
        bound = f_max(r, k, alpha_bar)

    if bound > g.n:
        raise LemmaViolation(
            f"derived bound {bound} exceeds the actual vertex count {g.n}"
        )
    return CertificationResult(
        n=g.n,
        r=g.r,
        targets=tuple((c, k) for c, k in targets),
        policy=policy,
        certificates=tuple(certs),
        pairwise=tuple(pairwise),
        bound=bound,
        bound_ceiling=_ceil(bound),
        universal_lower=universal_lower,
        universal_form=universal_form,
    )


def certificate_from_json_dict(doc: dict) -> dict:
    """Decode the JSON form; rationals become Fractions, cliques tuples."""
    out = {
        "n": int(doc["n"]),
        "r": int(doc["r"]),
        "targets": [tuple(t) for t in doc["targets"]],
        "policy": doc["policy"],
        "certificates": [],
        "pairwise": [],
        "bound": _unrat(doc["bound"]["value"]),
        "bound_ceiling": int(doc["bound"]["ceiling"]),
    }
    for c in doc["certificates"]:
        out["certificates"].append(
            {
                "colour": int(c["colour"]),
                "k": int(c["k"]),
                "cliques": [tuple(q) for q in c["cliques"]],
                "delta": _unrat(c["delta"]),
                "alpha": _unrat(c["alpha"]),
                "lambda": [_unrat(w) for w in c["lambda"]],
                "mu": [_unrat(w) for w in c["mu"]],
                "mu_vertex_mass": [_unrat(w) for w in c["mu_vertex_mass"]],
            }
        )
    for p in doc.get("pairwise", []):
        out["pairwise"].append(
            {
                "colours": tuple(p["colours"]),
                "delta_sum": _unrat(p["delta_sum"]),
                "mu_product_sum": _unrat(p["mu_product_sum"]),
                "max_intersection": int(p["max_intersection"]),
            }
        )
    return out


def check_certificate(g: EdgeColouredGraph, doc: dict) -> list[str]:
    """Re-verify a stored certificate against a graph without solving.

    Returns a list of problems, empty when the certificate is sound.  The
    checks prove the stored delta exact from both sides: lambda achieves it,
    and the mu vertex-mass cap shows no measure can exceed it.
    """
    cert = certificate_from_json_dict(doc)
    issues: list[str] = []
    if cert["n"] != g.n or cert["r"] != g.r:
        return [f"certificate is for n={cert['n']}, r={cert['r']}, "
                f"graph has n={g.n}, r={g.r}"]
    by_colour = {}
    for c in cert["certificates"]:
        colour, k = c["colour"], c["k"]
        by_colour[colour] = c
        for q in c["cliques"]:
            if len(q) != k:
                issues.append(f"colour {colour}: clique {q} has size {len(q)} != {k}")
            elif not g.is_monochromatic_clique(q, colour):
                issues.append(f"colour {colour}: {q} is not a colour-{colour} clique")
        lam, mu, delta = c["lambda"], c["mu"], c["delta"]
        if len(lam) != g.n or any(w < 0 for w in lam) or sum(lam) != 1:
            issues.append(f"colour {colour}: lambda is not a probability measure")
        elif min(sum(lam[v] for v in q) for q in c["cliques"]) != delta:
            issues.append(
                f"colour {colour}: lambda does not achieve the stated delta"
            )
        if len(mu) != len(c["cliques"]) or any(w < 0 for w in mu) or sum(mu) != 1:
            issues.append(f"colour {colour}: mu is not a probability measure")
        else:
            masses = [Fraction(0)] * g.n
            for q, w in zip(c["cliques"], mu):
                for v in q:
                    masses[v] += w
            if list(c["mu_vertex_mass"]) != masses:
                issues.append(f"colour {colour}: stored mu vertex masses are wrong")
            if max(masses) > delta:
                issues.append(
                    f"colour {colour}: mu vertex mass exceeds delta, so the "
                    f"stated delta cannot be optimal"
                )
        if c["alpha"] * delta != 1:
            issues.append(f"colour {colour}: alpha is not 1/delta")
    for p in cert["pairwise"]:
        i, j = p["colours"]
        if i not in by_colour or j not in by_colour:
            issues.append(f"pairwise row names unknown colours {(i, j)}")
            continue
        ci, cj = by_colour[i], by_colour[j]
        if ci["delta"] + cj["delta"] != p["delta_sum"] or p["delta_sum"] > 1:
            issues.append(f"pairwise ({i}, {j}): delta sum wrong or above 1")
        psum = sum(
            (a * b for a, b in zip(ci["mu_vertex_mass"], cj["mu_vertex_mass"])),
            Fraction(0),
        )
        if psum != p["mu_product_sum"] or psum > 1:
            issues.append(f"pairwise ({i}, {j}): mu product sum wrong or above 1")
        inter = max(
            (
                len(set(x) & set(y))
                for x in ci["cliques"]
                for y in cj["cliques"]
            ),
            default=0,
        )
        if inter != p["max_intersection"] or inter > 1:
            issues.append(f"pairwise ({i}, {j}): intersection bound violated")
    certs = cert["certificates"]
    if len(certs) == 2:
        try:
            expected = two_colour_bound(
                certs[0]["k"], certs[1]["k"], certs[0]["delta"], certs[1]["delta"]
            )
        except ValueError as exc:
            issues.append(f"bound cannot be recomputed: {exc}")
        else:
            if cert["bound"] != expected:
                issues.append(
                    f"stored bound {cert['bound']} != recomputed {expected}"
                )
    elif certs:
        ks = {c["k"] for c in certs}
        alpha_bar = sum((c["alpha"] for c in certs), Fraction(0)) / len(certs)
        if len(ks) != 1 or alpha_bar < 2:
            issues.append("multicolour bound premises do not hold")
        elif cert["bound"] != f_max(len(certs), ks.pop(), alpha_bar):
            issues.append(f"stored bound {cert['bound']} is not the recomputed value")
    if cert["bound"] > g.n:
        issues.append(f"stored bound {cert['bound']} exceeds the vertex count {g.n}")
    return issues
