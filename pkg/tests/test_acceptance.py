"""End to end checks for the package's headline guarantees.

Each test prints exactly one pass or fail line, so a full run reads as a
seven line report.  Run with ``pytest tests/test_acceptance.py -s`` to see
the lines as they complete; under default capture they still appear in the
captured-output section of any failure.

The tests are ordered so that the LP bookkeeping check at the end observes
the solves performed by the certificate sweeps earlier in the same process.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import enabling.lp as lp
from enabling import (
    PER_VERTEX_LEX,
    certify,
    exists_enabling,
    f_max,
    improved_inequality,
    integer_extremal_pairs,
    min_n,
    multicolour_blocks,
    multicolour_lower,
    multicolour_upper,
    p4_blowup,
    prime_slope,
    two_colour_bound,
    two_colour_extremal,
    two_colour_lower,
    verify_enabling,
)


@contextmanager
def criterion(num: int):
    """Yield a dict; set its "note" key to the message for the pass line."""
    info = {"note": "ok"}
    try:
        yield info
    except BaseException:
        print(f"criterion {num}: FAIL - {info['note']}", flush=True)
        raise
    print(f"criterion {num}: PASS - {info['note']}", flush=True)


def test_criterion_1_extremal_graphs_meet_the_lower_bound():
    with criterion(1) as info:
        t0 = time.perf_counter()
        pairs = integer_extremal_pairs(200)
        assert pairs, "no integer pairs up to 200"
        for k1, k2 in pairs:
            g = two_colour_extremal(k1, k2)
            assert verify_enabling(g, ((0, k1), (1, k2))).ok, (k1, k2)
            assert g.n == two_colour_lower(k1, k2), (k1, k2, g.n)
        dt = time.perf_counter() - t0
        assert dt < 60.0, f"sweep took {dt:.1f}s"
        info["note"] = (
            f"{len(pairs)} extremal graphs verified, each order equals the "
            f"closed-form lower bound ({dt:.1f}s)"
        )


def test_criterion_2_exhaustive_search_confirms_small_values():
    with criterion(2) as info:
        t0 = time.perf_counter()
        rep7 = exists_enabling(7, 3, 3)
        assert not rep7.found
        assert rep7.graphs_enumerated == 2 ** 21
        rep8 = exists_enabling(8, 3, 3)
        assert rep8.found
        assert min_n(2, 2, 6) == 4
        assert min_n(2, 3, 8) == 6
        dt = time.perf_counter() - t0
        assert dt < 300.0, f"search took {dt:.1f}s"
        info["note"] = (
            f"no (3,3)-enabling colouring among all {rep7.graphs_enumerated} "
            f"on 7 vertices, one exists on 8; n(2,2)=4 and n(2,3)=6 ({dt:.1f}s)"
        )


def test_criterion_3_path_graph_certificate_is_exact():
    with criterion(3) as info:
        t0 = time.perf_counter()
        g = p4_blowup(4)
        res = certify(g, ((0, 2), (1, 2)))
        half = Fraction(1, 2)
        assert [c.delta for c in res.certificates] == [half, half]
        for c in res.certificates:
            assert max(c.mu_vertex_mass) <= c.delta
            assert sum(c.mu.weights) == 1
        assert sum(sum(c.mu.weights) for c in res.certificates) == 2
        assert two_colour_bound(2, 2, half, half) == 4
        assert res.bound == 4 == g.n
        assert res.universal_lower == 4
        dt = time.perf_counter() - t0
        assert dt < 1.0, f"certification took {dt:.3f}s"
        info["note"] = (
            f"two-coloured path on 4 vertices: delta 1/2 in both colours, "
            f"measures tight, bound 4 equals n ({dt * 1000:.0f}ms)"
        )


def test_criterion_4_certificates_for_every_construction():
    with criterion(4) as info:
        t0 = time.perf_counter()
        count = 0
        for k1, k2 in integer_extremal_pairs(200):
            g = two_colour_extremal(k1, k2)
            res = certify(g, ((0, k1), (1, k2)), policy=PER_VERTEX_LEX)
            assert res.bound <= g.n, (k1, k2)
            count += 1
        for r in range(2, 5):
            for k in range(2, 7):
                g = multicolour_blocks(r, k)
                res = certify(g, tuple((c, k) for c in range(r)), policy=PER_VERTEX_LEX)
                assert res.bound <= g.n, (r, k)
                count += 1
        for p in (2, 3, 5, 7):
            g = prime_slope(p)
            res = certify(g, tuple((c, p) for c in range(p + 1)), policy=PER_VERTEX_LEX)
            assert res.bound <= g.n, p
            count += 1
        dt = time.perf_counter() - t0
        assert dt < 600.0, f"sweep took {dt:.1f}s"
        info["note"] = (
            f"{count} graphs certified with exact measures and clean "
            f"pairwise checks ({dt:.1f}s)"
        )


def test_criterion_5_four_colours_at_level_three_need_nine_vertices():
    with criterion(5) as info:
        gb = multicolour_blocks(3, 3)
        assert gb.n == 12 and gb.r == 3
        assert verify_enabling(gb, tuple((c, 3) for c in range(3))).ok
        gp = prime_slope(3)
        assert gp.n == 9 and gp.r == 4
        assert verify_enabling(gp, tuple((c, 3) for c in range(4))).ok
        assert gp.n < 2 * 4 * (3 - 1), "should beat the block construction"
        assert multicolour_lower(4, 3) == 9
        assert multicolour_upper(4, 3) == 9
        info["note"] = (
            "blocks give a 3-coloured witness on 12 vertices; slopes over GF(3) "
            "give a 4-coloured one on 9, matching the lower bound exactly"
        )


def test_criterion_6_quadratic_bound_machinery_is_sound():
    with criterion(6) as info:
        t0 = time.perf_counter()
        rng = random.Random(20260814)
        n_random = 100_000
        for _ in range(n_random):
            m = rng.randint(1, 8)
            xs = []
            for _ in range(m):
                den = rng.randint(1, 64)
                xs.append(Fraction(rng.randint(0, den), den))
            assert improved_inequality(xs) >= 0, xs
        n_binary = 0
        for m in range(1, 13):
            for bits in range(2 ** m):
                xs = [Fraction((bits >> i) & 1) for i in range(m)]
                assert improved_inequality(xs) >= 0, xs
                n_binary += 1
        grid = [Fraction(i, 16) for i in range(0, 4 * 16 + 1)]
        for r in range(2, 7):
            for k in range(2, 13):
                vals = [f_max(r, k, x) for x in grid]
                assert all(a <= b for a, b in zip(vals, vals[1:])), (r, k)
        for r in range(2, 11):
            for k in range(2, 21):
                assert f_max(r, k, 2) >= 2 * r * k - 2 * r * (r - 1), (r, k)
        dt = time.perf_counter() - t0
        assert dt < 120.0, f"checks took {dt:.1f}s"
        info["note"] = (
            f"inequality nonnegative on {n_random} random and {n_binary} binary "
            f"vectors; envelope monotone on [0,4]; block value dominated ({dt:.1f}s)"
        )


def test_criterion_7_every_lp_solve_self_certified():
    with criterion(7) as info:
        if lp.SOLVE_STATS["solves"] == 0:
            # Standalone invocation: put at least one solve on the books.
            certify(p4_blowup(4), ((0, 2), (1, 2)))
        solves = lp.SOLVE_STATS["solves"]
        certified = lp.SOLVE_STATS["certified"]
        assert solves == certified > 0, lp.SOLVE_STATS
        info["note"] = (
            f"{solves} exact LP solves this session, all {certified} "
            f"certified optimal against their duals"
        )
