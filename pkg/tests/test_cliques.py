import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from enabling.cliques import (
    ALL_CLIQUES,
    PER_VERTEX_LEX,
    choose_family,
    enumerate_cliques,
    find_clique_containing,
    verify_enabling,
)
from enabling.constructions import prime_slope, two_colour_extremal
from enabling.graphs import build, monochromatic_complete, pair_count


def p4_graph():
    # red path 0-1-2-3, blue complement
    return build(4, 2, [0, 1, 1, 0, 1, 0])


def brute_cliques(g, colour, k):
    out = []
    for members in itertools.combinations(range(g.n), k):
        if g.is_monochromatic_clique(members, colour):
            out.append(members)
    return out


def random_graph_strategy(max_n=8, max_r=3):
    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(1, max_r).flatmap(
                lambda r: st.tuples(
                    st.just(r),
                    st.lists(
                        st.integers(0, r - 1),
                        min_size=pair_count(n),
                        max_size=pair_count(n),
                    ),
                )
            ),
        )
    )


def test_find_clique_on_path_graph():
    g = p4_graph()
    assert find_clique_containing(g, 0, 0, 2) == (0, 1)
    assert find_clique_containing(g, 0, 0, 3) is None
    assert find_clique_containing(g, 1, 0, 2) == (0, 2)
    assert find_clique_containing(g, 0, 2, 1) == (2,)


def test_find_clique_on_prime_grid():
    g = prime_slope(3)
    # the colour of slope 1 joins (0,0) to (1,1) and (2,2)
    got = find_clique_containing(g, 1, 0, 3)
    assert got == (0, 4, 8)


def test_find_clique_rejects_bad_arguments():
    g = p4_graph()
    with pytest.raises(ValueError):
        find_clique_containing(g, 0, 4, 2)
    with pytest.raises(ValueError):
        find_clique_containing(g, 0, 0, 0)
    with pytest.raises(ValueError):
        find_clique_containing(g, 2, 0, 2)


def test_enumerate_cliques_on_path_graph():
    g = p4_graph()
    assert enumerate_cliques(g, 0, 2) == [(0, 1), (1, 2), (2, 3)]
    assert enumerate_cliques(g, 1, 2) == [(0, 2), (0, 3), (1, 3)]
    assert enumerate_cliques(g, 0, 3) == []
    assert enumerate_cliques(g, 0, 1) == [(0,), (1,), (2,), (3,)]


@settings(max_examples=60, deadline=None)
@given(random_graph_strategy(), st.integers(1, 4))
def test_enumeration_matches_bruteforce(drawn, k):
    n, (r, colours) = drawn
    g = build(n, r, colours)
    for colour in range(r):
        assert enumerate_cliques(g, colour, k) == brute_cliques(g, colour, k)


@settings(max_examples=60, deadline=None)
@given(random_graph_strategy(), st.integers(1, 4))
def test_find_returns_lex_least_witness_or_none(drawn, k):
    n, (r, colours) = drawn
    g = build(n, r, colours)
    for colour in range(r):
        all_k = brute_cliques(g, colour, k)
        for v in range(n):
            through_v = [c for c in all_k if v in c]
            got = find_clique_containing(g, colour, v, k)
            if through_v:
                assert got == min(through_v)
            else:
                assert got is None


def test_verify_enabling_on_path_graph():
    rep = verify_enabling(p4_graph(), ((0, 2), (1, 2)))
    assert rep.ok
    assert rep.first_failure is None
    assert rep.witnesses[(0, 0)] == (0, 1)
    assert len(rep.witnesses) == 8


def test_verify_reports_first_failure_in_scan_order():
    g = monochromatic_complete(5, r=2, colour=0)
    rep = verify_enabling(g, ((0, 5), (1, 2)))
    assert not rep.ok
    assert rep.first_failure == (0, 1)
    assert rep.witnesses[(0, 1)] is None
    assert rep.witnesses[(0, 0)] == (0, 1, 2, 3, 4)


def test_verify_extremal_instance():
    g = two_colour_extremal(3, 9)
    assert verify_enabling(g, ((0, 3), (1, 9))).ok


def test_verify_rejects_duplicate_or_unknown_colours():
    g = p4_graph()
    with pytest.raises(ValueError):
        verify_enabling(g, ((0, 2), (0, 2)))
    with pytest.raises(ValueError):
        verify_enabling(g, ((2, 2),))


def test_verify_ok_flag_invariant_under_relabelling():
    g = p4_graph()
    # relabel vertices 0..3 -> 3..0 by rebuilding the colour list
    perm = [3, 2, 1, 0]
    cols = [0] * 6
    for (u, v), c in zip(itertools.combinations(range(4), 2), g.colours):
        a, b = sorted((perm[u], perm[v]))
        e = a * (2 * 4 - a - 1) // 2 + (b - a - 1)
        cols[e] = c
    h = build(4, 2, cols)
    assert verify_enabling(h, ((0, 2), (1, 2))).ok


def test_report_json_shape():
    doc = verify_enabling(p4_graph(), ((0, 2), (1, 2))).to_json_dict()
    txt = json.dumps(doc, sort_keys=True)
    assert json.loads(txt)["ok"] is True
    assert doc["witnesses"]["0,0"] == [0, 1]
    assert doc["first_failure"] is None


def test_choose_family_per_vertex_lex_on_path():
    fam = choose_family(p4_graph(), 0, 2, PER_VERTEX_LEX)
    assert fam.cliques == ((0, 1), (1, 2), (2, 3))
    assert fam.covered == {0: 0, 1: 0, 2: 1, 3: 2}


def test_choose_family_all_cliques_is_superset():
    g = two_colour_extremal(2, 2)
    lex = choose_family(g, 1, 2, PER_VERTEX_LEX)
    full = choose_family(g, 1, 2, ALL_CLIQUES)
    assert set(lex.cliques) <= set(full.cliques)
    assert set(full.cliques) == {
        c for c in (tuple(x) for x in brute_cliques(g, 1, 2))
    }


def test_choose_family_unique_clique_either_policy():
    g = monochromatic_complete(4, r=2, colour=0)
    for policy in (PER_VERTEX_LEX, ALL_CLIQUES):
        fam = choose_family(g, 0, 4, policy)
        assert fam.cliques == ((0, 1, 2, 3),)


def test_choose_family_fails_if_a_vertex_is_uncovered():
    g = p4_graph()
    with pytest.raises(ValueError):
        choose_family(g, 0, 3, PER_VERTEX_LEX)
