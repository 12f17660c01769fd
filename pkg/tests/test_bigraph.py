import random

import pytest
from hypothesis import given, settings, strategies as st

from c4free.bigraph import (BiGraph, are_isomorphic, count_lrl_paths, degree_multiset,
                            format_graph, is_c4_free, parse_graph)
from c4free.errors import FormatError, SizeMismatch
from c4free.planes import build_plane

from oracles import has_c4_matrix


@st.composite
def graphs(draw, max_m=8, max_n=8):
    m = draw(st.integers(0, max_m))
    n = draw(st.integers(0, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=m, max_size=m))
    return BiGraph(m, n, tuple(rows))


def permuted(g, rng):
    pl = list(range(g.m))
    pr = list(range(g.n))
    rng.shuffle(pl)
    rng.shuffle(pr)
    return BiGraph.from_edges(g.m, g.n, [(pl[u], pr[v]) for u, v in g.edges()])


def test_k22():
    k22 = BiGraph.complete(2, 2)
    assert not is_c4_free(k22)
    assert count_lrl_paths(k22) == 2


def test_fano():
    g = build_plane(2).incidence
    assert (g.m, g.n, g.edge_count) == (7, 7, 21)
    assert is_c4_free(g)
    assert count_lrl_paths(g) == 21


@pytest.mark.parametrize("n", [0, 1, 5, 30])
def test_star(n):
    assert is_c4_free(BiGraph.complete(1, n))


def test_degree_multiset_examples():
    assert degree_multiset(BiGraph.complete(3, 3), "R") == {3: 3}
    assert degree_multiset(BiGraph.empty(2, 2), "L") == {0: 2}


def test_lrl_zero_when_right_degrees_small():
    g = BiGraph.from_edges(3, 3, [(0, 0), (1, 1), (2, 2)])
    assert count_lrl_paths(g) == 0


@given(graphs())
def test_c4_free_matches_quadruple_enumeration(g):
    assert is_c4_free(g) == (not has_c4_matrix(g.to_matrix()))


@given(graphs())
def test_transpose_symmetry(g):
    t = g.transpose()
    assert t.transpose() == g
    assert is_c4_free(g) == is_c4_free(t)
    assert t.edge_count == g.edge_count


@given(graphs())
def test_edge_count_is_popcount(g):
    assert g.edge_count == len(g.edges()) == sum(g.degrees("L")) == sum(g.degrees("R"))


@given(graphs())
def test_c4_free_graphs_respect_pair_bound(g):
    if is_c4_free(g):
        assert count_lrl_paths(g) <= g.m * (g.m - 1) // 2


@given(graphs())
def test_text_round_trip(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert text.endswith("\n") and not any(line.endswith(" ") for line in text.splitlines())


def test_text_format_exact():
    g = BiGraph.from_edges(2, 3, [(0, 0), (1, 2)])
    assert format_graph(g) == "2 3\n100\n001\n"


@pytest.mark.parametrize("bad", ["", "2 2\n10\n", "2 2\n10\n0x\n", "2 2\n10\n011\n", "a b\n", "2 2 \n10\n01\n"])
def test_bad_text(bad):
    with pytest.raises(FormatError):
        parse_graph(bad)


@settings(max_examples=60)
@given(graphs(max_m=7, max_n=7), st.randoms(use_true_random=False))
def test_iso_random_relabelling(g, rnd):
    h = permuted(g, rnd)
    assert are_isomorphic(g, h)
    assert are_isomorphic(h, g)


@settings(max_examples=80)
@given(graphs(max_m=4, max_n=4), graphs(max_m=4, max_n=4))
def test_iso_matches_brute_force(g, h):
    from itertools import permutations
    if (g.m, g.n) != (h.m, h.n):
        with pytest.raises(SizeMismatch):
            are_isomorphic(g, h)
        return
    he = set(h.edges())
    expected = any(
        {(pl[u], pr[v]) for u, v in g.edges()} == he
        for pl in permutations(range(g.m)) for pr in permutations(range(g.n))
    )
    assert are_isomorphic(g, h) == expected


def test_iso_transitivity_spot_check():
    rng = random.Random(7)
    for _ in range(30):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        g = BiGraph(m, n, tuple(rng.randrange(1 << n) for _ in range(m)))
        h = permuted(g, rng)
        k = permuted(h, rng)
        assert are_isomorphic(g, h) and are_isomorphic(h, k) and are_isomorphic(g, k)


def test_iso_k22_minus_edge():
    a = BiGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0)])
    b = BiGraph.from_edges(2, 2, [(0, 1), (1, 0), (1, 1)])
    assert are_isomorphic(a, b)


def test_iso_side_swap():
    star = BiGraph.complete(1, 3)
    assert are_isomorphic(star, star.transpose(), allow_side_swap=True)
    with pytest.raises(SizeMismatch):
        are_isomorphic(star, star.transpose())
    # same sizes, but only isomorphic after exchanging sides
    g = BiGraph.from_edges(2, 2, [(0, 0), (0, 1)])
    assert not are_isomorphic(g, g.transpose())
    assert are_isomorphic(g, g.transpose(), allow_side_swap=True)


def test_iso_plane_relabelled():
    rng = random.Random(3)
    g = build_plane(4).incidence
    assert are_isomorphic(g, permuted(g, rng))


def test_non_isomorphic_same_degrees():
    # 6-cycle versus two disjoint 4-cycles' worth of degree-2 structure on 3+3
    c6 = BiGraph.from_edges(3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])
    other = BiGraph.from_edges(3, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])
    assert not are_isomorphic(c6, other)
