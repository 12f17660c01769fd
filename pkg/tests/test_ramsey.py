import random
from itertools import combinations

import pytest

from c4free.bigraph import BiGraph, are_isomorphic, degree_multiset, is_c4_free
from c4free.errors import FormatError, SizeMismatch
from c4free.finite_field import field_new
from c4free.ramsey import (Coloring, bk2_lower, bk2_lower_report, bk2_report, bk2_upper,
                           color_class, field_coloring, format_coloring, parse_coloring,
                           registry, verify_coloring, verify_g18_structure)
from c4free.zar import z_upper_best

from oracles import has_c4_matrix

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9]


def all_one(n):
    return Coloring(n, 2, tuple((1,) * n for _ in range(n)))


def test_color_class_examples():
    c = all_one(2)
    assert color_class(c, 1) == BiGraph.complete(2, 2)
    assert color_class(c, 2) == BiGraph.empty(2, 2)
    assert color_class(registry().d_coloring, 3).edge_count == 81


def test_all_one_invalid():
    rep = verify_coloring(all_one(2))
    assert rep.complete and not rep.valid


def test_partial_is_incomplete():
    c = Coloring(2, 2, ((1, 0), (2, 1)))
    rep = verify_coloring(c)
    assert not rep.complete and not rep.valid
    assert rep.per_color_edges == (2, 1)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_field_coloring_exhaustive(k):
    c = field_coloring(k)
    assert c.n == k * k and c.complete
    for a in range(1, k + 1):
        mat = [[int(x == a) for x in row] for row in c.cells]
        assert sum(map(sum, mat)) == k**3
        assert not has_c4_matrix(mat)


@pytest.mark.parametrize("k", PRIME_POWERS)
def test_field_coloring_valid(k):
    c = field_coloring(k)
    rep = verify_coloring(c)
    assert rep.valid
    assert rep.per_color_edges == (k**3,) * k


@pytest.mark.parametrize("k", [3, 4, 5])
def test_field_coloring_unique_solution_per_pair(k):
    # two distinct L vertices share at most one R neighbour in each colour
    c = field_coloring(k)
    for a in range(1, k + 1):
        g = color_class(c, a)
        for u, w in combinations(range(c.n), 2):
            assert (g.rows[u] & g.rows[w]).bit_count() <= 1


def test_field_coloring_rule_gf4():
    f = field_new(4)
    c = field_coloring(4)
    rng = random.Random(0)
    for _ in range(50):
        a, b, a2, b2 = (rng.randrange(4) for _ in range(4))
        expected = f.sub(f.mul(a, a2), f.add(b, b2)) + 1
        assert c.cells[4 * a + b][4 * a2 + b2] == expected


def test_coloring_text_round_trip():
    c = field_coloring(3)
    text = format_coloring(c)
    assert text.startswith("9 3\n") and text.endswith("\n")
    assert parse_coloring(text) == c


@pytest.mark.parametrize("bad", ["", "2 2\n12\n", "2 2\n13\n21\n", "2 10\n12\n21\n", "2 2\n1 2\n21\n"])
def test_bad_coloring_text(bad):
    with pytest.raises(FormatError):
        parse_coloring(bad)


def test_registry_witnesses():
    r = registry()
    g = r.g18
    assert g.edge_count == 81 and is_c4_free(g)
    assert degree_multiset(g, "L") == {4: 9, 5: 9} == degree_multiset(g, "R")
    d = r.d_coloring
    assert d.complete and d.k == 4 and d.n == 18


def test_d_coloring_verifies():
    rep = verify_coloring(registry().d_coloring)
    assert rep.valid and rep.per_color_edges == (81, 81, 81, 81)


@pytest.mark.parametrize("alpha", [1, 2, 3, 4])
def test_d_classes_isomorphic_to_g18(alpha):
    r = registry()
    assert are_isomorphic(color_class(r.d_coloring, alpha), r.g18)


def test_g18_structure():
    rep = verify_g18_structure(registry().g18)
    assert rep.degree_ok and rep.quarters_ok


def test_g18_structure_padded_k99():
    rows = tuple([(1 << 9) - 1] * 9 + [0] * 9)
    rep = verify_g18_structure(BiGraph(18, 18, rows))
    assert not rep.degree_ok


def test_g18_structure_size():
    with pytest.raises(SizeMismatch):
        verify_g18_structure(BiGraph.empty(9, 9))


def test_g18_single_edge_moves_fail():
    g = registry().g18
    edges = g.edges()
    non = [(u, v) for u in range(18) for v in range(18) if not g.has_edge(u, v)]
    rng = random.Random(2024)
    for _ in range(20):
        e = rng.choice(edges)
        f = rng.choice(non)
        moved = BiGraph.from_edges(18, 18, [x for x in edges if x != e] + [f])
        rep = verify_g18_structure(moved)
        assert not (rep.degree_ok and rep.quarters_ok)


def test_bk2_values():
    assert [bk2_lower(k) for k in (2, 3, 4, 5)] == [5, 10, 19, 26]
    assert [bk2_upper(k) for k in (2, 3, 4, 5)] == [5, 11, 19, 28]
    assert bk2_lower_report(4)[1] == "witness:d4"


def test_bk2_upper_k2_derivation():
    assert 2 * z_upper_best(5) == 24 < 25
    assert 2 * z_upper_best(4) == 18 >= 16


@pytest.mark.parametrize("k", range(5, 11))
def test_bk2_upper_closed_form(k):
    assert bk2_upper(k) == k * k + k - 2


@pytest.mark.parametrize("k", range(2, 11))
def test_bk2_order(k):
    assert bk2_lower(k) <= bk2_upper(k)


def test_bk2_report_text():
    text = bk2_report(4).to_text()
    assert "lower=19" in text and "upper=19" in text
