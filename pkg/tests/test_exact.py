import pytest

from c4free import exact
from c4free.bigraph import is_c4_free
from c4free.errors import SearchBudgetExceeded
from c4free.exact import pair_budget_bound, z_exact
from c4free.zar import TABLE1

from oracles import brute_force_z, brute_force_z_rows


@pytest.mark.parametrize("m,n,expected", [(4, 4, 9), (6, 6, 16), (1, 5, 5)])
def test_examples(m, n, expected):
    value, w = z_exact(m, n)
    assert value == expected
    assert (w.m, w.n) == (m, n) and w.edge_count == value and is_c4_free(w)


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(1, 5))
def test_brute_force_square_range(m, n):
    assert z_exact(m, n)[0] == brute_force_z(m, n)


@pytest.mark.parametrize("m", range(1, 4))
def test_brute_force_wide(m):
    assert z_exact(m, 5)[0] == brute_force_z(m, 5)


@pytest.mark.parametrize("m,n", [(4, 5), (5, 5), (5, 4)])
def test_row_multiset_oracle(m, n):
    assert z_exact(m, n)[0] == brute_force_z_rows(m, n)


@pytest.mark.parametrize("n", range(1, 11))
def test_table_agreement(n):
    value, w = z_exact(n, n)
    assert value == TABLE1[n]
    assert is_c4_free(w) and w.edge_count == value


def test_monotone():
    for m in range(1, 8):
        for n in range(1, 8):
            v = z_exact(m, n)[0]
            assert v <= z_exact(m + 1, n)[0]
            assert v <= z_exact(m, n + 1)[0]
            assert v == z_exact(n, m)[0]


def test_budget():
    from c4free import exact
    exact._cache.clear()
    with pytest.raises(SearchBudgetExceeded) as info:
        z_exact(8, 8, budget=50)
    assert info.value.nodes > 50
    exact._cache.clear()


def test_deterministic_witness_and_threads():
    from c4free import exact
    exact._cache.clear()
    a = z_exact(7, 7)
    exact._cache.clear()
    b = z_exact(7, 7, threads=2)
    exact._cache.clear()
    c = z_exact(7, 7)
    assert a == b == c


def test_pair_budget_bound():
    # r rows, cap, free pairs -> brute force over degree vectors
    from itertools import product
    from math import comb
    for r in range(1, 4):
        for cap in range(0, 5):
            for pairs in range(0, 12):
                best = max(sum(d) for d in product(range(cap + 1), repeat=r)
                           if sum(comb(x, 2) for x in d) <= pairs)
                assert pair_budget_bound(r, cap, pairs) == best


def test_config_matches_keywords():
    from c4free.exact import SearchConfig
    exact._cache.clear()
    a = z_exact(6, 5, config=SearchConfig(budget=10**6, threads=1))
    exact._cache.clear()
    assert z_exact(6, 5) == a
