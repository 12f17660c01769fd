import pytest
from hypothesis import given, strategies as st

from c4free.errors import DivisionByZero, NotPrimePower
from c4free.finite_field import field_new, is_irreducible, is_prime_power

from oracles import poly_has_root_mod_p

PRIME_POWERS = [q for q in range(2, 17) if is_prime_power(q)]


def test_prime_powers_up_to_16():
    assert PRIME_POWERS == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_gf2_is_prime_field():
    f = field_new(2)
    assert (f.p, f.d, f.modulus) == (2, 1, None)
    assert f.add(1, 1) == 0


def test_gf4_modulus_is_the_only_irreducible_quadratic():
    # monic quadratics over GF(2), low-degree-first: an irreducible quadratic has no root
    quads = [(a, b, 1) for a in range(2) for b in range(2)]
    irreducible = [c for c in quads if not poly_has_root_mod_p(c, 2)]
    assert irreducible == [(1, 1, 1)]
    assert field_new(4).modulus == (1, 1, 1)


def test_gf4_t_squared():
    f = field_new(4)
    t = 2  # digits (0, 1)
    assert f.mul(t, t) == 3  # t + 1


def test_gf3_mul():
    assert field_new(3).mul(2, 2) == 1


@pytest.mark.parametrize("q", [1, 6, 10, 12, 0])
def test_not_prime_power(q):
    with pytest.raises(NotPrimePower):
        field_new(q)


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        field_new(5).inv(0)
    with pytest.raises(DivisionByZero):
        field_new(8).arith("inv", 0)


@pytest.mark.parametrize("q", [8, 9, 16, 27, 25])
def test_modulus_is_lexicographically_first_irreducible(q):
    f = field_new(q)
    p, d = f.p, f.d
    assert is_irreducible(f.modulus, p)
    # every lexicographically smaller monic polynomial of degree d is reducible
    from itertools import product
    for lower in product(range(p), repeat=d):
        cand = tuple(lower) + (1,)
        if cand == f.modulus:
            break
        assert not is_irreducible(cand, p)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_field_axioms_exhaustive(q):
    f = field_new(q)
    E = range(q)
    for a in E:
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
            assert f.inv(f.inv(a)) == a
        for b in E:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.sub(f.add(a, b), b) == a
            for c in E:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_no_zero_divisors_gf16():
    f = field_new(16)
    for a in range(1, 16):
        assert sorted(f.mul(a, b) for b in range(16)) == list(range(16))


@given(st.integers(1, 3**7 - 1), st.integers(1, 3**7 - 1))
def test_large_untabled_field(a, b):
    # 2187 > table limit, so this exercises direct polynomial arithmetic
    f = field_new(3**7)
    assert f.mul(f.mul(a, b), f.inv(b)) == a
    assert f.inv(f.inv(a)) == a


def test_arith_dispatch():
    f = field_new(7)
    assert f.arith("add", 3, 5) == 1
    assert f.arith("sub", 3, 5) == 5
    assert f.arith("neg", 3) == 4
    with pytest.raises(ValueError):
        f.arith("pow", 3, 5)
