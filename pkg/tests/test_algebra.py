import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sieve_primes
from symdesign.algebra import (
    FieldTable,
    Factorization,
    PrimePower,
    divisors,
    factorize,
    is_prime,
    is_prime_certain,
)


def test_is_prime_small_values():
    assert is_prime(223)
    assert not is_prime(1)
    assert not is_prime(0)
    assert is_prime(2)
    assert not is_prime(3241)  # 7 * 463
    assert 3241 == 7 * 463


def test_is_prime_agrees_with_sieve_below_million():
    flags = sieve_primes(10**6)
    mismatches = [n for n in range(10**6) if is_prime(n) != flags[n]]
    assert mismatches == []


def test_is_prime_certainty_flag():
    assert is_prime_certain(10**9 + 7) == (True, True)
    prime_big = 2**89 - 1  # Mersenne prime above 2**64
    ok, certain = is_prime_certain(prime_big)
    assert ok and not certain
    # composite verdicts above 2**64 are certain
    assert is_prime_certain(2**89 - 1 + 2) == (False, True)


def test_factorize_known_values():
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert factorize(645120).factors == ((2, 11), (3, 2), (5, 1), (7, 1))
    f = factorize(6710027434028590694400)
    assert f.value == 6710027434028590694400
    prod = 1
    for p, e in f.factors:
        assert is_prime(p)
        prod *= p**e
    assert prod == f.value


def test_factorize_random_reconstruction():
    rng = random.Random(20260823)
    for _ in range(10**4):
        n = rng.randrange(2, 10**12)
        f = factorize(n)
        prod = 1
        for p, e in f.factors:
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_factorization_rejects_bad_list():
    with pytest.raises(ValueError):
        Factorization(10, ((2, 1), (3, 1)))


def test_divisors_streams():
    f360 = factorize(360)
    assert list(divisors(f360, 3, 10)) == [3, 4, 5, 6, 8, 9, 10]
    assert list(divisors(factorize(24), 3, 5)) == [3, 4]
    f = factorize(645120)
    ds = list(divisors(f, 1, 645120))
    assert len(ds) == 144 == f.divisor_count()
    assert ds == sorted(set(ds))
    assert all(645120 % d == 0 for d in ds)


@settings(max_examples=60)
@given(st.integers(min_value=2, max_value=5000))
def test_divisor_count_matches_enumeration(n):
    f = factorize(n)
    assert f.divisor_count() == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_prime_power_recognition():
    assert PrimePower.of(81) == PrimePower(3, 4)
    assert PrimePower.of(2).q == 2
    with pytest.raises(ValueError):
        PrimePower.of(12)
    with pytest.raises(ValueError):
        PrimePower(4, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms_exhaustive(q):
    F = FieldTable(PrimePower.of(q))
    elems = list(F.elements())
    for x in elems:
        for y in elems:
            assert F.add(x, y) == F.add(y, x)
            assert F.mul(x, y) == F.mul(y, x)
            for z in elems:
                assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
                assert F.add(x, F.add(y, z)) == F.add(F.add(x, y), z)
    for x in elems[1:]:
        assert F.mul(x, F.inv(x)) == 1


def test_gf2_addition():
    F = FieldTable(PrimePower(2, 1))
    assert F.add(1, 1) == 0


def test_gf4_product_of_generators():
    F = FieldTable(PrimePower(2, 2))
    # modulus is t^2 + t + 1; elements 2 and 3 encode t and t+1
    assert F.modulus == (1, 1, 1)
    assert F.mul(2, 3) == 1


def test_gf9_inverses_exhaustive():
    F = FieldTable(PrimePower(3, 2))
    for x in range(1, 9):
        assert F.mul(x, F.inv(x)) == 1


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 49, 81])
def test_frobenius_is_additive(q):
    F = FieldTable(PrimePower.of(q))
    p = F.p
    for x in F.elements():
        for y in F.elements():
            assert F.pow(F.add(x, y), p) == F.add(F.pow(x, p), F.pow(y, p)) or (
                F.add(x, y) == 0 and F.add(F.pow(x, p), F.pow(y, p)) == 0
            )


def test_multiplicative_group_cyclic():
    for q in (4, 8, 9, 16):
        F = FieldTable(PrimePower.of(q))
        powers = {F.pow(F.generator, e) for e in range(1, q)}
        assert powers == set(range(1, q))
