import pytest
from hypothesis import given, strategies as st

from x1chambers.arith import divisors, factorize, moebius, prime_factors, proper_divisors, totient

from oracles import divisors_scan, moebius_scan, totient_scan


@pytest.mark.parametrize("n, phi", [(1, 1), (6, 2), (12, 4)])
def test_totient_examples(n, phi):
    assert totient(n) == phi


@pytest.mark.parametrize("n, mu", [(1, 1), (6, 1), (12, 0)])
def test_moebius_examples(n, mu):
    assert moebius(n) == mu


@pytest.mark.parametrize("n, divs", [(1, [1]), (6, [1, 2, 3, 6]), (49, [1, 7, 49])])
def test_divisors_examples(n, divs):
    assert divisors(n) == divs


def test_against_scans():
    for n in range(1, 400):
        assert divisors(n) == divisors_scan(n)
        assert totient(n) == totient_scan(n)
        assert moebius(n) == moebius_scan(n)


def test_divisor_sum_identities():
    for n in range(1, 10_001):
        divs = divisors(n)
        assert sum(totient(d) for d in divs) == n
        assert sum(moebius(d) for d in divs) == (1 if n == 1 else 0)


@given(st.integers(1, 10**6))
def test_factorization_multiplies_back(n):
    prod = 1
    for p, e in factorize(n):
        assert all(p % q for q in range(2, int(p**0.5) + 1))
        prod *= p**e
    assert prod == n
    assert prime_factors(n) == sorted(prime_factors(n))


@given(st.integers(1, 3000), st.integers(1, 3000))
def test_multiplicativity(m, n):
    from math import gcd

    if gcd(m, n) == 1:
        assert totient(m * n) == totient(m) * totient(n)
        assert moebius(m * n) == moebius(m) * moebius(n)


def test_divisor_list_is_a_copy():
    divisors(12).append(99)
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert proper_divisors(12) == [1, 2, 3, 4, 6]


@pytest.mark.parametrize("bad", [0, -3])
def test_rejects_non_positive(bad):
    for fn in (totient, moebius, divisors):
        with pytest.raises(ValueError):
            fn(bad)


@pytest.mark.parametrize("bad", [2.0, "6", True])
def test_rejects_non_int(bad):
    with pytest.raises(TypeError):
        totient(bad)
