"""Small number-theoretic helpers: factorization, divisors, totient, Moebius.

Everything works by trial division, which is plenty for the level range
(a up to a few thousand) the rest of the package operates on.
"""

from functools import lru_cache


def _check_natural(n):
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple:
    """Return the prime factorization of `n` as ``((p, e), ...)`` sorted by p."""
    _check_natural(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list:
    return [p for p, _ in factorize(n)]


@lru_cache(maxsize=4096)
def _divisors(n):
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list:
    """Strictly increasing list of the positive divisors of `n`."""
    _check_natural(n)
    return list(_divisors(n))


def proper_divisors(n: int) -> list:
    return divisors(n)[:-1]


def totient(n: int) -> int:
    _check_natural(n)
    phi = n
    for p, _ in factorize(n):
        phi = phi // p * (p - 1)
    return phi


def moebius(n: int) -> int:
    _check_natural(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1
