"""Small elementary number theory helpers (integers only)."""

from __future__ import annotations

import math
from functools import lru_cache, reduce

import numpy as np


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as ((p, e), ...) with p ascending."""
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


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def is_prime_power(n: int) -> bool:
    """True for p**k with p prime and k >= 1."""
    return n >= 2 and len(factorize(n)) == 1


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def units(n: int) -> tuple[int, ...]:
    """Representatives of (Z/nZ)^x in [1, n]; for n = 1 this is (1,)."""
    if n == 1:
        return (1,)
    return tuple(a for a in range(1, n) if math.gcd(a, n) == 1)


def units_array(n: int) -> np.ndarray:
    """Same as :func:`units` as an int64 array (fast for large n)."""
    if n == 1:
        return np.array([1], dtype=np.int64)
    keep = np.ones(n, dtype=bool)
    keep[0] = False
    for p, _ in factorize(n):
        keep[::p] = False
    return np.flatnonzero(keep).astype(np.int64)
