"""Exact integer arithmetic primitives: valuations, p-parts, prime powers,
cyclotomic polynomial values and gcds.

Everything operates on plain Python ints (arbitrary precision); no floating
point is used anywhere.  Inequalities between huge quantities are therefore
decided exactly.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "val_p",
    "part_p",
    "is_prime",
    "is_prime_power",
    "cyclotomic_eval",
    "gcd",
    "divisors",
    "iroot",
]


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(10_000)

# Miller-Rabin with these bases is a proven primality test below this bound.
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Above the proven bound we add more bases; no composite is known to pass
# even much smaller base sets, and every composite verdict is certain.
_MR_EXTRA_BASES = (
    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
)


def _miller_rabin(n: int, bases: tuple[int, ...]) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test, deterministic for everything this library touches."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if p * p > n:
            return True
        if n % p == 0:
            return n == p
    if n < _MR_PROVEN_BOUND:
        return _miller_rabin(n, _MR_BASES)
    return _miller_rabin(n, _MR_BASES + _MR_EXTRA_BASES)


def val_p(n: int, p: int) -> int:
    """The p-adic valuation of n: the largest e with p**e dividing n."""
    if n == 0:
        raise ValueError("valuation is undefined for 0")
    if n < 0:
        raise ValueError("valuation expects a positive integer")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def part_p(n: int, p: int) -> int:
    """The p-part of n: the largest power of p dividing n."""
    return p ** val_p(n, p)


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n, computed exactly."""
    if n < 0 or k < 1:
        raise ValueError("iroot expects n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << (-(-n.bit_length() // k))  # upper bound: 2**ceil(bits/k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    return x


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, a) with n == p**a if n is a prime power, else None.

    Primes themselves count (a == 1).
    """
    if n < 2:
        raise ValueError("prime-power test expects n >= 2")
    for p in _SMALL_PRIMES:
        if n % p == 0:
            a = 0
            m = n
            while m % p == 0:
                m //= p
                a += 1
            return (p, a) if m == 1 else None
    if is_prime(n):
        return (n, 1)
    # No prime factor below the sieve limit, so any exponent a in n = p**a
    # satisfies 10000**a <= n; it is enough to try prime exponents.
    limit = _SMALL_PRIMES[-1]
    a = 2
    while limit**a <= n:
        if is_prime(a):
            r = iroot(n, a)
            if r**a == n:
                inner = is_prime_power(r)
                if inner is None:
                    return None
                p, b = inner
                return (p, a * b)
        a += 1
    return None


@lru_cache(maxsize=None)
def cyclotomic_eval(i: int, x: int) -> int:
    """Value of the i-th cyclotomic polynomial at the integer x >= 2.

    Computed by exact division: the product of the cyclotomic values over
    all divisors of i equals x**i - 1, so no coefficient tables are needed.
    """
    if i < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if x < 2:
        raise ValueError("cyclotomic evaluation expects x >= 2")
    if i == 1:
        return x - 1
    num = x**i - 1
    for d in divisors(i):
        if d < i:
            q, r = divmod(num, cyclotomic_eval(d, x))
            assert r == 0, (i, x, d)
            num = q
    return num


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) is rejected."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors expects n >= 1")
    small, large = [], []
    for i in range(1, math.isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return small + large[::-1]
