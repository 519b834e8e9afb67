"""Exact integer number theory over a bounded set of primes.

Everything here is exact big-integer arithmetic.  Factorization is always
relative to a fixed finite prime set: the primes of the set are divided out
to full multiplicity and whatever remains is reported as an honest cofactor.
There is deliberately no general-purpose factorization (no rho, no ECM).
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


@dataclass(frozen=True)
class PrimeSet:
    """A strictly ascending finite set of primes."""

    primes: tuple[int, ...]

    def __post_init__(self):
        prev = 1
        for p in self.primes:
            if p <= prev:
                raise ValueError("primes must be strictly ascending")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @classmethod
    def of(cls, primes) -> "PrimeSet":
        return cls(tuple(sorted(set(primes))))

    @property
    def max(self) -> int:
        return self.primes[-1] if self.primes else 0

    def __contains__(self, x: int) -> bool:
        i = bisect.bisect_left(self.primes, x)
        return i < len(self.primes) and self.primes[i] == x

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)


def sieve_primes(bound: int) -> PrimeSet:
    """All primes <= bound, by sieve of Eratosthenes."""
    if bound < 2:
        return PrimeSet(())
    flags = bytearray([1]) * (bound + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    return PrimeSet(tuple(i for i in range(2, bound + 1) if flags[i]))


def factor_small(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization of a machine-word sized integer."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors_of(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factor_small(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    """The Moebius function: 0 on non-squarefree n, else parity of factor count."""
    if n < 1:
        raise ValueError("n must be positive")
    mu = 1
    for _, e in factor_small(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def mult_order(a: int, r: int) -> int:
    """Least k >= 1 with a^k = 1 (mod r), for prime r not dividing a."""
    if a % r == 0:
        raise ValueError(f"{r} divides {a}: order undefined")
    for d in divisors_of(r - 1):
        if pow(a, d, r) == 1:
            return d
    raise AssertionError("order must divide r - 1")  # pragma: no cover


def cyclotomic_value(e: int, x: int) -> int:
    """Phi_e(x) via the Moebius quotient of x^(e/d) - 1 terms.

    All divisions are exact; an inexact one would mean broken arithmetic and
    is asserted against.
    """
    if e < 1:
        raise ValueError("e must be positive")
    num, den = 1, 1
    for d in divisors_of(e):
        mu = moebius(d)
        if mu == 1:
            num *= x ** (e // d) - 1
        elif mu == -1:
            den *= x ** (e // d) - 1
    q, rem = divmod(num, den)
    assert rem == 0, "cyclotomic quotient must be exact"
    return q


@dataclass(frozen=True)
class Factorization:
    """prod(p^e for p, e in parts) * cofactor, with ascending prime parts."""

    parts: tuple[tuple[int, int], ...]
    cofactor: int = 1

    @property
    def smooth(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        v = self.cofactor
        for p, e in self.parts:
            v *= p**e
        return v

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.parts)

    def max_prime(self) -> int:
        return self.parts[-1][0] if self.parts else 0


def factor_over(n: int, prime_set: PrimeSet) -> Factorization:
    """Divide out every prime of the set to full multiplicity."""
    if n < 1:
        raise ValueError("n must be positive")
    parts = []
    for p in prime_set:
        if n == 1:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            parts.append((p, e))
    return Factorization(tuple(parts), n)


def smooth_over(n: int, prime_set: PrimeSet) -> bool:
    """True iff every prime divisor of n lies in the set."""
    if n < 1:
        raise ValueError("n must be positive")
    for p in prime_set:
        if n == 1:
            return True
        while n % p == 0:
            n //= p
    return n == 1


class PhiCache:
    """Memoized factorizations of Phi_e(p^k) over a fixed prime set.

    An optional table of multiplicative orders {r: ord_r(p)} restricts trial
    division to the primes that can actually divide Phi_e(p^k): any prime
    divisor r of it divides p^(ke) - 1, hence ord_r(p^k) divides e.  Results
    are identical with or without the table.

    All entries are key-deterministic, so concurrent use (or per-worker
    partitioning with a later merge) is safe.
    """

    def __init__(self, p: int, prime_set: PrimeSet, ord_table: dict[int, int] | None = None):
        self.p = p
        self.prime_set = prime_set
        self._ords = ord_table
        self._cache: dict[tuple[int, int], Factorization] = {}

    def factor(self, e: int, k: int = 1) -> Factorization:
        key = (k, e)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        value = cyclotomic_value(e, self.p**k)
        if self._ords is None:
            result = factor_over(value, self.prime_set)
        else:
            parts = []
            for r in self.prime_set:
                if value == 1:
                    break
                if r == self.p:
                    continue
                o = self._ords[r]
                if e % (o // math.gcd(o, k)) != 0:
                    continue
                if value % r == 0:
                    exp = 0
                    while value % r == 0:
                        value //= r
                        exp += 1
                    parts.append((r, exp))
            result = Factorization(tuple(parts), value)
        self._cache[key] = result
        return result

    def smooth(self, e: int, k: int = 1) -> bool:
        return self.factor(e, k).smooth


_CACHE_REGISTRY: dict[tuple[int, tuple[int, ...]], PhiCache] = {}


def phi_factor_cached(p: int, k: int, e: int, prime_set: PrimeSet) -> Factorization:
    """Factor Phi_e(p^k) over the set, memoized per (p, prime set)."""
    key = (p, prime_set.primes)
    cache = _CACHE_REGISTRY.get(key)
    if cache is None:
        cache = _CACHE_REGISTRY[key] = PhiCache(p, prime_set)
    return cache.factor(e, k)
