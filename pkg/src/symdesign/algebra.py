"""Exact arithmetic: primality, factorization, divisor streams, GF(p^a) tables.

Everything here works on plain Python ints, so all results are exact at any
size.  Primality is deterministic below 2**64 (fixed Miller-Rabin witness
set) and Baillie-PSW above; ``is_prime_certain`` reports which regime was
used so callers can flag probabilistic answers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "is_prime",
    "is_prime_certain",
    "Factorization",
    "factorize",
    "divisors",
    "divisor_count",
    "PrimePower",
    "FieldTable",
]


# Deterministic for all n < 2**64 (Sorenson & Webster witness set).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIME_LIMIT = 1_000_000


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    """Primes below 10**6 by sieve of Eratosthenes."""
    limit = _SMALL_PRIME_LIMIT
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(limit) if sieve[i])


def _miller_rabin(n: int, base: int) -> bool:
    """True if n is a strong probable prime to the given base."""
    if base % n == 0:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = (x * x) % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    assert n > 0 and n % 2 == 1
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameter choice."""
    # find D in 5, -7, 9, -11, ... with jacobi(D, n) == -1
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
        if abs(d) > 1_000_000:  # pragma: no cover - would mean n is square
            raise ArithmeticError(f"no Lucas parameter found for {n}")
    p, q = 1, (1 - d) // 4
    # n + 1 = t * 2**s with t odd
    t = n + 1
    s = 0
    while t % 2 == 0:
        t //= 2
        s += 1
    # Lucas sequences U_t, V_t by binary ladder
    u, v, qk = 1, p, q % n
    for bit in bin(t)[3:]:
        u, v = (u * v) % n, (v * v - 2 * qk) % n
        qk = (qk * qk) % n
        if bit == "1":
            u, v = ((p * u + v) * ((n + 1) // 2)) % n, ((d * u + p * v) * ((n + 1) // 2)) % n
            qk = (qk * q) % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        u, v = (u * v) % n, (v * v - 2 * qk) % n
        qk = (qk * qk) % n
        if v == 0:
            return True
    return False


def is_prime_certain(n: int) -> tuple[bool, bool]:
    """Primality of n together with whether the answer is deterministic.

    Returns (prime, certain).  Below 2**64 the fixed Miller-Rabin witness
    set is a proof; above, Baillie-PSW (no known counterexample) is used
    and certainty is reported as False.
    """
    if n < 0:
        raise ValueError("primality is defined for nonnegative integers")
    if n < 2:
        return False, True
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True, True
        if n % p == 0:
            return False, True
    if n < 2**64:
        return all(_miller_rabin(n, a) for a in _MR_WITNESSES), True
    if math.isqrt(n) ** 2 == n:
        return False, True
    ok = _miller_rabin(n, 2) and _strong_lucas(n)
    return ok, not ok  # a composite verdict is certain, a prime one is not


def is_prime(n: int) -> bool:
    return is_prime_certain(n)[0]


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization: value == prod(p**e)."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        for p, e in self.factors:
            prod *= p**e
        if prod != self.value:
            raise ValueError("factor list does not reconstruct the value")

    def divisor_count(self) -> int:
        n = 1
        for _, e in self.factors:
            n *= e + 1
        return n


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite n (Brent's cycle variant).

    The additive constant runs through a fixed schedule, so results are
    reproducible run to run.
    """
    if n % 2 == 0:
        return 2
    for c in itertools.count(1):
        y, m = 2, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle collapsed; retry with the next constant


def factorize(n: int) -> Factorization:
    """Complete factorization by trial division to 10**6, then Pollard rho."""
    if n < 2:
        raise ValueError("factorize needs n >= 2")
    value = n
    counts: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(value, tuple(sorted(counts.items())))


def divisors(f: Factorization, lo: int = 1, hi: int | None = None):
    """All divisors d of f.value with lo <= d <= hi, ascending, each once."""
    if hi is None:
        hi = f.value
    if lo > hi:
        raise ValueError("empty range: lo > hi")
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    divs.sort()
    for d in divs:
        if d > hi:
            break
        if d >= lo:
            yield d


def divisor_count(f: Factorization) -> int:
    return f.divisor_count()


@dataclass(frozen=True)
class PrimePower:
    """q = p**a with p verified prime."""

    p: int
    a: int
    q: int = field(init=False)

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError("exponent must be positive")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "q", self.p**self.a)

    @classmethod
    def of(cls, q: int) -> "PrimePower":
        """Recognize q as p**a or raise."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        for p in _small_primes():
            if q % p == 0:
                a = 0
                while q % p == 0:
                    q //= p
                    a += 1
                if q != 1:
                    raise ValueError("not a prime power")
                return cls(p, a)
        if is_prime(q):
            return cls(q, 1)
        raise ValueError(f"{q} is not a prime power")


# --- polynomial helpers over GF(p), coefficient lists low-degree first ---


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce by monic mod
    deg = len(mod) - 1
    for i in range(len(out) - 1, deg - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j, mj in enumerate(mod[:-1]):
                out[i - deg + j] = (out[i - deg + j] - c * mj) % p
    return _poly_trim(out[:deg])


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p) by trial division."""
    a = len(poly) - 1
    if a == 1:
        return True
    # divide by every monic polynomial of degree 1..a//2
    for d in range(1, a // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            # polynomial remainder of poly by div
            rem = list(poly)
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i]
                if c:
                    rem[i] = 0
                    for j in range(d):
                        rem[i - d + j] = (rem[i - d + j] - c * div[j]) % p
            if not _poly_trim(rem):
                return False
    return True


class FieldTable:
    """GF(p^a) with log/antilog tables for a fixed multiplicative generator.

    Elements are ints in [0, q): the base-p digits of x are the coefficients
    of the polynomial residue, low degree first.  The reducing modulus is
    the lexicographically smallest monic irreducible of degree a over GF(p)
    (coefficients compared low-degree-first), so tables are reproducible.
    """

    def __init__(self, prime_power: PrimePower):
        self.prime_power = prime_power
        p, a, q = prime_power.p, prime_power.a, prime_power.q
        self.p, self.a, self.q = p, a, q
        self.modulus = self._smallest_irreducible(p, a)
        self._mul_table: list[int] | None = None
        self._build_logs()

    @staticmethod
    def _smallest_irreducible(p: int, a: int) -> tuple[int, ...]:
        if a == 1:
            return (0, 1)
        for coeffs in itertools.product(range(p), repeat=a):
            poly = coeffs + (1,)
            if _is_irreducible(poly, p):
                return poly
        raise AssertionError("no irreducible polynomial found")  # pragma: no cover

    # element <-> coefficient vector
    def _vec(self, x: int) -> list[int]:
        out = []
        for _ in range(self.a):
            out.append(x % self.p)
            x //= self.p
        return out

    def _enc(self, v: list[int]) -> int:
        x = 0
        for c in reversed(v):
            x = x * self.p + c
        return x

    def add(self, x: int, y: int) -> int:
        xv, yv = self._vec(x), self._vec(y)
        return self._enc([(u + w) % self.p for u, w in zip(xv, yv)])

    def neg(self, x: int) -> int:
        return self._enc([(-c) % self.p for c in self._vec(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def _raw_mul(self, x: int, y: int) -> int:
        prod = _poly_mulmod(self._vec(x), self._vec(y), list(self.modulus), self.p)
        prod += [0] * (self.a - len(prod))
        return self._enc(prod)

    def _build_logs(self) -> None:
        q = self.q
        if q == 2:  # trivial multiplicative group
            self.generator = 1
            self.exp = [1]
            self.log = [0, 0]
            return
        for g in range(2, q):
            seen = set()
            x = 1
            for _ in range(q - 1):
                x = self._raw_mul(x, g)
                seen.add(x)
            if len(seen) == q - 1:
                self.generator = g
                break
        else:  # pragma: no cover - multiplicative group is always cyclic
            raise AssertionError("no multiplicative generator")
        self.exp = [0] * (q - 1)
        self.log = [0] * q
        x = 1
        for i in range(q - 1):
            self.exp[i] = x
            self.log[x] = i
            x = self._raw_mul(x, self.generator)

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inversion of zero in GF(q)")
        return self.exp[(-self.log[x]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e <= 0:
                raise ZeroDivisionError("0**e with e <= 0")
            return 0
        return self.exp[(self.log[x] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)
