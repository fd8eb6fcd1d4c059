"""Small finite fields GF(p^k), enough for Paley constructions up to q = 127.

Elements are ints 0..q-1 read as base-p digit vectors (digit i is the
coefficient of x^i).  Extension fields use the irreducible moduli below.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# monic moduli, coefficients low -> high
IRREDUCIBLE = {
    9: (3, (1, 0, 1)),
    25: (5, (2, 0, 1)),
    27: (3, (1, 2, 0, 1)),
    49: (7, (1, 0, 1)),
    81: (3, (2, 1, 0, 0, 1)),
    121: (11, (1, 0, 1)),
    125: (5, (3, 3, 0, 1)),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p**k, or None."""
    for p in range(2, q + 1):
        if q % p == 0:
            k, m = 0, q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


class GF:
    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        p, k = pk
        if k > 1 and q not in IRREDUCIBLE:
            raise ValueError(f"GF({q}) is not in the built-in table of irreducible polynomials")
        self.q, self.p, self.k = q, p, k
        self.modulus = IRREDUCIBLE[q][1] if k > 1 else (0, 1)
        self._digits = [self._to_digits(a) for a in range(q)]

    def _to_digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_digits(self, d: list[int]) -> int:
        a = 0
        for c in reversed(d):
            a = a * self.p + c
        return a

    def add(self, a: int, b: int) -> int:
        p = self.p
        return self._from_digits([(x + y) % p for x, y in zip(self._digits[a], self._digits[b])])

    def neg(self, a: int) -> int:
        p = self.p
        return self._from_digits([(-x) % p for x in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                for i in range(k + 1):
                    prod[top - k + i] = (prod[top - k + i] - c * mod[i]) % p
        return self._from_digits(prod[:k])

    def squares(self) -> frozenset[int]:
        return frozenset(self.mul(a, a) for a in range(1, self.q))

    def quadratic_character(self) -> np.ndarray:
        """chi[a] in {0, 1, -1}: 0 at zero, +1 on nonzero squares."""
        sq = self.squares()
        chi = np.array([0] + [1 if a in sq else -1 for a in range(1, self.q)], dtype=np.int64)
        return chi

    def subtraction_table(self) -> np.ndarray:
        return np.array([[self.sub(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int64)


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
