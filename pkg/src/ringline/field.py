"""Finite fields GF(p^k) with dense lookup tables.

Elements are encoded as integers 0..q-1: the element c_0 + c_1 w + ... +
c_{k-1} w^{k-1} (w a root of the modulus) has code sum(c_i * p**i).  Code 0
is zero and code 1 is one.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q == p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            break
    if not is_prime(p):
        return None
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    return (p, k) if rest == 1 else None


# -- polynomials over GF(p), coefficient lists low degree first -------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        factor = a[-1] * lead_inv % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mc) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(coeffs: list[int] | tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _trim([c % p for c in coeffs])
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k, ordering the lower coefficients
    c_{k-1}, ..., c_0 lexicographically (that is, by the base-p integer
    sum(c_i p^i))."""
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


class FieldGF:
    """The field GF(p^k) with add/mul/neg/inv tables and a Frobenius table."""

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 1:
            raise FieldError("degree must be >= 1")
        if modulus is None:
            modulus = least_irreducible(p, k) if k > 1 else (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus {modulus} is not monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p, self.k, self.modulus = p, k, modulus
        self.q = q = p**k

        vecs = [self.to_vector(x) for x in range(q)]
        self.add = [[self.from_vector([(u + v) % p for u, v in zip(vecs[x], vecs[y])])
                     for y in range(q)] for x in range(q)]
        self.neg = [self.from_vector([(-u) % p for u in vecs[x]]) for x in range(q)]
        self.sub = [[self.add[x][self.neg[y]] for y in range(q)] for x in range(q)]

        # log/antilog tables from a primitive element
        def slow_mul(x, y):
            prod = _poly_mod(_poly_mul(list(vecs[x]), list(vecs[y]), p), list(modulus), p)
            return self.from_vector(prod + [0] * (k - len(prod)))

        self.antilog: list[int] = []
        self.log: list[int] = [0] * q
        for g in range(1, q):
            powers, x = [], 1
            for _ in range(q - 1):
                powers.append(x)
                x = slow_mul(x, g)
            if len(set(powers)) == q - 1:
                self.antilog = powers
                break
        self.primitive = self.antilog[1] if q > 2 else 1
        for i, x in enumerate(self.antilog):
            self.log[x] = i
        n1 = q - 1
        self.mul = [[0] * q for _ in range(q)]
        for x in range(1, q):
            lx = self.log[x]
            row = self.mul[x]
            for y in range(1, q):
                row[y] = self.antilog[(lx + self.log[y]) % n1]
        self.inv = [0] + [self.antilog[(-self.log[x]) % n1] for x in range(1, q)]
        self.frob = [self.power(x, p) for x in range(q)]

    # encoding helpers
    def to_vector(self, x: int) -> tuple[int, ...]:
        return tuple((x // self.p**i) % self.p for i in range(self.k))

    def from_vector(self, v) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(v))

    def power(self, x: int, e: int) -> int:
        if x == 0:
            return 0 if e > 0 else 1
        return self.antilog[(self.log[x] * e) % (self.q - 1)]

    def frobenius(self, t: int = 1) -> list[int]:
        """Table of x -> x^(p^t)."""
        return [self.power(x, self.p ** (t % self.k)) for x in range(self.q)]

    def label(self, x: int) -> str:
        if self.k == 1:
            return str(x)
        terms = []
        for i, c in reversed(list(enumerate(self.to_vector(x)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) if terms else "0"

    def descriptor(self) -> str:
        return f"GF({self.q})" if self.k == 1 else f"GF({self.q})[{','.join(map(str, self.modulus))}]"

    def to_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "q": self.q, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return isinstance(other, FieldGF) and (self.p, self.k, self.modulus) == (
            other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FieldGF({self.p}, {self.k}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def gf(q: int, modulus: tuple[int, ...] | None = None) -> FieldGF:
    """Cached GF(q) for a prime power q."""
    pk = prime_power(q)
    if pk is None:
        raise FieldError(f"{q} is not a prime power")
    return FieldGF(pk[0], pk[1], modulus)
