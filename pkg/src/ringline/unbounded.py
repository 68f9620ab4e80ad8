"""Exact arithmetic demos over infinite rings.

Two phenomena that finite rings cannot show:

* K[X] acting on its fraction field K(X): the points R(1,0) and R(1,X) are
  non-distant, yet their images in U x U are complementary.
* The inclusion Z -> Q induces a bijection P(Z) -> P(Q) that sends some
  non-distant pairs to distant ones.

Nothing infinite is enumerated.  Claims are closed-form identities executed
exactly, or exhaustive checks on a bounded window whose bound is reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .certificate import Certificate
from .field import is_prime

DEMO_SEED = 20240
PROPERTY_CASES = 10_000


class ExactError(ArithmeticError):
    pass


# -- polynomials over GF(p) ----------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Coefficients low to high, reduced mod p, no trailing zeros."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [x % self.p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def const(cls, p: int, c: int) -> "Poly":
        return cls(p, (c,))

    @classmethod
    def x(cls, p: int) -> "Poly":
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.p != self.p:
            raise ExactError("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(self.p, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return Poly(self.p, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(self.p, tuple(out))

    def scale(self, c: int) -> "Poly":
        return Poly(self.p, tuple(c * x for x in self.coeffs))

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv = pow(other.lead, p - 2, p)
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        dv = other.degree
        for i in range(len(rem) - 1, dv - 1, -1):
            c = rem[i] * inv % p
            if c:
                quot[i - dv] = c
                for j, y in enumerate(other.coeffs):
                    rem[i - dv + j] = (rem[i - dv + j] - c * y) % p
        return Poly(p, tuple(quot)), Poly(p, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(pow(self.lead, self.p - 2, self.p))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mon = "" if i == 0 else "X" if i == 1 else f"X^{i}"
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mon)
        return "+".join(terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


@dataclass(frozen=True)
class RatFunc:
    """num/den in lowest terms with den monic."""

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(self.num, self.den)
        num, den = self.num // g, self.den // g
        lc = den.lead
        inv = pow(lc, den.p - 2, den.p)
        object.__setattr__(self, "num", num.scale(inv))
        object.__setattr__(self, "den", den.scale(inv))

    @classmethod
    def of(cls, a: Poly) -> "RatFunc":
        return cls(a, Poly.const(a.p, 1))

    @property
    def p(self) -> int:
        return self.num.p

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, o):
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        return RatFunc(self.num * o.num, self.den * o.den)

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K(X)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, o):
        return self * o.inverse()

    def __repr__(self):
        return repr(self.num) if self.is_polynomial() and self.den.lead == 1 else f"({self.num})/({self.den})"


def normalize_rational(a: int, b: int) -> Fraction:
    """a/b with positive denominator and gcd 1."""
    if b == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(a, b)


def random_poly(rng: random.Random, p: int, max_deg: int = 4, nonzero: bool = False) -> Poly:
    while True:
        f = Poly(p, tuple(rng.randrange(p) for _ in range(rng.randint(0, max_deg) + 1)))
        if not (nonzero and f.is_zero()):
            return f


def random_ratfunc(rng: random.Random, p: int, max_deg: int = 3) -> RatFunc:
    return RatFunc(random_poly(rng, p, max_deg), random_poly(rng, p, max_deg, nonzero=True))


def exact_kernels(p: int = 3, cases: int = PROPERTY_CASES, seed: int = DEMO_SEED) -> Certificate:
    """Seeded algebraic property sweeps over K[X], K(X) and Q."""
    rng = random.Random(seed)
    cert = Certificate("exact_kernels")
    bad_assoc, bad_dist, bad_div, bad_gcd, bad_rat, bad_q = [], [], [], [], [], []
    for _ in range(cases):
        a, b, c = (random_poly(rng, p) for _ in range(3))
        if (a * b) * c != a * (b * c) or (a + b) + c != a + (b + c):
            bad_assoc.append((a, b, c))
        if a * (b + c) != a * b + a * c:
            bad_dist.append((a, b, c))
        if not b.is_zero():
            qt, r = divmod(a, b)
            if qt * b + r != a or r.degree >= b.degree:
                bad_div.append((a, b))
        g = poly_gcd(a, b)
        if not g.is_zero():
            if not (a % g).is_zero() or not (b % g).is_zero() or g.lead != 1:
                bad_gcd.append((a, b))
            # any common divisor divides g
            h = random_poly(rng, p, 2, nonzero=True)
            if not (poly_gcd(a * h, b * h) - (g * h).monic()).is_zero():
                bad_gcd.append((a, b, h))
        f, e = random_ratfunc(rng, p), random_ratfunc(rng, p)
        if (f + e) - e != f or (not e.is_zero() and (f * e) / e != f):
            bad_rat.append((f, e))
        x, y = Fraction(rng.randint(-50, 50), rng.randint(1, 50)), Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        if (x + y) - y != x or x.denominator <= 0 or gcd(x.numerator, x.denominator) != 1:
            bad_q.append((x, y))
    cert.check("poly_associative", not bad_assoc, bad_assoc)
    cert.check("poly_distributive", not bad_dist, bad_dist)
    cert.check("poly_division", not bad_div, bad_div)
    cert.check("poly_gcd", not bad_gcd, bad_gcd)
    cert.check("ratfunc_field_ops", not bad_rat, bad_rat)
    cert.check("rational_normal_form", not bad_q, bad_q)
    cert.details.update(p=p, cases=cases, seed=seed)
    return cert


# -- K[X] inside K(X) ------------------------------------------------------------

def poly_example(p: int, samples: int = 100, seed: int = DEMO_SEED) -> Certificate:
    """R = GF(p)[X] acting on U = GF(p)(X): R(1,0), R(1,X) non-distant with
    complementary images U x {0} and {(u, uX)}."""
    if not is_prime(p):
        raise ExactError(f"{p} is not prime")
    cert = Certificate("poly_example")
    X = Poly.x(p)
    one, zero = Poly.const(p, 1), Poly(p, ())
    Xr, oner, zeror = RatFunc.of(X), RatFunc.of(one), RatFunc.of(zero)

    # (i) det [[1,0],[1,X]] = X, of positive degree, hence no unit of K[X]
    det = one * X - zero * one
    cert.check("i_nondistant", det == X and det.degree >= 1)

    # (ii) unique decomposition (f, g) = s(1, 0) + t(1, X) over K(X)
    rng = random.Random(seed)
    bad = []
    cases = [(oner, Xr)] + [(random_ratfunc(rng, p), random_ratfunc(rng, p)) for _ in range(samples)]
    for f, g in cases:
        t = g / Xr
        s = f - t
        # Cramer: determinant X is nonzero in K(X), so (s, t) is the only solution
        s_c, t_c = (f * Xr - g) / Xr, g / Xr
        if (s + t, t * Xr) != (f, g) or (s, t) != (s_c, t_c) or Xr.is_zero():
            bad.append((repr(f), repr(g)))
    cert.check("ii_complementary", not bad, bad)
    s0 = oner - Xr / Xr
    cert.check("ii_example_1_X", s0.is_zero() and (Xr / Xr) == oner)

    # (iii) (u, 0) = (v, vX) forces v = 0
    bad = []
    for _ in range(samples):
        v = random_ratfunc(rng, p)
        if (v * Xr).is_zero() != v.is_zero():
            bad.append(repr(v))
    cert.check("iii_trivial_intersection", not bad, bad)

    # (iv) (0,1) = r(1,0) + s(1,X) needs s = 1/X and r = -1/X: not in K[X]
    q_, rem = divmod(one, X)
    s_needed = oner / Xr
    r_needed = zeror - s_needed
    in_UU = (r_needed + s_needed, s_needed * Xr) == (zeror, oner)
    cert.check("iv_span_failure", in_UU and not rem.is_zero()
               and not s_needed.is_polynomial() and not r_needed.is_polynomial())
    cert.details.update(p=p, samples=samples, seed=seed, determinant=repr(det),
                        witness={"vector": "(0,1)", "r": repr(r_needed), "s": repr(s_needed),
                                 "X_divides_1": rem.is_zero()})
    return cert


# -- Z inside Q ----------------------------------------------------------------

def _z_canonical(a: int, b: int) -> tuple[int, int]:
    """Units of Z are +-1: make the first nonzero entry positive."""
    return (a, b) if (a > 0 or (a == 0 and b > 0)) else (-a, -b)


def _q_point(a: int, b: int):
    """Q(a, b) as the slope b/a, or 'inf' for a = 0."""
    return "inf" if a == 0 else Fraction(b, a)


def z_to_q_demo(height: int = 10) -> Certificate:
    if height < 2:
        raise ExactError("height must be at least 2")
    cert = Certificate("z_to_q_demo")
    window = range(-height, height + 1)
    zpts = sorted({_z_canonical(a, b) for a in window for b in window if gcd(a, b) == 1})
    images = [_q_point(a, b) for a, b in zpts]
    # Q-points of bounded height, from all nonzero integer pairs
    qpts = {_q_point(a, b) for a in window for b in window if (a, b) != (0, 0)}
    cert.check("injective_on_window", len(set(images)) == len(images))
    cert.check("onto_window", set(images) == qpts)

    # the named pair
    det = 1 * 2 - 0 * 1
    cert.check("pair_nondistant_in_Z", abs(det) != 1)
    cert.check("pair_images_distant_in_Q", _q_point(1, 0) != _q_point(1, 2))
    cert.check("pair_distant_control", abs(1 * 1 - 0 * 1) == 1 and _q_point(1, 0) != _q_point(1, 1))

    # condition: y in Q* implies y in Z*; fails at y = 2
    y = 2
    cert.check("unit_reflection_fails", Fraction(y) != 0 and abs(y) != 1)

    fwd_bad, refl_mismatch, refl_fail = [], [], 0
    for i, (a, b) in enumerate(zpts):
        for c, d in zpts[i + 1:]:
            dt = a * d - b * c
            dz, dq = abs(dt) == 1, dt != 0
            if dz and not dq:
                fwd_bad.append(((a, b), (c, d)))
            fails = dq and not dz
            if fails != (dt != 0 and abs(dt) != 1):
                refl_mismatch.append(((a, b), (c, d)))
            refl_fail += fails
    cert.check("distance_preserved", not fwd_bad, fwd_bad)
    cert.check("reflection_fails_exactly_on_nonunit_dets", not refl_mismatch, refl_mismatch)
    cert.details.update(height=height, z_points=len(zpts), q_points=len(qpts),
                        reflection_failures=refl_fail)
    return cert
