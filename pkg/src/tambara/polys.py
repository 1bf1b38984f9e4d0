"""Dense polynomials over the prime fields F_p.

Coefficients are kept as a tuple of ints in [0, p), little-endian, with no
trailing zeros; the zero polynomial is the empty tuple. That makes equality
of values equality of tuples, which the rest of the package relies on for
canonical forms. The raw tuple helpers (`padd`, `pmul`, ...) are the hot
path; the `Poly` class is the public value type wrapping them.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import UsageError


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def ptrim(coeffs):
    i = len(coeffs)
    while i and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


def padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return ptrim(out)


def pneg(a, p):
    return tuple((-c) % p for c in a)


def psub(a, b, p):
    return padd(a, pneg(b, p), p)


def pscale(a, c, p):
    c %= p
    if c == 0:
        return ()
    if c == 1:
        return a
    return tuple((x * c) % p for x in a)


def pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ptrim([c % p for c in out])


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    inv_lead = pow(b[-1], p - 2, p)
    rem = list(a)
    quo = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1] % p
        if c:
            q = (c * inv_lead) % p
            quo[i] = q
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - q * y) % p
    return ptrim(quo), ptrim(rem)


def pmonic(a, p):
    if not a or a[-1] == 1:
        return a
    return pscale(a, pow(a[-1], p - 2, p), p)


def pgcd(a, b, p):
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    return pmonic(a, p)


def pxgcd(a, b, p):
    """Extended gcd; returns monic (g, u, v) with u*a + v*b = g."""
    r0, r1 = a, b
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, psub(u0, pmul(q, u1, p), p)
        v0, v1 = v1, psub(v0, pmul(q, v1, p), p)
    if r0 and r0[-1] != 1:
        c = pow(r0[-1], p - 2, p)
        r0, u0, v0 = pscale(r0, c, p), pscale(u0, c, p), pscale(v0, c, p)
    return r0, u0, v0


def pmodpow(a, e, modulus, p):
    result = (1,)
    base = pdivmod(a, modulus, p)[1]
    while e:
        if e & 1:
            result = pdivmod(pmul(result, base, p), modulus, p)[1]
        base = pdivmod(pmul(base, base, p), modulus, p)[1]
        e >>= 1
    return result


def pstretch(a, q):
    """Spread exponents by q: sum c_i t^i becomes sum c_i t^(i*q).

    Over F_p with q a power of p this is exactly the q-th power map, since
    the coefficients satisfy c^q = c.
    """
    if not a:
        return ()
    out = [0] * ((len(a) - 1) * q + 1)
    for i, c in enumerate(a):
        out[i * q] = c
    return tuple(out)


def peval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def is_irreducible(coeffs, p) -> bool:
    """Trial-division irreducibility test, adequate for the small moduli used here."""
    a = ptrim(tuple(c % p for c in coeffs))
    d = len(a) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    for deg in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            cand = tail + (1,)
            if not pdivmod(a, cand, p)[1]:
                return False
    return True


def default_modulus(p: int, k: int):
    """First monic irreducible of degree k in ascending coefficient order."""
    for enc in range(p**k):
        digits = []
        v = enc
        for _ in range(k):
            digits.append(v % p)
            v //= p
        cand = tuple(digits) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise UsageError(f"no irreducible modulus of degree {k} over F_{p}")


class Poly:
    """A polynomial over F_p with canonical (trimmed, reduced) coefficients."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p):
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        self.coeffs = ptrim(tuple(c % p for c in coeffs))
        self.p = p

    @classmethod
    def _make(cls, coeffs, p):
        poly = object.__new__(cls)
        poly.coeffs = coeffs
        poly.p = p
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "Poly":
        return Poly._make(pmonic(self.coeffs, self.p), self.p)

    def _check(self, other):
        if not isinstance(other, Poly):
            raise UsageError(f"expected Poly, got {type(other).__name__}")
        if other.p != self.p:
            raise UsageError(f"coefficient moduli differ: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        return Poly._make(padd(self.coeffs, other.coeffs, self.p), self.p)

    def __sub__(self, other):
        self._check(other)
        return Poly._make(psub(self.coeffs, other.coeffs, self.p), self.p)

    def __neg__(self):
        return Poly._make(pneg(self.coeffs, self.p), self.p)

    def __mul__(self, other):
        self._check(other)
        return Poly._make(pmul(self.coeffs, other.coeffs, self.p), self.p)

    def __divmod__(self, other):
        self._check(other)
        q, r = pdivmod(self.coeffs, other.coeffs, self.p)
        return Poly._make(q, self.p), Poly._make(r, self.p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise UsageError("negative polynomial power")
        result = Poly._make((1,), self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Poly) and self.p == other.p and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self.coeffs)}, p={self.p})"

    def to_json(self):
        return list(self.coeffs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a._check(b)
    return Poly._make(pgcd(a.coeffs, b.coeffs, a.p), a.p)


def poly_arith(op: str, a: Poly, b: Poly):
    """Named dispatch over the basic polynomial operations."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divmod":
        return divmod(a, b)
    if op == "gcd":
        return poly_gcd(a, b)
    raise UsageError(f"unknown polynomial operation {op!r}")


def format_poly(coeffs, var="t"):
    if not coeffs:
        return "0"
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(var if c == 1 else f"{c}{var}")
        else:
            terms.append(f"{var}^{i}" if c == 1 else f"{c}{var}^{i}")
    return "+".join(reversed(terms))
