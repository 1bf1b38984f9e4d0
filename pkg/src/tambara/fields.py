"""The two coefficient-field backends: GF(p^k) and the rational functions F_p(t).

Elements are immutable `FieldElem` values holding canonical payloads:

* GF(p^k): the residue tuple of a polynomial of degree < k reduced mod the
  (irreducible, monic) modulus.
* F_p(t): a pair (num, den) of coefficient tuples in lowest terms with den
  monic and nonzero; zero is ((), (1,)).

All arithmetic is exact. Fields compare structurally, so elements of two
separately constructed copies of the same field interoperate.
"""

from __future__ import annotations

import itertools

from .errors import UsageError
from .polys import (
    Poly,
    default_modulus,
    format_poly,
    is_irreducible,
    is_prime,
    padd,
    pdivmod,
    pgcd,
    pmodpow,
    pmonic,
    pmul,
    pneg,
    pscale,
    pstretch,
    ptrim,
    pxgcd,
)


class FieldElem:
    __slots__ = ("field", "data")

    def __init__(self, field, data):
        self.field = field
        self.data = data

    def _peer(self, other):
        if not isinstance(other, FieldElem):
            raise UsageError(f"expected FieldElem, got {type(other).__name__}")
        if self.field is not other.field and self.field != other.field:
            raise UsageError("elements belong to different fields")

    def __add__(self, other):
        self._peer(other)
        return self.field._add(self, other)

    def __sub__(self, other):
        self._peer(other)
        return self.field._add(self, self.field._neg(other))

    def __neg__(self):
        return self.field._neg(self)

    def __mul__(self, other):
        self._peer(other)
        return self.field._mul(self, other)

    def __truediv__(self, other):
        self._peer(other)
        return self.field._mul(self, self.field._inv(other))

    def __pow__(self, e):
        if e < 0:
            return self.field._inv(self) ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self):
        return self.field._inv(self)

    def is_zero(self) -> bool:
        return self.field._is_zero(self)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, FieldElem)
            and self.data == other.data
            and (self.field is other.field or self.field == other.field)
        )

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return self.field.format_elem(self)

    def to_json(self):
        return self.field.elem_to_json(self)


class GF:
    """The finite field F_p[x]/(modulus) with p^k elements."""

    kind = "gf"
    __slots__ = ("p", "k", "modulus", "_hash")

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        if k < 1:
            raise UsageError("extension degree must be >= 1")
        if modulus is None:
            modulus = default_modulus(p, k)
        else:
            modulus = ptrim(tuple(c % p for c in modulus))
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise UsageError(f"modulus must be monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise UsageError(f"modulus {format_poly(modulus)} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self._hash = hash(("gf", p, k, modulus))

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    @property
    def size(self) -> int:
        return self.p**self.k

    def elem(self, coeffs) -> FieldElem:
        residue = pdivmod(ptrim(tuple(c % self.p for c in coeffs)), self.modulus, self.p)[1]
        return FieldElem(self, residue)

    def zero(self) -> FieldElem:
        return FieldElem(self, ())

    def one(self) -> FieldElem:
        return FieldElem(self, (1,))

    def from_int(self, c: int) -> FieldElem:
        return FieldElem(self, ptrim((c % self.p,)))

    def gen(self) -> FieldElem:
        """The residue of x, a root of the modulus."""
        return self.elem((0, 1))

    def elements(self):
        for tail in itertools.product(range(self.p), repeat=self.k):
            yield FieldElem(self, ptrim(tail))

    def random_elem(self, rng) -> FieldElem:
        return FieldElem(self, ptrim(tuple(rng.randrange(self.p) for _ in range(self.k))))

    def _add(self, x, y):
        return FieldElem(self, padd(x.data, y.data, self.p))

    def _neg(self, x):
        return FieldElem(self, pneg(x.data, self.p))

    def _mul(self, x, y):
        return FieldElem(self, pdivmod(pmul(x.data, y.data, self.p), self.modulus, self.p)[1])

    def _inv(self, x):
        if not x.data:
            raise ZeroDivisionError("inversion of zero")
        g, u, _ = pxgcd(x.data, self.modulus, self.p)
        if g != (1,):
            raise UsageError("modulus is not irreducible")
        return FieldElem(self, pdivmod(u, self.modulus, self.p)[1])

    def _is_zero(self, x):
        return not x.data

    def frobenius(self, x, m: int) -> FieldElem:
        if m < 0:
            raise UsageError("frobenius power must be >= 0")
        return FieldElem(self, pmodpow(x.data, self.p**m, self.modulus, self.p))

    def format_elem(self, x) -> str:
        return format_poly(x.data, var="x")

    def elem_to_json(self, x):
        return {"residue": list(x.data)}

    def elem_from_json(self, obj) -> FieldElem:
        if not isinstance(obj, dict) or "residue" not in obj:
            raise UsageError(f"expected a residue object, got {obj!r}")
        return self.elem(obj["residue"])

    def to_json(self):
        return {"kind": "gf", "p": self.p, "k": self.k, "modulus": list(self.modulus)}


def _ratfunc_normalize(num, den, p):
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (1,)
    g = pgcd(num, den, p)
    if len(g) > 1:
        num = pdivmod(num, g, p)[0]
        den = pdivmod(den, g, p)[0]
    if den[-1] != 1:
        c = pow(den[-1], p - 2, p)
        num = pscale(num, c, p)
        den = pscale(den, c, p)
    return num, den


class RatFunc:
    """The rational function field F_p(t) in one variable."""

    kind = "ratfunc"
    __slots__ = ("p", "_hash")

    def __init__(self, p: int):
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        self.p = p
        self._hash = hash(("ratfunc", p))

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.p == other.p

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"F_{self.p}(t)"

    @property
    def size(self):
        return None

    def elem(self, num, den=(1,)) -> FieldElem:
        if isinstance(num, Poly):
            num = num.coeffs
        if isinstance(den, Poly):
            den = den.coeffs
        num = ptrim(tuple(c % self.p for c in num))
        den = ptrim(tuple(c % self.p for c in den))
        return FieldElem(self, _ratfunc_normalize(num, den, self.p))

    def zero(self) -> FieldElem:
        return FieldElem(self, ((), (1,)))

    def one(self) -> FieldElem:
        return FieldElem(self, ((1,), (1,)))

    def from_int(self, c: int) -> FieldElem:
        return FieldElem(self, (ptrim((c % self.p,)), (1,)))

    def gen(self) -> FieldElem:
        """The transcendental t."""
        return FieldElem(self, ((0, 1), (1,)))

    def random_elem(self, rng, max_degree: int = 2) -> FieldElem:
        num = tuple(rng.randrange(self.p) for _ in range(rng.randrange(max_degree + 1) + 1))
        den = ()
        while not den:
            den = ptrim(tuple(rng.randrange(self.p) for _ in range(rng.randrange(max_degree + 1) + 1)))
        return FieldElem(self, _ratfunc_normalize(ptrim(num), den, self.p))

    def _add(self, x, y):
        a, b = x.data
        c, d = y.data
        if b == d:
            return FieldElem(self, _ratfunc_normalize(padd(a, c, self.p), b, self.p))
        num = padd(pmul(a, d, self.p), pmul(c, b, self.p), self.p)
        return FieldElem(self, _ratfunc_normalize(num, pmul(b, d, self.p), self.p))

    def _neg(self, x):
        a, b = x.data
        return FieldElem(self, (pneg(a, self.p), b))

    def _mul(self, x, y):
        a, b = x.data
        c, d = y.data
        if not a or not c:
            return self.zero()
        g1 = pgcd(a, d, self.p)
        if len(g1) > 1:
            a = pdivmod(a, g1, self.p)[0]
            d = pdivmod(d, g1, self.p)[0]
        g2 = pgcd(c, b, self.p)
        if len(g2) > 1:
            c = pdivmod(c, g2, self.p)[0]
            b = pdivmod(b, g2, self.p)[0]
        num = pmul(a, c, self.p)
        den = pmul(b, d, self.p)
        if den[-1] != 1:
            s = pow(den[-1], self.p - 2, self.p)
            num = pscale(num, s, self.p)
            den = pscale(den, s, self.p)
        return FieldElem(self, (num, den))

    def _inv(self, x):
        a, b = x.data
        if not a:
            raise ZeroDivisionError("inversion of zero")
        if a[-1] != 1:
            c = pow(a[-1], self.p - 2, self.p)
            a = pscale(a, c, self.p)
            b = pscale(b, c, self.p)
        return FieldElem(self, (b, a))

    def _is_zero(self, x):
        return not x.data[0]

    def frobenius(self, x, m: int) -> FieldElem:
        if m < 0:
            raise UsageError("frobenius power must be >= 0")
        if m == 0:
            return x
        q = self.p**m
        a, b = x.data
        return FieldElem(self, (pstretch(a, q), pstretch(b, q)))

    def format_elem(self, x) -> str:
        a, b = x.data
        if b == (1,):
            return format_poly(a)
        return f"({format_poly(a)})/({format_poly(b)})"

    def elem_to_json(self, x):
        a, b = x.data
        return {"num": list(a), "den": list(b)}

    def elem_from_json(self, obj) -> FieldElem:
        if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
            raise UsageError(f"expected a num/den object, got {obj!r}")
        return self.elem(obj["num"], obj["den"])

    def to_json(self):
        return {"kind": "ratfunc", "p": self.p}


def frobenius(x: FieldElem, m: int) -> FieldElem:
    """x raised to the p^m power; a ring endomorphism in characteristic p."""
    return x.field.frobenius(x, m)


def field_arith(op: str, x: FieldElem, y=None) -> FieldElem:
    """Named dispatch over the basic field operations."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inv()
    if op == "pow":
        return x**y
    raise UsageError(f"unknown field operation {op!r}")


def field_elements(field, limit=None):
    """All elements of a finite backend, or None when the field is infinite."""
    if isinstance(field, GF):
        if limit is not None and field.size > limit:
            return None
        return list(field.elements())
    return None
