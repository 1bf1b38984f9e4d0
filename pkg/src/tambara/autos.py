"""Field automorphisms of the backends and finite-group machinery over them.

Three kinds: the identity, Frobenius powers x -> x^(p^m) on GF(p^k), and
Mobius substitutions t -> (at+b)/(ct+d) on F_p(t) given by an invertible
matrix over F_p. Canonical forms (Frobenius exponent reduced mod k, Mobius
matrix scaled so its first nonzero entry is 1) make composition closures and
group comparisons structural.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .fields import GF, FieldElem, RatFunc
from .polys import padd, pmul, pscale, ptrim


@dataclass(frozen=True)
class Trivial:
    kind = "trivial"


@dataclass(frozen=True)
class FrobeniusPower:
    m: int
    kind = "frobenius"

    def __post_init__(self):
        if self.m < 1:
            raise UsageError("frobenius power must be >= 1")


@dataclass(frozen=True)
class Mobius:
    matrix: tuple  # (a, b, c, d) for t -> (a t + b) / (c t + d)
    kind = "mobius"

    def __post_init__(self):
        a, b, c, d = self.matrix
        object.__setattr__(self, "matrix", tuple(int(v) for v in (a, b, c, d)))


def _mobius_check(aut: Mobius, p: int):
    a, b, c, d = (v % p for v in aut.matrix)
    if (a * d - b * c) % p == 0:
        raise UsageError(f"mobius matrix {aut.matrix} is singular mod {p}")
    return a, b, c, d


def aut_canonical(aut, field):
    """Reduce to the canonical representative; identity becomes Trivial."""
    if isinstance(aut, Trivial):
        return aut
    if isinstance(aut, FrobeniusPower):
        if not isinstance(field, GF):
            raise UsageError("frobenius automorphisms require a GF backend")
        m = aut.m % field.k
        return Trivial() if m == 0 else FrobeniusPower(m)
    if isinstance(aut, Mobius):
        if not isinstance(field, RatFunc):
            raise UsageError("mobius automorphisms require a rational function backend")
        p = field.p
        mat = tuple(v % p for v in _mobius_check(aut, p))
        lead = next(v for v in mat if v)
        if lead != 1:
            inv = pow(lead, p - 2, p)
            mat = tuple((v * inv) % p for v in mat)
        if mat == (1, 0, 0, 1):
            return Trivial()
        return Mobius(mat)
    raise UsageError(f"unknown automorphism {aut!r}")


def aut_apply(aut, x: FieldElem) -> FieldElem:
    if isinstance(aut, Trivial):
        return x
    field = x.field
    if isinstance(aut, FrobeniusPower):
        if not isinstance(field, GF):
            raise UsageError("frobenius automorphisms require a GF backend")
        return field.frobenius(x, aut.m)
    if isinstance(aut, Mobius):
        if not isinstance(field, RatFunc):
            raise UsageError("mobius automorphisms require a rational function backend")
        p = field.p
        a, b, c, d = _mobius_check(aut, p)
        num, den = x.data
        top = ptrim((b, a))
        bot = ptrim((d, c))
        deg = max(len(num), len(den)) - 1
        return field.elem(_substitute(num, top, bot, deg, p), _substitute(den, top, bot, deg, p))
    raise UsageError(f"unknown automorphism {aut!r}")


def _substitute(coeffs, top, bot, deg, p):
    """Homogenized substitution: sum c_i top^i bot^(deg-i)."""
    out = ()
    top_pow = (1,)
    bot_pows = [(1,)]
    for _ in range(deg):
        bot_pows.append(pmul(bot_pows[-1], bot, p))
    for i in range(deg + 1):
        c = coeffs[i] if i < len(coeffs) else 0
        if c:
            out = padd(out, pscale(pmul(top_pow, bot_pows[deg - i], p), c, p), p)
        top_pow = pmul(top_pow, top, p)
    return out


def aut_compose(a, b, field):
    """The automorphism x -> a(b(x)), in canonical form."""
    a = aut_canonical(a, field)
    b = aut_canonical(b, field)
    if isinstance(a, Trivial):
        return b
    if isinstance(b, Trivial):
        return a
    if isinstance(a, FrobeniusPower) and isinstance(b, FrobeniusPower):
        return aut_canonical(FrobeniusPower((a.m + b.m) % field.k or field.k), field)
    if isinstance(a, Mobius) and isinstance(b, Mobius):
        # f -> f((B*A) . t) since substitution composes contravariantly
        p = field.p
        a1, b1, c1, d1 = a.matrix
        a2, b2, c2, d2 = b.matrix
        mat = (
            (a2 * a1 + b2 * c1) % p,
            (a2 * b1 + b2 * d1) % p,
            (c2 * a1 + d2 * c1) % p,
            (c2 * b1 + d2 * d1) % p,
        )
        return aut_canonical(Mobius(mat), field)
    raise UsageError("cannot compose automorphisms of different backends")


def aut_inverse(a, field):
    a = aut_canonical(a, field)
    if isinstance(a, Trivial):
        return a
    if isinstance(a, FrobeniusPower):
        return aut_canonical(FrobeniusPower(field.k - a.m), field)
    ma, mb, mc, md = a.matrix  # adjugate inverts up to scalar, which is projective
    return aut_canonical(Mobius((md, (-mb) % field.p, (-mc) % field.p, ma)), field)


def aut_power(a, e: int, field):
    """a composed with itself e times (e may be negative)."""
    a = aut_canonical(a, field)
    if e < 0:
        return aut_power(aut_inverse(a, field), -e, field)
    result = Trivial()
    base = a
    while e:
        if e & 1:
            result = aut_compose(result, base, field)
        base = aut_compose(base, base, field)
        e >>= 1
    return result


def aut_order(a, field) -> int:
    """Least e >= 1 with a^e the identity on the field."""
    a = aut_canonical(a, field)
    if isinstance(a, Trivial):
        return 1
    if isinstance(a, FrobeniusPower):
        k = field.k
        return k // _gcd(a.m, k)
    order, acc = 1, a
    bound = field.p * (field.p**2 - 1) + 1
    while not isinstance(acc, Trivial):
        acc = aut_compose(acc, a, field)
        order += 1
        if order > bound:
            raise UsageError("automorphism order exceeds the projective group bound")
    return order


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def aut_sort_key(aut):
    if isinstance(aut, Trivial):
        return (0,)
    if isinstance(aut, FrobeniusPower):
        return (1, aut.m)
    return (2,) + aut.matrix


def group_closure(auts, field) -> frozenset:
    """The subgroup generated by the given automorphisms.

    Returned as a frozenset of canonical non-identity elements; the trivial
    group is the empty set. Finite because every backend automorphism has
    finite order.
    """
    gens = []
    for a in auts:
        c = aut_canonical(a, field)
        if not isinstance(c, Trivial):
            gens.append(c)
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = aut_compose(g, x, field)
                if not isinstance(y, Trivial) and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def group_with_identity(group):
    return set(group) | {Trivial()}


def in_group(aut, group, field) -> bool:
    c = aut_canonical(aut, field)
    return isinstance(c, Trivial) or c in group


def aut_to_json(aut):
    if isinstance(aut, Trivial):
        return {"kind": "trivial"}
    if isinstance(aut, FrobeniusPower):
        return {"kind": "frobenius", "m": aut.m}
    if isinstance(aut, Mobius):
        return {"kind": "mobius", "matrix": list(aut.matrix)}
    raise UsageError(f"unknown automorphism {aut!r}")
