"""Decidable subfield descriptors and their normal forms.

The catalog is Full, FrobImage(m), Fixed(automorphisms), and finite
intersections. Over either backend every catalog descriptor normalizes to a
pair (depth, group): the subfield of elements that are p^depth-th powers and
are fixed by the finite automorphism group. Key facts used throughout:

* Frobenius commutes with every backend automorphism, so the two constraints
  interact cleanly: Fixed(G) intersected with FrobImage(m) is exactly the
  Frobenius image of Fixed(G).
* Containment of normal forms is component-wise: (Ma, Ga) lies inside
  (Mb, Gb) if and only if Ma >= Mb and Ga contains Gb. (Inseparable degree
  separates the depths; Artin's lemma separates the groups.)

On a perfect backend (GF) the depth collapses to 0. Objects outside the
catalog may be used wherever a descriptor is expected as long as they
implement `contains`; normalization then returns None and callers fall back
to sampling, which refutes but never certifies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autos import (
    Trivial,
    aut_apply,
    aut_canonical,
    aut_sort_key,
    aut_to_json,
    group_closure,
    group_with_identity,
)
from .errors import UsageError
from .fields import GF, FieldElem, RatFunc, frobenius


@dataclass(frozen=True)
class Full:
    kind = "full"

    def contains(self, x: FieldElem) -> bool:
        return True


@dataclass(frozen=True)
class FrobImage:
    m: int
    kind = "frob_image"

    def __post_init__(self):
        if self.m < 1:
            raise UsageError("frobenius image depth must be >= 1")

    def contains(self, x: FieldElem) -> bool:
        return frob_image_contains(x, self.m)


@dataclass(frozen=True)
class Fixed:
    auts: tuple
    kind = "fixed"

    def __post_init__(self):
        object.__setattr__(self, "auts", tuple(self.auts))

    def contains(self, x: FieldElem) -> bool:
        return all(aut_apply(a, x) == x for a in self.auts)


@dataclass(frozen=True)
class Intersect:
    parts: tuple
    kind = "intersect"

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    def contains(self, x: FieldElem) -> bool:
        return all(part.contains(x) for part in self.parts)


FULL = Full()


def frob_image_contains(x: FieldElem, m: int) -> bool:
    field = x.field
    if isinstance(field, GF):
        return True  # perfect: the Frobenius is bijective
    q = field.p**m
    num, den = x.data
    return all(c == 0 or i % q == 0 for poly in (num, den) for i, c in enumerate(poly))


def subfield_contains(desc, x: FieldElem) -> bool:
    return desc.contains(x)


@dataclass(frozen=True)
class NormalForm:
    """Canonical catalog form: p^depth-th powers fixed by `group`."""

    depth: int
    group: frozenset

    def contains(self, x: FieldElem) -> bool:
        if self.depth and not frob_image_contains(x, self.depth):
            return False
        return all(aut_apply(a, x) == x for a in self.group)

    def is_full(self) -> bool:
        return self.depth == 0 and not self.group


def normalize(desc, field) -> NormalForm | None:
    """Normal form of a catalog descriptor, or None if outside the catalog."""
    if isinstance(desc, NormalForm):
        return desc
    if isinstance(desc, Full):
        return NormalForm(0, frozenset())
    if isinstance(desc, FrobImage):
        depth = 0 if isinstance(field, GF) else desc.m
        return NormalForm(depth, frozenset())
    if isinstance(desc, Fixed):
        return NormalForm(0, group_closure(desc.auts, field))
    if isinstance(desc, Intersect):
        depth = 0
        auts = []
        for part in desc.parts:
            nf = normalize(part, field)
            if nf is None:
                return None
            depth = max(depth, nf.depth)
            auts.extend(nf.group)
        return NormalForm(depth, group_closure(auts, field))
    return None


def nf_meet(a: NormalForm, b: NormalForm, field) -> NormalForm:
    """Normal form of the intersection of two catalog subfields."""
    return NormalForm(max(a.depth, b.depth), group_closure(a.group | b.group, field))


def nf_subset(a: NormalForm, b: NormalForm) -> bool:
    return a.depth >= b.depth and a.group >= b.group


def nf_to_descriptor(nf: NormalForm):
    """The canonical catalog descriptor denoting a normal form."""
    parts = []
    if nf.depth:
        parts.append(FrobImage(nf.depth))
    if nf.group:
        parts.append(Fixed(tuple(sorted(nf.group, key=aut_sort_key))))
    if not parts:
        return FULL
    if len(parts) == 1:
        return parts[0]
    return Intersect(tuple(parts))


def subfield_to_json(desc):
    if isinstance(desc, NormalForm):
        desc = nf_to_descriptor(desc)
    if isinstance(desc, Full):
        return {"kind": "full"}
    if isinstance(desc, FrobImage):
        return {"kind": "frob_image", "m": desc.m}
    if isinstance(desc, Fixed):
        return {"kind": "fixed", "auts": [aut_to_json(a) for a in desc.auts]}
    if isinstance(desc, Intersect):
        return {"kind": "intersect", "parts": [subfield_to_json(p) for p in desc.parts]}
    if hasattr(desc, "to_json"):
        return desc.to_json()
    raise UsageError(f"cannot serialize descriptor {desc!r}")


def describe(desc, field) -> str:
    """Short human-readable rendering, used by reports and the CLI."""
    nf = normalize(desc, field)
    if nf is None:
        return repr(desc)
    if nf.is_full():
        return "full"
    bits = []
    if nf.depth:
        bits.append(f"p^{nf.depth}-th powers")
    if nf.group:
        names = ",".join(str(aut_to_json(a)) for a in sorted(nf.group, key=aut_sort_key))
        bits.append(f"fixed by {names}")
    return " and ".join(bits)


def ambient_samples(field, rng, count):
    """A deterministic pool of field elements: boundary values plus randoms."""
    base = [field.zero(), field.one(), field.from_int(field.p - 1)]
    if isinstance(field, GF):
        if field.size <= 128:
            return list(field.elements())
        base.append(field.gen())
        base.extend(field.random_elem(rng) for _ in range(count))
        return base
    t = field.gen()
    base.extend([t, t + field.one(), t * t, t * t * t, t**field.p, (t + field.one()).inv()])
    base.extend(field.random_elem(rng) for _ in range(count))
    return base


def nf_members(nf: NormalForm, field, rng, count):
    """Elements guaranteed to lie in the subfield the normal form denotes.

    Group averaging (orbit sums and products) lands in the fixed field for
    any finite group; the Frobenius power then lands in the image. Exhaustive
    filtering is used for small finite backends.
    """
    if isinstance(field, GF) and field.size <= 128:
        return [x for x in field.elements() if nf.contains(x)]
    group = sorted(group_with_identity(nf.group), key=aut_sort_key)
    seen = set()
    out = []

    def push(x):
        y = frobenius(x, nf.depth) if nf.depth else x
        if y.data not in seen:
            seen.add(y.data)
            out.append(y)

    push(field.zero())
    push(field.one())
    for x in ambient_samples(field, rng, count):
        if len(nf.group) == 0:
            push(x)
            continue
        acc_sum = field.zero()
        acc_prod = field.one()
        for g in group:
            gx = aut_apply(g, x)
            acc_sum = acc_sum + gx
            acc_prod = acc_prod * gx
        push(acc_sum)
        push(acc_prod)
        push(acc_sum + acc_prod)
    return out


def descriptor_members(desc, field, rng, count):
    """Sample elements of any descriptor, exact for catalog ones."""
    nf = normalize(desc, field)
    if nf is not None:
        return nf_members(nf, field, rng, count)
    return [x for x in ambient_samples(field, rng, count) if desc.contains(x)]


def subfield_compare(a, b, field, rng=None, samples: int = 48) -> str:
    """Compare two subfields: equal, a_in_b, b_in_a, incomparable, or unknown.

    Catalog descriptors are decided exactly from their normal forms. Anything
    else falls back to membership sampling, which can refute an inclusion or
    establish incomparability (two witnesses) but never wrongly certifies.
    """
    nf_a = normalize(a, field)
    nf_b = normalize(b, field)
    if nf_a is not None and nf_b is not None:
        ab = nf_subset(nf_a, nf_b)
        ba = nf_subset(nf_b, nf_a)
        if ab and ba:
            return "equal"
        if ab:
            return "a_in_b"
        if ba:
            return "b_in_a"
        return "incomparable"
    if nf_b is not None and nf_b.is_full():
        return "a_in_b"
    if nf_a is not None and nf_a.is_full():
        return "b_in_a"
    import random

    rng = rng if rng is not None else random.Random(0)
    refuted_ab = any(
        not b.contains(x) for x in descriptor_members(a, field, rng, samples)
    )
    refuted_ba = any(
        not a.contains(x) for x in descriptor_members(b, field, rng, samples)
    )
    if refuted_ab and refuted_ba:
        return "incomparable"
    return "unknown"
