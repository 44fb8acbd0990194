"""Exhaustive set machinery for finite rings.

Ideals, annihilators, product sets, direct sums, inner inverses and the
defining-equation search. Everything here is an oracle: plain
enumeration with no shortcuts, so the rest of the library can be checked
against it.

Internally elements are handled as indices into the canonical
enumeration; the public functions speak Elements and ElementSets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .errors import (
    CardinalityGuard,
    InfiniteRing,
    MixedRings,
    NotAdditivelyClosed,
    NotRegular,
    UniquenessViolation,
)
from .rings import Element, Ring

DEFAULT_CARDINALITY_GUARD = 100_000

# dense operation tables pay off for the small rings the sweeps live in
_TABLE_LIMIT = 512


class FiniteEnumeration:
    """Canonical enumeration of a finite ring: index <-> payload both ways."""

    def __init__(self, ring: Ring, guard: int = DEFAULT_CARDINALITY_GUARD):
        if ring.order is None:
            raise InfiniteRing(f"{ring.spec} is not enumerable")
        if ring.order > guard:
            raise CardinalityGuard(
                f"{ring.spec} has {ring.order} elements, above the guard of {guard}"
            )
        self.ring = ring
        self.count = ring.order
        self.payload_list = list(ring.payloads())
        assert len(self.payload_list) == self.count
        self.index = {p: i for i, p in enumerate(self.payload_list)}

    def __iter__(self) -> Iterator[Element]:
        for p in self.payload_list:
            yield Element(self.ring, p)

    def __len__(self) -> int:
        return self.count

    def element_at(self, i: int) -> Element:
        return Element(self.ring, self.payload_list[i])

    def index_of(self, x: Element) -> int:
        return self.index[x.payload]


class FiniteOps:
    """Index-level arithmetic and cached per-element sets for one finite ring.

    All verification sweeps run on these integer indices; Elements are only
    materialized at the boundaries.
    """

    def __init__(self, ring: Ring, guard: int = DEFAULT_CARDINALITY_GUARD):
        self.ring = ring
        self.enum = FiniteEnumeration(ring, guard)
        self.n = self.enum.count
        pl = self.enum.payload_list
        idx = self.enum.index
        self.zero = idx[ring.zero_payload()]
        self.one = idx[ring.one_payload()]
        n = self.n
        if n <= _TABLE_LIMIT:
            self._mul = [
                [idx[ring.mul_payload(pl[i], pl[j])] for j in range(n)] for i in range(n)
            ]
            self._add = [
                [idx[ring.add_payload(pl[i], pl[j])] for j in range(n)] for i in range(n)
            ]
        else:
            self._mul = None
            self._add = None
        self.neg_t = [idx[ring.neg_payload(pl[i])] for i in range(n)]
        self._star_t = None
        self._rid: list = [None] * n
        self._lid: list = [None] * n
        self._rann: list = [None] * n
        self._lann: list = [None] * n
        self._inners: list = [None] * n
        self._sols: dict = {}

    # -- arithmetic on indices ------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        if self._mul is not None:
            return self._mul[i][j]
        pl = self.enum.payload_list
        return self.enum.index[self.ring.mul_payload(pl[i], pl[j])]

    def add(self, i: int, j: int) -> int:
        if self._add is not None:
            return self._add[i][j]
        pl = self.enum.payload_list
        return self.enum.index[self.ring.add_payload(pl[i], pl[j])]

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg_t[j])

    def mul3(self, i: int, j: int, k: int) -> int:
        return self.mul(self.mul(i, j), k)

    def star(self, i: int) -> int:
        if self._star_t is None:
            pl = self.enum.payload_list
            self._star_t = [
                self.enum.index[self.ring.star_payload(pl[i])] for i in range(self.n)
            ]
        return self._star_t[i]

    def element(self, i: int) -> Element:
        return self.enum.element_at(i)

    def literal(self, i: int) -> str:
        return self.ring.format_literal(self.enum.payload_list[i])

    # -- cached sets ------------------------------------------------------------

    def rid(self, a: int) -> frozenset:
        s = self._rid[a]
        if s is None:
            s = frozenset(self.mul(a, x) for x in range(self.n))
            self._rid[a] = s
        return s

    def lid(self, a: int) -> frozenset:
        s = self._lid[a]
        if s is None:
            s = frozenset(self.mul(x, a) for x in range(self.n))
            self._lid[a] = s
        return s

    def rann(self, a: int) -> frozenset:
        s = self._rann[a]
        if s is None:
            s = frozenset(x for x in range(self.n) if self.mul(a, x) == self.zero)
            self._rann[a] = s
        return s

    def lann(self, a: int) -> frozenset:
        s = self._lann[a]
        if s is None:
            s = frozenset(x for x in range(self.n) if self.mul(x, a) == self.zero)
            self._lann[a] = s
        return s

    def inners(self, a: int) -> tuple:
        t = self._inners[a]
        if t is None:
            t = tuple(x for x in range(self.n) if self.mul3(a, x, a) == a)
            self._inners[a] = t
        return t

    def regular(self, a: int) -> bool:
        return bool(self.inners(a))

    # -- derived predicates ------------------------------------------------------

    def ds_right(self, x: int, w: int) -> bool:
        """R = xR (+) w° as additive groups."""
        s1, s2 = self.rid(x), self.rann(w)
        return len(s1 & s2) == 1 and len(s1) * len(s2) == self.n

    def ds_left(self, x: int, w: int) -> bool:
        """R = Rx (+) °w."""
        s1, s2 = self.lid(x), self.lann(w)
        return len(s1 & s2) == 1 and len(s1) * len(s2) == self.n

    def rann_cap_rid_trivial(self, a: int, b: int) -> bool:
        """a° ∩ bR = {0}."""
        return len(self.rann(a) & self.rid(b)) == 1

    def lann_cap_lid_trivial(self, a: int, c: int) -> bool:
        """°a ∩ Rc = {0}."""
        return len(self.lann(a) & self.lid(c)) == 1

    def eq1_solutions(self, a: int, b: int, c: int) -> tuple:
        """All y with y in bRy ∩ yRc, yab = b and cay = c."""
        key = (a, b, c)
        out = self._sols.get(key)
        if out is not None:
            return out
        n = self.n
        found = []
        for y in range(n):
            if self.mul3(y, a, b) != b or self.mul3(c, a, y) != c:
                continue
            if not any(self.mul3(b, r, y) == y for r in range(n)):
                continue
            if not any(self.mul3(y, r, c) == y for r in range(n)):
                continue
            found.append(y)
        out = tuple(found)
        self._sols[key] = out
        return out

    def is_add_closed(self, members: frozenset) -> bool:
        if not members:
            return False
        for x in members:
            for y in members:
                if self.add(x, y) not in members:
                    return False
        return True


_OPS_CACHE: dict = {}


def finite_ops(ring: Ring, guard: int = DEFAULT_CARDINALITY_GUARD) -> FiniteOps:
    ops = _OPS_CACHE.get(ring)
    if ops is None:
        ops = FiniteOps(ring, guard)
        _OPS_CACHE[ring] = ops
    return ops


# ---------------------------------------------------------------------------
# public, Element-level API


@dataclass(frozen=True)
class ElementSet:
    """A subset of a finite ring, canonically sorted for set equality."""

    ring: Ring
    members: tuple  # sorted payload encodings
    _member_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_member_set", frozenset(self.members))

    @classmethod
    def from_payloads(cls, ring: Ring, payloads) -> "ElementSet":
        return cls(ring, tuple(sorted(set(payloads))))

    def __contains__(self, x) -> bool:
        if isinstance(x, Element):
            if x.ring != self.ring:
                raise MixedRings(f"{x.ring.spec} vs {self.ring.spec}")
            return x.payload in self._member_set
        return x in self._member_set

    def __iter__(self) -> Iterator[Element]:
        for p in self.members:
            yield Element(self.ring, p)

    def __len__(self) -> int:
        return len(self.members)


def _ops_for(x: Element) -> FiniteOps:
    return finite_ops(x.ring)


def _set_from_indices(ops: FiniteOps, indices) -> ElementSet:
    pl = ops.enum.payload_list
    return ElementSet.from_payloads(ops.ring, (pl[i] for i in indices))


def right_ideal(a: Element) -> ElementSet:
    ops = _ops_for(a)
    return _set_from_indices(ops, ops.rid(ops.enum.index_of(a)))


def left_ideal(a: Element) -> ElementSet:
    ops = _ops_for(a)
    return _set_from_indices(ops, ops.lid(ops.enum.index_of(a)))


def right_annihilator(a: Element) -> ElementSet:
    ops = _ops_for(a)
    return _set_from_indices(ops, ops.rann(ops.enum.index_of(a)))


def left_annihilator(a: Element) -> ElementSet:
    ops = _ops_for(a)
    return _set_from_indices(ops, ops.lann(ops.enum.index_of(a)))


def product_set(prefix: Sequence[Element], suffix: Sequence[Element],
                ring: Optional[Ring] = None) -> ElementSet:
    """{p · r · s : r in R} with p, s the folded prefix/suffix products."""
    elems = list(prefix) + list(suffix)
    if ring is None:
        if not elems:
            raise ValueError("product_set needs a ring when both factor lists are empty")
        ring = elems[0].ring
    for e in elems:
        if e.ring != ring:
            raise MixedRings(f"{e.ring.spec} vs {ring.spec}")
    ops = finite_ops(ring)
    p = ops.one
    for e in prefix:
        p = ops.mul(p, ops.enum.index_of(e))
    s = ops.one
    for e in suffix:
        s = ops.mul(s, ops.enum.index_of(e))
    return _set_from_indices(ops, (ops.mul3(p, r, s) for r in range(ops.n)))


def is_direct_sum(x: ElementSet, y: ElementSet) -> bool:
    """R = x (+) y as additive groups; inputs must be additively closed."""
    if x.ring != y.ring:
        raise MixedRings(f"{x.ring.spec} vs {y.ring.spec}")
    ops = finite_ops(x.ring)
    xi = frozenset(ops.enum.index[p] for p in x.members)
    yi = frozenset(ops.enum.index[p] for p in y.members)
    for name, s in (("first", xi), ("second", yi)):
        if not ops.is_add_closed(s):
            raise NotAdditivelyClosed(f"{name} argument is not an additive subgroup")
    return len(xi & yi) == 1 and len(xi) * len(yi) == ops.n


def inner_inverses(a: Element) -> list:
    ops = _ops_for(a)
    return [ops.element(i) for i in ops.inners(ops.enum.index_of(a))]


def is_regular(a: Element) -> bool:
    ops = _ops_for(a)
    return ops.regular(ops.enum.index_of(a))


def first_inner_inverse(a: Element) -> Element:
    ops = _ops_for(a)
    inners = ops.inners(ops.enum.index_of(a))
    if not inners:
        raise NotRegular(f"{a.literal()} has no inner inverse in {a.ring.spec}")
    return ops.element(inners[0])


def brute_force_bc(a: Element, b: Element, c: Element) -> Optional[Element]:
    """The unique y from the defining equation, or None. Exhaustive search."""
    if a.ring != b.ring or a.ring != c.ring:
        raise MixedRings("brute_force_bc arguments from different rings")
    ops = _ops_for(a)
    e = ops.enum
    sols = ops.eq1_solutions(e.index_of(a), e.index_of(b), e.index_of(c))
    if len(sols) > 1:
        raise UniquenessViolation(
            f"multiple solutions of the defining equation for "
            f"a={a.literal()}, b={b.literal()}, c={c.literal()}"
        )
    return ops.element(sols[0]) if sols else None
