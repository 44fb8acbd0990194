"""Backend-neutral predicate vocabulary.

The inverse engine asks ideal/annihilator questions through one of two
interchangeable implementations:

* FiniteBackend — exhaustive enumeration over any finite ring (the oracle);
* MatrixBackend — rank/subspace computations over a matrix ring M_k(F)
  with F the rationals or a prime field, which makes the infinite case
  fully decidable.

The matrix backend rests on the right-ideal/column-space correspondence
in M_k(F): mR = {x : col(x) ⊆ col(m)}, m° = {x : col(x) ⊆ null(m)}, and
R = mR (+) w° holds iff F^k = col(m) (+) null(w); dually with row spaces
and left null spaces for left ideals and left annihilators.
"""

from __future__ import annotations

from typing import Optional

from . import linalg
from .errors import NotRegular
from .finite import finite_ops
from .linalg import Side, SubspaceBasis
from .rings import Element, MatrixRing, Ring


class FiniteBackend:
    name = "finite"

    def __init__(self, ring: Ring):
        self.ring = ring
        self.ops = finite_ops(ring)

    def _i(self, x: Element) -> int:
        return self.ops.enum.index_of(x)

    # memberships: x in gR / x in Rg
    def in_right_ideal(self, x: Element, g: Element) -> bool:
        return self._i(x) in self.ops.rid(self._i(g))

    def in_left_ideal(self, x: Element, g: Element) -> bool:
        return self._i(x) in self.ops.lid(self._i(g))

    def right_ideal_eq(self, x: Element, y: Element) -> bool:
        return self.ops.rid(self._i(x)) == self.ops.rid(self._i(y))

    def left_ideal_eq(self, x: Element, y: Element) -> bool:
        return self.ops.lid(self._i(x)) == self.ops.lid(self._i(y))

    def right_ann_eq(self, x: Element, y: Element) -> bool:
        return self.ops.rann(self._i(x)) == self.ops.rann(self._i(y))

    def left_ann_eq(self, x: Element, y: Element) -> bool:
        return self.ops.lann(self._i(x)) == self.ops.lann(self._i(y))

    def right_ann_subset(self, x: Element, y: Element) -> bool:
        return self.ops.rann(self._i(x)) <= self.ops.rann(self._i(y))

    def left_ann_subset(self, x: Element, y: Element) -> bool:
        return self.ops.lann(self._i(x)) <= self.ops.lann(self._i(y))

    def decomp_right(self, x: Element, w: Element) -> bool:
        """R = xR (+) w°."""
        return self.ops.ds_right(self._i(x), self._i(w))

    def decomp_left(self, x: Element, w: Element) -> bool:
        """R = Rx (+) °w."""
        return self.ops.ds_left(self._i(x), self._i(w))

    def rann_cap_rid_trivial(self, a: Element, b: Element) -> bool:
        """a° ∩ bR = {0}."""
        return self.ops.rann_cap_rid_trivial(self._i(a), self._i(b))

    def lann_cap_lid_trivial(self, a: Element, c: Element) -> bool:
        """°a ∩ Rc = {0}."""
        return self.ops.lann_cap_lid_trivial(self._i(a), self._i(c))

    def is_regular(self, x: Element) -> bool:
        return self.ops.regular(self._i(x))

    def inner_inverse(self, x: Element) -> Element:
        inners = self.ops.inners(self._i(x))
        if not inners:
            raise NotRegular(f"{x.literal()} has no inner inverse in {self.ring.spec}")
        return self.ops.element(inners[0])

    def second_inner_inverse(self, x: Element, first: Element) -> Optional[Element]:
        fi = self._i(first)
        for i in self.ops.inners(self._i(x)):
            if i != fi:
                return self.ops.element(i)
        return None

    def all_inner_inverses(self, x: Element) -> list:
        return [self.ops.element(i) for i in self.ops.inners(self._i(x))]

    def eq1_check(self, y: Element, a: Element, b: Element, c: Element) -> bool:
        ops = self.ops
        yi, ai, bi, ci = self._i(y), self._i(a), self._i(b), self._i(c)
        if ops.mul3(yi, ai, bi) != bi or ops.mul3(ci, ai, yi) != ci:
            return False
        n = ops.n
        if not any(ops.mul3(bi, r, yi) == yi for r in range(n)):
            return False
        return any(ops.mul3(yi, r, ci) == yi for r in range(n))


class MatrixBackend:
    name = "matrix"

    def __init__(self, ring: Ring):
        if not isinstance(ring, MatrixRing) or not ring.is_field_matrix_ring:
            raise ValueError(
                f"the matrix backend needs a matrix ring over a field, not {ring.spec}"
            )
        self.ring = ring
        self.dom = ring.scalars
        self.k = ring.size
        self._col: dict = {}
        self._row: dict = {}
        self._null: dict = {}
        self._lnull: dict = {}
        self._inner: dict = {}
        self._second: dict = {}
        self._pred: dict = {}

    # cached canonical subspaces per payload
    def col(self, x: Element) -> SubspaceBasis:
        s = self._col.get(x.payload)
        if s is None:
            s = linalg.column_space(self.dom, x.payload)
            self._col[x.payload] = s
        return s

    def row(self, x: Element) -> SubspaceBasis:
        s = self._row.get(x.payload)
        if s is None:
            s = linalg.row_space(self.dom, x.payload)
            self._row[x.payload] = s
        return s

    def null(self, x: Element) -> SubspaceBasis:
        s = self._null.get(x.payload)
        if s is None:
            s = linalg.null_space(self.dom, x.payload)
            self._null[x.payload] = s
        return s

    def lnull(self, x: Element) -> SubspaceBasis:
        s = self._lnull.get(x.payload)
        if s is None:
            s = linalg.left_null_space(self.dom, x.payload)
            self._lnull[x.payload] = s
        return s

    def _cached(self, key, fn):
        v = self._pred.get(key)
        if v is None:
            v = fn()
            self._pred[key] = v
        return v

    # memberships reduce to subspace containment
    def in_right_ideal(self, x: Element, g: Element) -> bool:
        return self._cached(
            ("inr", x.payload, g.payload),
            lambda: linalg.subspace_subset(self.dom, self.col(x), self.col(g)),
        )

    def in_left_ideal(self, x: Element, g: Element) -> bool:
        return self._cached(
            ("inl", x.payload, g.payload),
            lambda: linalg.subspace_subset(self.dom, self.row(x), self.row(g)),
        )

    def right_ideal_eq(self, x: Element, y: Element) -> bool:
        return self.col(x).basis == self.col(y).basis

    def left_ideal_eq(self, x: Element, y: Element) -> bool:
        return self.row(x).basis == self.row(y).basis

    def right_ann_eq(self, x: Element, y: Element) -> bool:
        return self.null(x).basis == self.null(y).basis

    def left_ann_eq(self, x: Element, y: Element) -> bool:
        return self.lnull(x).basis == self.lnull(y).basis

    def right_ann_subset(self, x: Element, y: Element) -> bool:
        return self._cached(
            ("ranns", x.payload, y.payload),
            lambda: linalg.subspace_subset(self.dom, self.null(x), self.null(y)),
        )

    def left_ann_subset(self, x: Element, y: Element) -> bool:
        return self._cached(
            ("lanns", x.payload, y.payload),
            lambda: linalg.subspace_subset(self.dom, self.lnull(x), self.lnull(y)),
        )

    def decomp_right(self, x: Element, w: Element) -> bool:
        return self._cached(
            ("dsr", x.payload, w.payload),
            lambda: linalg.subspace_direct_sum(self.dom, self.col(x), self.null(w)),
        )

    def decomp_left(self, x: Element, w: Element) -> bool:
        return self._cached(
            ("dsl", x.payload, w.payload),
            lambda: linalg.subspace_direct_sum(self.dom, self.row(x), self.lnull(w)),
        )

    def rann_cap_rid_trivial(self, a: Element, b: Element) -> bool:
        return self._cached(
            ("capr", a.payload, b.payload),
            lambda: linalg.subspace_intersection_trivial(
                self.dom, self.null(a), self.col(b)
            ),
        )

    def lann_cap_lid_trivial(self, a: Element, c: Element) -> bool:
        return self._cached(
            ("capl", a.payload, c.payload),
            lambda: linalg.subspace_intersection_trivial(
                self.dom, self.lnull(a), self.row(c)
            ),
        )

    def is_regular(self, x: Element) -> bool:
        return True  # every matrix over a field is regular

    def inner_inverse(self, x: Element) -> Element:
        g = self._inner.get(x.payload)
        if g is None:
            g = linalg.inner_inverse(self.dom, x.payload)
            self._inner[x.payload] = g
        return Element(self.ring, g)

    def second_inner_inverse(self, x: Element, first: Element) -> Optional[Element]:
        key = (x.payload, first.payload)
        if key not in self._second:
            self._second[key] = linalg.second_inner_inverse(
                self.dom, x.payload, first.payload
            )
        g = self._second[key]
        return None if g is None else Element(self.ring, g)

    def eq1_check(self, y: Element, a: Element, b: Element, c: Element) -> bool:
        if y * a * b != b or c * a * y != c:
            return False
        # y in bRy reduces to the consistency condition b b⁻ y = y of the
        # linear equation b·r·y = y, and dually y in yRc to y c⁻ c = y
        gb = self.inner_inverse(b)
        if b * gb * y != y:
            return False
        gc = self.inner_inverse(c)
        return y * gc * c == y


_BACKEND_CACHE: dict = {}


def backend_for(ring: Ring, choice: str = "auto"):
    key = (ring, choice)
    be = _BACKEND_CACHE.get(key)
    if be is not None:
        return be
    if choice == "auto":
        if isinstance(ring, MatrixRing) and ring.is_field_matrix_ring:
            be = MatrixBackend(ring)
        else:
            be = FiniteBackend(ring)
    elif choice == "finite":
        be = FiniteBackend(ring)
    elif choice == "matrix":
        be = MatrixBackend(ring)
    else:
        raise ValueError(f"unknown backend {choice!r}")
    _BACKEND_CACHE[key] = be
    return be
