"""Certified generalized-inverse computations.

Every inverse is computed twice over, in a sense: existence comes from a
bundle of provably-equivalent criteria that must all agree, the value
comes from the inner-inverse formula b (cab)⁻ c, and the result is
checked against the defining identities (plus a second inner inverse
when one exists) before it is reported. Any disagreement is a bug in
this library and surfaces as CriteriaDisagreement, never as a report.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .backends import backend_for
from .errors import (
    CriteriaDisagreement,
    HypothesisFailed,
    IndexBoundExceeded,
    MixedRings,
    NoInvolution,
    NotOneSidedInvertible,
    NotRegular,
)
from .rings import Element, Involution


# stable criterion identifiers used in reports and the CLI
DRAZIN_IDEAL = "DrazinIdeal"
KCC_DECOMP = "KccDecomp"
ANNIHILATOR_DECOMP = "AnnihilatorDecomp"
FORMULA_CONDITIONS = "FormulaConditions"
FIVE_WAY = "FiveWay"
HYBRID_DEF = "HybridDef"
ANNIHILATOR_DEF = "AnnihilatorDef"
INNER_OUTER = "InnerOuter"

CRITERION_ORDER = (
    DRAZIN_IDEAL,
    KCC_DECOMP,
    ANNIHILATOR_DECOMP,
    FORMULA_CONDITIONS,
    FIVE_WAY,
)

# sentinel for left_right_coincide: exactly one one-sided inverse exists,
# which is a distinct signal rather than a failure
ONLY_ONE_SIDED = object()


@dataclass(frozen=True)
class InverseReport:
    exists: bool
    value: Optional[Element]
    inner_inverse_used: Optional[Element]
    criteria: dict
    definitional_check: bool
    index: Optional[int] = None
    invertible: Optional[bool] = None

    def to_json_dict(self) -> dict:
        out = {
            "exists": self.exists,
            "value": None if self.value is None else self.value.literal(),
            "index": self.index,
            "criteria": dict(self.criteria),
            "inner_inverse_used": (
                None
                if self.inner_inverse_used is None
                else self.inner_inverse_used.literal()
            ),
            "definitional_check": self.definitional_check,
        }
        if self.invertible is not None:
            out["invertible"] = self.invertible
        return out


def _same_ring(*elems: Element):
    ring = elems[0].ring
    for e in elems[1:]:
        if e.ring != ring:
            raise MixedRings(f"{e.ring.spec} vs {ring.spec}")
    return ring


def _require_star(ring):
    if ring.involution is Involution.NONE:
        raise NoInvolution(f"{ring.spec} has no involution")


def _criteria(be, a: Element, b: Element, c: Element) -> dict:
    """The five equivalent existence criteria; they must agree."""
    ab = a * b
    ca = c * a
    cab = c * ab

    drazin = be.in_left_ideal(b, cab) and be.in_right_ideal(c, cab)

    kcc2 = (
        be.is_regular(c)
        and be.rann_cap_rid_trivial(a, b)
        and be.decomp_right(ab, c)
    )
    kcc3 = (
        be.is_regular(b)
        and be.lann_cap_lid_trivial(a, c)
        and be.decomp_left(ca, b)
    )
    if kcc2 != kcc3:
        raise CriteriaDisagreement(
            f"the two sided decomposition criteria disagree on "
            f"({a.literal()}, {b.literal()}, {c.literal()})"
        )

    ann2 = be.is_regular(c) and be.right_ann_eq(ab, b) and be.decomp_right(ab, c)
    ann3 = be.is_regular(b) and be.left_ann_eq(ca, c) and be.decomp_left(ca, b)
    if ann2 != ann3:
        raise CriteriaDisagreement(
            f"the two sided annihilator criteria disagree on "
            f"({a.literal()}, {b.literal()}, {c.literal()})"
        )

    formula = (
        be.is_regular(cab) and be.right_ann_eq(b, cab) and be.right_ideal_eq(c, cab)
    )

    regb, regc = be.is_regular(b), be.is_regular(c)
    five2 = (
        regb and regc
        and be.left_ann_eq(c, cab)
        and be.decomp_left(c, ab)
        and be.left_ideal_eq(b, ab)
    )
    five3 = (
        regb and regc
        and be.right_ann_eq(b, cab)
        and be.decomp_right(b, ca)
        and be.right_ideal_eq(c, ca)
    )
    if be.is_regular(cab):
        g = be.inner_inverse(cab)
        x = b * g * c
        five4 = be.in_left_ideal(c, x) and be.decomp_left(c, ab) and be.left_ideal_eq(b, ab)
        five5 = (
            be.in_right_ideal(b, x)
            and be.decomp_right(b, ca)
            and be.right_ideal_eq(c, ca)
        )
    else:
        five4 = five5 = False
    if not (five2 == five3 == five4 == five5):
        raise CriteriaDisagreement(
            f"the four-way criteria disagree on "
            f"({a.literal()}, {b.literal()}, {c.literal()})"
        )

    crit = {
        DRAZIN_IDEAL: drazin,
        KCC_DECOMP: kcc2,
        ANNIHILATOR_DECOMP: ann2,
        FORMULA_CONDITIONS: formula,
        FIVE_WAY: five2,
    }
    if len(set(crit.values())) != 1:
        raise CriteriaDisagreement(
            f"existence criteria disagree on "
            f"({a.literal()}, {b.literal()}, {c.literal()}): {crit}"
        )
    return crit


def bc_inverse(a: Element, b: Element, c: Element, backend: str = "auto") -> InverseReport:
    """The (b,c)-inverse of a: existence verdict, certified value, criteria."""
    ring = _same_ring(a, b, c)
    be = backend_for(ring, backend)
    crit = _criteria(be, a, b, c)
    exists = crit[DRAZIN_IDEAL]
    if not exists:
        return InverseReport(False, None, None, crit, False)
    cab = c * a * b
    g = be.inner_inverse(cab)
    y = b * g * c
    ok = (
        y * a * b == b
        and c * a * y == c
        and y * a * y == y
        and be.right_ideal_eq(y, b)
        and be.left_ideal_eq(y, c)
    )
    if not ok:
        raise CriteriaDisagreement(
            f"formula value {y.literal()} fails the defining identities for "
            f"({a.literal()}, {b.literal()}, {c.literal()})"
        )
    g2 = be.second_inner_inverse(cab, g)
    if g2 is not None and b * g2 * c != y:
        raise CriteriaDisagreement(
            f"the value depends on the inner inverse choice for "
            f"({a.literal()}, {b.literal()}, {c.literal()})"
        )
    return InverseReport(True, y, g, crit, True)


def bc_exists_drazin(a: Element, b: Element, c: Element, backend: str = "auto") -> bool:
    """b in Rcab and c in cabR."""
    ring = _same_ring(a, b, c)
    be = backend_for(ring, backend)
    cab = c * a * b
    return be.in_left_ideal(b, cab) and be.in_right_ideal(c, cab)


def bc_exists_kcc(a: Element, b: Element, c: Element, backend: str = "auto") -> bool:
    """c regular, a° ∩ bR = {0} and R = abR (+) c° (checked on both sides)."""
    ring = _same_ring(a, b, c)
    be = backend_for(ring, backend)
    item2 = (
        be.is_regular(c)
        and be.rann_cap_rid_trivial(a, b)
        and be.decomp_right(a * b, c)
    )
    item3 = (
        be.is_regular(b)
        and be.lann_cap_lid_trivial(a, c)
        and be.decomp_left(c * a, b)
    )
    if item2 != item3:
        raise CriteriaDisagreement("sided decomposition criteria disagree")
    return item2


def bc_exists_annihilator(a: Element, b: Element, c: Element, backend: str = "auto") -> bool:
    """c regular, (ab)° = b° and R = abR (+) c° (checked on both sides)."""
    ring = _same_ring(a, b, c)
    be = backend_for(ring, backend)
    ab = a * b
    ca = c * a
    item2 = be.is_regular(c) and be.right_ann_eq(ab, b) and be.decomp_right(ab, c)
    item3 = be.is_regular(b) and be.left_ann_eq(ca, c) and be.decomp_left(ca, b)
    if item2 != item3:
        raise CriteriaDisagreement("sided annihilator criteria disagree")
    return item2


def bc_exists_fiveway(a: Element, b: Element, c: Element, backend: str = "auto") -> bool:
    """R = Rc (+) °(ab) and Rb = Rab, in all four equivalent phrasings."""
    ring = _same_ring(a, b, c)
    be = backend_for(ring, backend)
    crit = _criteria(be, a, b, c)
    return crit[FIVE_WAY]


def is_bc_inverse(y: Element, a: Element, b: Element, c: Element,
                  backend: str = "auto") -> bool:
    """yay = y, yR = bR and Ry = Rc."""
    ring = _same_ring(y, a, b, c)
    be = backend_for(ring, backend)
    return y * a * y == y and be.right_ideal_eq(y, b) and be.left_ideal_eq(y, c)


def is_hybrid_bc(y: Element, a: Element, b: Element, c: Element,
                 backend: str = "auto") -> bool:
    """yay = y, yR = bR and y° = c°."""
    ring = _same_ring(y, a, b, c)
    be = backend_for(ring, backend)
    return y * a * y == y and be.right_ideal_eq(y, b) and be.right_ann_eq(y, c)


def is_annihilator_bc(y: Element, a: Element, b: Element, c: Element,
                      backend: str = "auto") -> bool:
    """yay = y, °y = °b and y° = c°."""
    ring = _same_ring(y, a, b, c)
    be = backend_for(ring, backend)
    return y * a * y == y and be.left_ann_eq(y, b) and be.right_ann_eq(y, c)


def is_left_bc_invertible(a: Element, b: Element, c: Element,
                          backend: str = "auto") -> bool:
    """Some x satisfies Rx ⊆ Rc and xab = b; equivalently b in Rcab."""
    ring = _same_ring(a, b, c)
    be = backend_for(ring, backend)
    return be.in_left_ideal(b, c * a * b)


def is_right_bc_invertible(a: Element, b: Element, c: Element,
                           backend: str = "auto") -> bool:
    """Some y satisfies yR ⊆ bR and cay = c; equivalently c in cabR."""
    ring = _same_ring(a, b, c)
    be = backend_for(ring, backend)
    return be.in_right_ideal(c, c * a * b)


def _one_sided_base(a, b, c, be):
    """(x0, g, one_minus_right, one_minus_left) for the one-sided families."""
    cab = c * a * b
    if not be.is_regular(cab):
        raise NotRegular(
            f"cab = {cab.literal()} has no inner inverse; the one-sided family "
            f"formula does not apply"
        )
    g = be.inner_inverse(cab)
    x0 = b * g * c
    one = a.ring.one
    return x0, g, one - cab * g, one - g * cab


def left_bc_family(a: Element, b: Element, c: Element, v: Element,
                   backend: str = "auto") -> Element:
    """b(cab)⁻c + v[1 - cab(cab)⁻]c: a left (b,c)-inverse for every v."""
    ring = _same_ring(a, b, c, v)
    be = backend_for(ring, backend)
    x0, _, one_minus, _ = _one_sided_base(a, b, c, be)
    if x0 * a * b != b:
        raise NotOneSidedInvertible(
            f"a = {a.literal()} is not left ({b.literal()},{c.literal()})-invertible"
        )
    y = x0 + v * one_minus * c
    if y * a * b != b or not be.in_left_ideal(y, c):
        raise CriteriaDisagreement("left family member fails the one-sided definition")
    return y


def right_bc_family(a: Element, b: Element, c: Element, u: Element,
                    backend: str = "auto") -> Element:
    """b(cab)⁻c + b[1 - (cab)⁻cab]u: a right (b,c)-inverse for every u."""
    ring = _same_ring(a, b, c, u)
    be = backend_for(ring, backend)
    x0, _, _, one_minus = _one_sided_base(a, b, c, be)
    if c * a * x0 != c:
        raise NotOneSidedInvertible(
            f"a = {a.literal()} is not right ({b.literal()},{c.literal()})-invertible"
        )
    y = x0 + b * one_minus * u
    if c * a * y != c or not be.in_right_ideal(y, b):
        raise CriteriaDisagreement("right family member fails the one-sided definition")
    return y


def left_right_coincide(a: Element, b: Element, c: Element, backend: str = "auto"):
    """The common one-sided inverse when both exist; None when neither does.

    Returns the module sentinel ONLY_ONE_SIDED when exactly one side exists.
    """
    ring = _same_ring(a, b, c)
    left = is_left_bc_invertible(a, b, c, backend)
    right = is_right_bc_invertible(a, b, c, backend)
    if not left and not right:
        return None
    if left != right:
        return ONLY_ONE_SIDED
    rep = bc_inverse(a, b, c, backend)
    if not rep.exists:
        raise CriteriaDisagreement(
            "both one-sided inverses exist but the two-sided inverse does not"
        )
    y = rep.value
    be = backend_for(ring, backend)
    if y * a * b != b or c * a * y != c or not be.in_left_ideal(y, c) \
            or not be.in_right_ideal(y, b):
        raise CriteriaDisagreement("coinciding value fails a one-sided definition")
    return y


def star_duality_check(y: Element, a: Element, b: Element, c: Element,
                       backend: str = "auto") -> bool:
    """y is a left (b,c)-inverse of a iff y* is a right (c*,b*)-inverse of a*."""
    ring = _same_ring(y, a, b, c)
    _require_star(ring)
    be = backend_for(ring, backend)
    left = be.in_left_ideal(y, c) and y * a * b == b
    ys, as_, bs, cs = y.star(), a.star(), b.star(), c.star()
    right = be.in_right_ideal(ys, cs) and bs * as_ * ys == bs
    return left == right


def generator_invariance(a: Element, b: Element, c: Element, u: Element, v: Element,
                         backend: str = "auto") -> bool:
    """With bR = uR and Rc = Rv, the (b,c)- and (u,v)-inverses coincide."""
    ring = _same_ring(a, b, c, u, v)
    be = backend_for(ring, backend)
    if not be.right_ideal_eq(b, u):
        raise HypothesisFailed(f"bR = uR fails for b={b.literal()}, u={u.literal()}")
    if not be.left_ideal_eq(c, v):
        raise HypothesisFailed(f"Rc = Rv fails for c={c.literal()}, v={v.literal()}")
    r1 = bc_inverse(a, b, c, backend)
    r2 = bc_inverse(a, u, v, backend)
    if r1.exists != r2.exists:
        return False
    return not r1.exists or r1.value == r2.value


def inverse_along(a: Element, d: Element, backend: str = "auto") -> InverseReport:
    """The inverse of a along d, i.e. the (d,d)-inverse, cross-checked."""
    ring = _same_ring(a, d)
    be = backend_for(ring, backend)
    rep = bc_inverse(a, d, d, backend)
    dad = d * a * d
    ideal_crit = be.right_ideal_eq(d, dad) and be.left_ideal_eq(d, dad)
    if ideal_crit != rep.exists:
        raise CriteriaDisagreement(
            f"dR = dadR and Rd = Rdad disagrees with the (d,d)-criteria for "
            f"a={a.literal()}, d={d.literal()}"
        )
    ad = a * d
    da = d * a
    gad = group_inverse(ad, backend)
    gda = group_inverse(da, backend)
    group_crit2 = be.in_right_ideal(d, da) and gda.exists  # dR ⊆ daR and (da)# exists
    group_crit3 = be.in_left_ideal(d, ad) and gad.exists  # Rd ⊆ Rad and (ad)# exists
    if group_crit2 != rep.exists or group_crit3 != rep.exists:
        raise CriteriaDisagreement(
            f"the group-invertibility criteria disagree for a={a.literal()}, "
            f"d={d.literal()}"
        )
    if rep.exists:
        via_ad = d * gad.value
        via_da = gda.value * d
        if via_ad != rep.value or via_da != rep.value:
            raise CriteriaDisagreement(
                f"d(ad)# and (da)#d disagree with the (d,d)-inverse for "
                f"a={a.literal()}, d={d.literal()}"
            )
    return rep


def group_inverse(a: Element, backend: str = "auto") -> InverseReport:
    """The group inverse, i.e. the (a,a)-inverse, with the commuting identities."""
    be = backend_for(a.ring, backend)
    rep = bc_inverse(a, a, a, backend)
    a2 = a * a
    solvable = be.in_right_ideal(a, a2) and be.in_left_ideal(a, a2)
    if solvable != rep.exists:
        raise CriteriaDisagreement(
            f"solvability of a²x = a and ya² = a disagrees with the (a,a)-criteria "
            f"for a={a.literal()}"
        )
    if rep.exists:
        x = rep.value
        if a * x * a != a or x * a * x != x or a * x != x * a:
            raise CriteriaDisagreement(
                f"group inverse candidate fails its identities for a={a.literal()}"
            )
        if not (be.right_ideal_eq(x, a) and be.left_ideal_eq(x, a)):
            raise CriteriaDisagreement(
                f"group inverse candidate fails xR = aR, Rx = Ra for a={a.literal()}"
            )
    return rep


def moore_penrose(a: Element, backend: str = "auto") -> InverseReport:
    """The Moore-Penrose inverse, i.e. the (a*,a*)-inverse."""
    _require_star(a.ring)
    be = backend_for(a.ring, backend)
    s = a.star()
    rep = bc_inverse(a, s, s, backend)
    if rep.exists:
        x = rep.value
        ax = a * x
        xa = x * a
        penrose = (
            a * x * a == a
            and x * a * x == x
            and ax.star() == ax
            and xa.star() == xa
        )
        if not penrose:
            raise CriteriaDisagreement(
                f"Moore-Penrose candidate fails a Penrose equation for a={a.literal()}"
            )
        if not (be.right_ideal_eq(x, s) and be.left_ideal_eq(x, s)):
            raise CriteriaDisagreement(
                f"Moore-Penrose candidate fails xR = a*R, Rx = Ra* for a={a.literal()}"
            )
    return rep


def one_three_inverse(a: Element, backend: str = "auto") -> Optional[Element]:
    """A {1,3}-inverse: axa = a with (ax)* = ax; existence iff R = Ra* (+) °a."""
    _require_star(a.ring)
    be = backend_for(a.ring, backend)
    criterion = be.decomp_left(a.star(), a)
    witness = _one_three_witness(a, be)
    if (witness is not None) != criterion:
        raise CriteriaDisagreement(
            f"{{1,3}} existence criterion disagrees with the witness search for "
            f"a={a.literal()}"
        )
    return witness


def one_four_inverse(a: Element, backend: str = "auto") -> Optional[Element]:
    """A {1,4}-inverse: axa = a with (xa)* = xa; existence iff R = a*R (+) a°."""
    _require_star(a.ring)
    be = backend_for(a.ring, backend)
    criterion = be.decomp_right(a.star(), a)
    witness = _one_four_witness(a, be)
    if (witness is not None) != criterion:
        raise CriteriaDisagreement(
            f"{{1,4}} existence criterion disagrees with the witness search for "
            f"a={a.literal()}"
        )
    return witness


def _one_three_witness(a: Element, be) -> Optional[Element]:
    ring = a.ring
    if be.name == "matrix":
        # x in a{1,3} iff x* a* a = a: solve w (a*a) = a and take x = w*
        from .linalg import solve_left

        s = a.star()
        w = solve_left(ring.scalars, (s * a).payload, a.payload)
        if w is None:
            return None
        x = Element(ring, w).star()
    else:
        x = None
        for cand in ring.elements():
            if a * cand * a == a and (a * cand).star() == a * cand:
                x = cand
                break
        if x is None:
            return None
    if a * x * a != a or (a * x).star() != a * x:
        raise CriteriaDisagreement(f"{{1,3}} witness fails its identities for a={a.literal()}")
    return x


def _one_four_witness(a: Element, be) -> Optional[Element]:
    ring = a.ring
    if be.name == "matrix":
        # y in a{1,4} iff a a* y* = a: solve (a a*) z = a and take y = z*
        from .linalg import solve_right

        s = a.star()
        z = solve_right(ring.scalars, (a * s).payload, a.payload)
        if z is None:
            return None
        y = Element(ring, z).star()
    else:
        y = None
        for cand in a.ring.elements():
            if a * cand * a == a and (cand * a).star() == cand * a:
                y = cand
                break
        if y is None:
            return None
    if a * y * a != a or (y * a).star() != y * a:
        raise CriteriaDisagreement(f"{{1,4}} witness fails its identities for a={a.literal()}")
    return y


def core_inverse(a: Element, backend: str = "auto") -> InverseReport:
    """The core inverse, i.e. the (a,a*)-inverse; exists iff a in R# ∩ R{1,3}."""
    _require_star(a.ring)
    be = backend_for(a.ring, backend)
    rep = bc_inverse(a, a, a.star(), backend)
    group_ok = bc_inverse(a, a, a, backend).exists
    one_three_ok = one_three_inverse(a, backend) is not None
    if rep.exists != (group_ok and one_three_ok):
        raise CriteriaDisagreement(
            f"core existence disagrees with a in R# ∩ R{{1,3}} for a={a.literal()}"
        )
    a2 = a * a
    sa = a.star() * a
    item2 = (
        be.right_ideal_eq(a, a2)
        and be.left_ideal_eq(sa, a)
        and be.right_ann_eq(a2, a)
    )
    item3 = be.decomp_right(a, a) and be.decomp_left(a.star(), a)
    if item2 != rep.exists or item3 != rep.exists:
        raise CriteriaDisagreement(
            f"core criteria items disagree for a={a.literal()}"
        )
    return rep


def dual_core_inverse(a: Element, backend: str = "auto") -> InverseReport:
    """The dual core inverse, i.e. the (a*,a)-inverse; exists iff a in R# ∩ R{1,4}."""
    _require_star(a.ring)
    rep = bc_inverse(a, a.star(), a, backend)
    group_ok = bc_inverse(a, a, a, backend).exists
    one_four_ok = one_four_inverse(a, backend) is not None
    if rep.exists != (group_ok and one_four_ok):
        raise CriteriaDisagreement(
            f"dual core existence disagrees with a in R# ∩ R{{1,4}} for a={a.literal()}"
        )
    return rep


def drazin_inverse(a: Element, backend: str = "auto") -> InverseReport:
    """The Drazin inverse: the (a^k,a^k)-inverse at the minimal index k."""
    ring = a.ring
    be = backend_for(ring, backend)
    if be.name == "matrix":
        bound = ring.size  # index of a k x k matrix is at most k
    else:
        bound = ring.order
    power = a
    for k in range(1, bound + 1):
        rep = bc_inverse(a, power, power, backend)
        if rep.exists:
            x = rep.value
            ak = power
            if ak * x * a != ak or x * a * x != x or a * x != x * a:
                raise CriteriaDisagreement(
                    f"Drazin candidate fails its identities for a={a.literal()}, k={k}"
                )
            return replace(rep, index=k, invertible=a.inverse() is not None)
        power = power * a
    raise IndexBoundExceeded(
        f"no (a^k,a^k)-inverse up to k={bound} for a={a.literal()} (bug trap)"
    )


def inner_outer_bc(a: Element, b: Element, c: Element, backend: str = "auto") -> InverseReport:
    """Existence of a (b,c)-inverse that is also an inner inverse of a."""
    ring = _same_ring(a, b, c)
    be = backend_for(ring, backend)
    rep = bc_inverse(a, b, c, backend)
    direct = rep.exists and a * rep.value * a == a
    ab = a * b
    ca = c * a
    item2 = (
        be.is_regular(a)
        and be.right_ideal_eq(a, ab)
        and be.left_ideal_eq(ca, a)
        and be.right_ann_eq(ab, b)
        and be.left_ann_eq(ca, c)
    )
    item3 = be.is_regular(a) and be.decomp_right(b, a) and be.decomp_left(c, a)
    if item2 != direct or item3 != direct:
        raise CriteriaDisagreement(
            f"inner+outer criteria disagree on "
            f"({a.literal()}, {b.literal()}, {c.literal()})"
        )
    criteria = dict(rep.criteria)
    criteria[INNER_OUTER] = direct
    if not direct:
        return InverseReport(False, None, None, criteria, False)
    return InverseReport(True, rep.value, rep.inner_inverse_used, criteria, True)


def group_via_along(a: Element, d: Element, b: Optional[Element] = None,
                    c: Optional[Element] = None, backend: str = "auto") -> Element:
    """d(ad)#, asserted equal to (da)#d and to the (b,c)-inverse of a.

    Defaults b = c = d, the inverse-along-d case; with explicit b, c the
    hypotheses dR = bR and d° = c° are required.
    """
    b = d if b is None else b
    c = d if c is None else c
    ring = _same_ring(a, d, b, c)
    be = backend_for(ring, backend)
    if not be.right_ideal_eq(d, b):
        raise HypothesisFailed(f"dR = bR fails for d={d.literal()}, b={b.literal()}")
    if not be.right_ann_eq(d, c):
        raise HypothesisFailed(f"d° = c° fails for d={d.literal()}, c={c.literal()}")
    rep = bc_inverse(a, b, c, backend)
    if not rep.exists:
        raise HypothesisFailed(
            f"a = {a.literal()} is not ({b.literal()},{c.literal()})-invertible"
        )
    gad = group_inverse(a * d, backend)
    gda = group_inverse(d * a, backend)
    if not gad.exists or not gda.exists:
        raise CriteriaDisagreement(
            f"ad or da fails to be group invertible for a={a.literal()}, d={d.literal()}"
        )
    via_ad = d * gad.value
    via_da = gda.value * d
    if via_ad != via_da or via_ad != rep.value:
        raise CriteriaDisagreement(
            f"d(ad)# = (da)#d = the (b,c)-inverse fails for a={a.literal()}, "
            f"d={d.literal()}"
        )
    return via_ad
