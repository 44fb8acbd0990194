"""Per-theorem verification sweeps.

Each suite encodes one result as a runnable check. Over a finite ring the
quantified variables are swept exhaustively in canonical order (guarded
by a tuple-count limit, with an optional sampled mode); over an infinite
matrix ring the suite draws seeded random samples and resolves
existentials constructively through the matrix backend.

A suite records the first counterexample it meets and stops; canonical
order already yields small witnesses in these rings, so no shrinking
pass is needed. Reports are deterministic given (ring, suite, seed),
apart from the elapsed-time field.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import engine, linalg
from .backends import MatrixBackend, backend_for
from .errors import (
    CardinalityGuard,
    NoInvolution,
    UnknownSuite,
)
from .finite import FiniteOps, finite_ops
from .rings import Element, Involution, MatrixRing, PrimeField, Ring

DEFAULT_SEED = 187
DEFAULT_SAMPLES = 500
DEFAULT_TUPLE_GUARD = 2_000_000
CROSSCHECK_TRIPLE_GUARD = 100_000


@dataclass
class SuiteReport:
    suite: str
    ring_spec: str
    mode: str  # "exhaustive" or "sampled"
    seed: Optional[int]
    samples: Optional[int]
    tuples_checked: int
    counterexamples: list
    verdict: str  # "pass" or "fail"
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ring": self.ring_spec,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
            "tuples_checked": self.tuples_checked,
            "counterexamples": self.counterexamples,
            "verdict": self.verdict,
            "elapsed": self.elapsed,
        }

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _ce(ops: FiniteOps, names, tpl, expected, got) -> dict:
    return {
        "inputs": {n: ops.literal(i) for n, i in zip(names, tpl)},
        "expected": expected,
        "got": got,
    }


def _ce_elems(names, elems, expected, got) -> dict:
    return {
        "inputs": {n: e.literal() for n, e in zip(names, elems)},
        "expected": expected,
        "got": got,
    }


# ---------------------------------------------------------------------------
# exhaustive checkers: one (ops, tuple) -> counterexample-or-None per suite


def _exists_sol(ops: FiniteOps, a, b, c):
    sols = ops.eq1_solutions(a, b, c)
    return (len(sols) > 0), (sols[0] if sols else None)


def _f_eq1_uniqueness(ops, tpl):
    a, b, c = tpl
    sols = ops.eq1_solutions(a, b, c)
    if len(sols) > 1:
        return _ce(ops, "abc", tpl, "at most one solution",
                   f"solutions {[ops.literal(s) for s in sols]}")
    return None


def _f_annihilator(ops, tpl):
    a, b = tpl
    rsub = ops.rid(a) <= ops.rid(b)
    lann_sub = ops.lann(b) <= ops.lann(a)
    if rsub and not lann_sub:
        return _ce(ops, "ab", tpl, "aR ⊆ bR implies °b ⊆ °a", "implication fails")
    lsub = ops.lid(a) <= ops.lid(b)
    rann_sub = ops.rann(b) <= ops.rann(a)
    if lsub and not rann_sub:
        return _ce(ops, "ab", tpl, "Ra ⊆ Rb implies b° ⊆ a°", "implication fails")
    if ops.regular(b):
        if lann_sub != rsub:
            return _ce(ops, "ab", tpl, "°b ⊆ °a iff aR ⊆ bR (b regular)",
                       f"{lann_sub} vs {rsub}")
        if rann_sub != lsub:
            return _ce(ops, "ab", tpl, "b° ⊆ a° iff Ra ⊆ Rb (b regular)",
                       f"{rann_sub} vs {lsub}")
    return None


def _f_pirdcca(ops, tpl):
    a, y = tpl
    if ops.mul3(y, a, y) != y:
        return None
    ya = ops.mul(y, a)
    ay = ops.mul(a, y)
    checks = (
        (ops.rid(ya) == ops.rid(y), "yaR = yR"),
        (ops.lid(ay) == ops.lid(y), "Ray = Ry"),
        (len(ops.rann(a) & ops.rid(y)) == 1, "a° ∩ yR = {0}"),
        (len(ops.rann(a) & ops.rid(ya)) == 1, "a° ∩ yaR = {0}"),
        (len(ops.lann(a) & ops.lid(y)) == 1, "°a ∩ Ry = {0}"),
        (len(ops.lann(a) & ops.lid(ay)) == 1, "°a ∩ Ray = {0}"),
    )
    for ok, what in checks:
        if not ok:
            return _ce(ops, "ay", tpl, what, "fails")
    return None


def _f_abcire(ops, tpl):
    a, b, c, y = tpl
    sols = ops.eq1_solutions(a, b, c)
    by_def = y in sols
    by_char = (
        ops.mul3(y, a, y) == y
        and ops.rid(y) == ops.rid(b)
        and ops.lid(y) == ops.lid(c)
    )
    if by_def != by_char:
        return _ce(ops, "abcy", tpl, "defining equation iff yay=y, yR=bR, Ry=Rc",
                   f"{by_def} vs {by_char}")
    return None


def _f_abcirg(ops, tpl):
    a, b, c = tpl
    exists, _ = _exists_sol(ops, a, b, c)
    cab = ops.mul3(c, a, b)
    crit = b in ops.lid(cab) and c in ops.rid(cab)
    if exists != crit:
        return _ce(ops, "abc", tpl, "existence iff b ∈ Rcab and c ∈ cabR",
                   f"{exists} vs {crit}")
    return None


def _f_abcirf(ops, tpl):
    a, b, c = tpl
    exists, _ = _exists_sol(ops, a, b, c)
    if not exists:
        return None
    cab = ops.mul3(c, a, b)
    if not (ops.regular(cab) and ops.regular(b) and ops.regular(c)):
        return _ce(ops, "abc", tpl, "existence implies cab, b, c regular", "fails")
    return None


def _f_abcirl(ops, tpl):
    a, b, c = tpl
    exists, _ = _exists_sol(ops, a, b, c)
    ab = ops.mul(a, b)
    ca = ops.mul(c, a)
    item2 = (
        ops.regular(c)
        and ops.rann_cap_rid_trivial(a, b)
        and ops.ds_right(ab, c)
    )
    item3 = (
        ops.regular(b)
        and ops.lann_cap_lid_trivial(a, c)
        and ops.ds_left(ca, b)
    )
    if not (exists == item2 == item3):
        return _ce(ops, "abc", tpl, "existence iff both decomposition items",
                   f"{exists}, {item2}, {item3}")
    return None


def _f_abcirn(ops, tpl):
    a, b, c, y = tpl
    exists, sol = _exists_sol(ops, a, b, c)
    is_bc = exists and y == sol
    yay = ops.mul3(y, a, y) == y
    hybrid = yay and ops.rid(y) == ops.rid(b) and ops.rann(y) == ops.rann(c)
    annih = yay and ops.lann(y) == ops.lann(b) and ops.rann(y) == ops.rann(c)
    item2 = ops.regular(c) and hybrid
    item3 = ops.regular(b) and ops.regular(c) and annih
    if not (is_bc == item2 == item3):
        return _ce(ops, "abcy", tpl,
                   "y is the (b,c)-inverse iff hybrid (c regular) iff annihilator "
                   "(b, c regular)", f"{is_bc}, {item2}, {item3}")
    # uniqueness of the hybrid/annihilator inverses (checked when y is one)
    if hybrid or annih:
        others = [
            z for z in range(ops.n)
            if z != y and ops.mul3(z, a, z) == z
            and ((hybrid and ops.rid(z) == ops.rid(b) and ops.rann(z) == ops.rann(c))
                 or (annih and ops.lann(z) == ops.lann(b) and ops.rann(z) == ops.rann(c)))
        ]
        if others:
            return _ce(ops, "abcy", tpl, "hybrid/annihilator inverse unique",
                       f"also {[ops.literal(z) for z in others]}")
    return None


def _f_anihilata(ops, tpl):
    a, b, c = tpl
    exists, _ = _exists_sol(ops, a, b, c)
    ab = ops.mul(a, b)
    ca = ops.mul(c, a)
    item2 = (
        ops.regular(c)
        and ops.rann(ab) == ops.rann(b)
        and ops.ds_right(ab, c)
    )
    item3 = (
        ops.regular(b)
        and ops.lann(ca) == ops.lann(c)
        and ops.ds_left(ca, b)
    )
    if not (exists == item2 == item3):
        return _ce(ops, "abc", tpl, "existence iff both annihilator items",
                   f"{exists}, {item2}, {item3}")
    return None


def _f_ats2innera(ops, tpl):
    a, b, c = tpl
    cab = ops.mul3(c, a, b)
    if not ops.regular(cab):
        return None
    item3 = ops.lid(b) == ops.lid(cab)
    item4 = ops.regular(b) and ops.rann(b) == ops.rann(cab)
    for g in ops.inners(cab):
        x = ops.mul3(b, g, c)
        xax = ops.mul3(x, a, x) == x
        item1 = xax and ops.rid(b) == ops.rid(x)
        item2 = xax and b in ops.rid(x)
        if not (item1 == item2 == item3 == item4):
            return _ce(ops, "abc", tpl,
                       "x = b(cab)⁻c: xax=x,bR=xR iff bR⊆xR iff Rb=Rcab iff b°=(cab)°",
                       f"{item1}, {item2}, {item3}, {item4} at g={ops.literal(g)}")
    return None


def _f_ats2innerabdd(ops, tpl):
    a, b, c = tpl
    cab = ops.mul3(c, a, b)
    if not ops.regular(cab):
        return None
    item3 = ops.rid(c) == ops.rid(cab)
    item4 = ops.regular(c) and ops.lann(c) == ops.lann(cab)
    for g in ops.inners(cab):
        x = ops.mul3(b, g, c)
        xax = ops.mul3(x, a, x) == x
        item1 = xax and ops.lid(x) == ops.lid(c)
        item2 = xax and c in ops.lid(x)
        if not (item1 == item2 == item3 == item4):
            return _ce(ops, "abc", tpl,
                       "x = b(cab)⁻c: xax=x,Rx=Rc iff Rc⊆Rx iff cR=cabR iff °c=°(cab)",
                       f"{item1}, {item2}, {item3}, {item4} at g={ops.literal(g)}")
    return None


def _f_ats2iannnera(ops, tpl):
    a, b, c = tpl
    cab = ops.mul3(c, a, b)
    if not ops.regular(cab):
        return None
    item3 = ops.rid(c) == ops.rid(cab)
    for g in ops.inners(cab):
        x = ops.mul3(b, g, c)
        xax = ops.mul3(x, a, x) == x
        item1 = xax and ops.rann(x) == ops.rann(c)
        item2 = xax and ops.rann(x) <= ops.rann(c)
        if not (item1 == item2 == item3):
            return _ce(ops, "abc", tpl,
                       "x = b(cab)⁻c: xax=x,x°=c° iff x°⊆c° iff cR=cabR",
                       f"{item1}, {item2}, {item3} at g={ops.literal(g)}")
    return None


def _f_informuast2a(ops, tpl):
    a, b, c = tpl
    cab = ops.mul3(c, a, b)
    if not ops.regular(cab):
        return None
    exists, sol = _exists_sol(ops, a, b, c)
    item3 = ops.rann(b) == ops.rann(cab) and ops.rid(c) == ops.rid(cab)
    for g in ops.inners(cab):
        x = ops.mul3(b, g, c)
        item1 = exists and x == sol
        item2 = (
            ops.mul3(x, a, x) == x
            and b in ops.rid(x)
            and ops.rann(x) <= ops.rann(c)
        )
        if not (item1 == item2 == item3):
            return _ce(ops, "abc", tpl,
                       "x = b(cab)⁻c is the inverse iff items (2) and (3)",
                       f"{item1}, {item2}, {item3} at g={ops.literal(g)}")
    return None


def _f_informuast2aal(ops, tpl):
    a, d = tpl
    dad = ops.mul3(d, a, d)
    if not ops.regular(dad):
        return None
    exists, sol = _exists_sol(ops, a, d, d)
    item3 = ops.rann(d) == ops.rann(dad) and ops.rid(d) == ops.rid(dad)
    for g in ops.inners(dad):
        x = ops.mul3(d, g, d)
        item1 = exists and x == sol
        item2 = (
            ops.mul3(x, a, x) == x
            and d in ops.rid(x)
            and ops.rann(x) <= ops.rann(d)
        )
        if not (item1 == item2 == item3):
            return _ce(ops, "ad", tpl,
                       "x = d(dad)⁻d is the inverse along d iff items (2) and (3)",
                       f"{item1}, {item2}, {item3} at g={ops.literal(g)}")
    return None


def _f_star_duality(ops, tpl):
    y, a, b, c = tpl
    left = y in ops.lid(c) and ops.mul3(y, a, b) == b
    ys, as_, bs, cs = ops.star(y), ops.star(a), ops.star(b), ops.star(c)
    right = ys in ops.rid(cs) and ops.mul3(bs, as_, ys) == bs
    if left != right:
        return _ce(ops, "yabc", tpl,
                   "y left (b,c)-inverse of a iff y* right (c*,b*)-inverse of a*",
                   f"{left} vs {right}")
    return None


def _f_general_solutions(ops, tpl):
    a, b, c = tpl
    cab = ops.mul3(c, a, b)
    if not ops.regular(cab):
        return None
    n = ops.n
    if b in ops.lid(cab):  # left (b,c)-invertible
        def_left = frozenset(
            x for x in range(n) if ops.mul3(x, a, b) == b and x in ops.lid(c)
        )
        for g in ops.inners(cab):
            x0 = ops.mul3(b, g, c)
            om = ops.sub(ops.one, ops.mul(cab, g))
            family = frozenset(ops.add(x0, ops.mul3(v, om, c)) for v in range(n))
            if family != def_left:
                return _ce(ops, "abc", tpl,
                           "left family equals the definitional left inverses",
                           f"family size {len(family)} vs {len(def_left)} "
                           f"at g={ops.literal(g)}")
    if c in ops.rid(cab):  # right (b,c)-invertible
        def_right = frozenset(
            y for y in range(n) if ops.mul3(c, a, y) == c and y in ops.rid(b)
        )
        for g in ops.inners(cab):
            x0 = ops.mul3(b, g, c)
            om = ops.sub(ops.one, ops.mul(g, cab))
            family = frozenset(ops.add(x0, ops.mul3(b, om, u)) for u in range(n))
            if family != def_right:
                return _ce(ops, "abc", tpl,
                           "right family equals the definitional right inverses",
                           f"family size {len(family)} vs {len(def_right)} "
                           f"at g={ops.literal(g)}")
    return None


def _f_coincide(ops, tpl):
    a, b, c = tpl
    n = ops.n
    lefts = [x for x in range(n) if ops.mul3(x, a, b) == b and x in ops.lid(c)]
    rights = [y for y in range(n) if ops.mul3(c, a, y) == c and y in ops.rid(b)]
    if not lefts or not rights:
        return None
    if len(lefts) != 1 or len(rights) != 1 or lefts[0] != rights[0]:
        return _ce(ops, "abc", tpl,
                   "both one-sided inverses unique and equal",
                   f"lefts {[ops.literal(x) for x in lefts]}, "
                   f"rights {[ops.literal(y) for y in rights]}")
    exists, sol = _exists_sol(ops, a, b, c)
    if not exists or sol != lefts[0]:
        return _ce(ops, "abc", tpl, "common one-sided inverse is the (b,c)-inverse",
                   "mismatch with the defining equation")
    return None


def _f_fiveway(ops, tpl):
    a, b, c = tpl
    exists, _ = _exists_sol(ops, a, b, c)
    ab = ops.mul(a, b)
    ca = ops.mul(c, a)
    cab = ops.mul(c, ab)
    regb, regc = ops.regular(b), ops.regular(c)
    left_part = ops.ds_left(c, ab) and ops.lid(b) == ops.lid(ab)
    right_part = ops.ds_right(b, ca) and ops.rid(c) == ops.rid(ca)
    item2 = regb and regc and ops.lann(c) == ops.lann(cab) and left_part
    item3 = regb and regc and ops.rann(b) == ops.rann(cab) and right_part
    if not (exists == item2 == item3):
        return _ce(ops, "abc", tpl, "five-way items (1)-(3) agree",
                   f"{exists}, {item2}, {item3}")
    if ops.regular(cab):
        for g in ops.inners(cab):
            x = ops.mul3(b, g, c)
            item4 = (c in ops.lid(x)) and left_part
            item5 = (b in ops.rid(x)) and right_part
            if item4 != exists or item5 != exists:
                return _ce(ops, "abc", tpl, "five-way items (4)-(5) agree",
                           f"{item4}, {item5} at g={ops.literal(g)}")
    elif exists:
        return _ce(ops, "abc", tpl, "existence implies cab regular", "fails")
    return None


def _f_bcuva(ops, tpl):
    a, b, c, u, v = tpl
    if ops.rid(u) != ops.rid(b) or ops.lid(v) != ops.lid(c):
        return None
    e1, s1 = _exists_sol(ops, a, b, c)
    e2, s2 = _exists_sol(ops, a, u, v)
    if e1 != e2 or (e1 and s1 != s2):
        return _ce(ops, "abcuv", tpl,
                   "bR=uR, Rc=Rv: (b,c)- and (u,v)-inverses coincide",
                   f"exists {e1} vs {e2}, values "
                   f"{ops.literal(s1) if s1 is not None else None} vs "
                   f"{ops.literal(s2) if s2 is not None else None}")
    return None


def _f_inofbca(ops, tpl):
    a, b = tpl
    n = ops.n
    lhs = any(
        ops.mul3(a, y, a) == a and ops.mul3(y, a, y) == y and ops.rid(y) == ops.rid(b)
        for y in range(n)
    )
    ab = ops.mul(a, b)
    item2 = ops.regular(a) and ops.rid(a) == ops.rid(ab) and ops.rann(ab) == ops.rann(b)
    item3 = ops.regular(a) and ops.ds_right(b, a)
    if not (lhs == item2 == item3):
        return _ce(ops, "ab", tpl, "inner+outer with yR=bR iff items (2), (3)",
                   f"{lhs}, {item2}, {item3}")
    return None


def _f_inofbcdua(ops, tpl):
    a, c = tpl
    n = ops.n
    lhs = any(
        ops.mul3(a, y, a) == a and ops.mul3(y, a, y) == y and ops.lid(y) == ops.lid(c)
        for y in range(n)
    )
    ca = ops.mul(c, a)
    item2 = ops.regular(a) and ops.lid(ca) == ops.lid(a) and ops.lann(ca) == ops.lann(c)
    item3 = ops.regular(a) and ops.ds_left(c, a)
    if not (lhs == item2 == item3):
        return _ce(ops, "ac", tpl, "inner+outer with Ry=Rc iff items (2), (3)",
                   f"{lhs}, {item2}, {item3}")
    return None


def _f_inofbcbca(ops, tpl):
    a, b, c = tpl
    exists, sol = _exists_sol(ops, a, b, c)
    lhs = exists and ops.mul3(a, sol, a) == a
    ab = ops.mul(a, b)
    ca = ops.mul(c, a)
    item2 = (
        ops.regular(a)
        and ops.rid(a) == ops.rid(ab)
        and ops.lid(ca) == ops.lid(a)
        and ops.rann(ab) == ops.rann(b)
        and ops.lann(ca) == ops.lann(c)
    )
    item3 = ops.regular(a) and ops.ds_right(b, a) and ops.ds_left(c, a)
    if not (lhs == item2 == item3):
        return _ce(ops, "abc", tpl, "(b,c)-inverse also inner iff items (2), (3)",
                   f"{lhs}, {item2}, {item3}")
    return None


def _f_12drp(ops, tpl):
    a, y = tpl
    aya = ops.mul3(a, y, a) == a
    yay = ops.mul3(y, a, y) == y
    yy = ops.mul(y, y)
    aa = ops.mul(a, a)
    ayy = ops.mul(a, yy) == y
    yaa = ops.mul(y, aa) == a
    if (aya and yay and ayy and yaa) != (ayy and yaa):
        return _ce(ops, "ay", tpl, "four identities iff ay²=y, ya²=a", "mismatch")
    yya = ops.mul(yy, a) == y
    aay = ops.mul(aa, y) == a
    if (aya and yay and yya and aay) != (yya and aay):
        return _ce(ops, "ay", tpl, "four identities iff y²a=y, a²y=a", "mismatch")
    if aya and yay:
        if (ops.rid(y) == ops.rid(a)) != (ayy and yaa):
            return _ce(ops, "ay", tpl,
                       "given aya=a, yay=y: yR=aR iff ay²=y, ya²=a", "mismatch")
    # per-element: solvability of ay²=y, ya²=a iff group invertibility
    if y == 0:  # run the existence check once per a
        has = any(
            ops.mul(a, ops.mul(z, z)) == z and ops.mul(z, aa) == a
            for z in range(ops.n)
        )
        group_exists = bool(ops.eq1_solutions(a, a, a))
        if has != group_exists:
            return _ce(ops, "ay", tpl, "∃y: ay²=y, ya²=a iff a group invertible",
                       f"{has} vs {group_exists}")
    return None


def _f_corinoc(ops, tpl):
    (a,) = tpl
    sa = ops.star(a)
    exists, _ = _exists_sol(ops, a, a, sa)
    aa = ops.mul(a, a)
    item2 = (
        ops.rid(a) == ops.rid(aa)
        and ops.lid(ops.mul(sa, a)) == ops.lid(a)
        and ops.rann(aa) == ops.rann(a)
    )
    item3 = ops.ds_right(a, a) and ops.ds_left(sa, a)
    group_exists = bool(ops.eq1_solutions(a, a, a))
    one_three = any(
        ops.mul3(a, x, a) == a and ops.star(ops.mul(a, x)) == ops.mul(a, x)
        for x in range(ops.n)
    )
    item4 = group_exists and one_three
    if not (exists == item2 == item3 == item4):
        return _ce(ops, "a", tpl, "core-invertibility items (1)-(4) agree",
                   f"{exists}, {item2}, {item3}, {item4}")
    return None


def _f_alongd(ops, tpl):
    a, d = tpl
    exists, sol = _exists_sol(ops, a, d, d)
    ad = ops.mul(a, d)
    da = ops.mul(d, a)
    gad = ops.eq1_solutions(ad, ad, ad)
    gda = ops.eq1_solutions(da, da, da)
    item2 = (d in ops.rid(da)) and bool(gda)
    item3 = (d in ops.lid(ad)) and bool(gad)
    if not (exists == item2 == item3):
        return _ce(ops, "ad", tpl, "inverse along d iff items (2), (3)",
                   f"{exists}, {item2}, {item3}")
    if exists:
        via_ad = ops.mul(d, gad[0])
        via_da = ops.mul(gda[0], d)
        if via_ad != sol or via_da != sol:
            return _ce(ops, "ad", tpl, "a^{||d} = d(ad)# = (da)#d",
                       f"{ops.literal(sol)} vs {ops.literal(via_ad)}, "
                       f"{ops.literal(via_da)}")
    return None


def _f_alongo(ops, tpl):
    a, d = tpl
    exists, _ = _exists_sol(ops, a, d, d)
    dad = ops.mul3(d, a, d)
    crit = ops.rid(d) == ops.rid(dad) and ops.lid(d) == ops.lid(dad)
    if exists != crit:
        return _ce(ops, "ad", tpl, "inverse along d iff dR=dadR and Rd=Rdad",
                   f"{exists} vs {crit}")
    return None


def _f_ats2ringgroupa(ops, tpl):
    a, b, c, d = tpl
    if ops.rid(d) != ops.rid(b) or ops.rann(d) != ops.rann(c):
        return None
    exists, sol = _exists_sol(ops, a, b, c)
    if not exists:
        return None
    ad = ops.mul(a, d)
    da = ops.mul(d, a)
    gad = ops.eq1_solutions(ad, ad, ad)
    gda = ops.eq1_solutions(da, da, da)
    if not gad or not gda:
        return _ce(ops, "abcd", tpl, "ad and da group invertible", "not invertible")
    along = ops.eq1_solutions(a, d, d)
    if not along or along[0] != sol:
        return _ce(ops, "abcd", tpl, "(b,c)-inverse equals the inverse along d",
                   "mismatch")
    if ops.mul(d, gad[0]) != sol or ops.mul(gda[0], d) != sol:
        return _ce(ops, "abcd", tpl, "inverse equals d(ad)# and (da)#d", "mismatch")
    return None


# ---------------------------------------------------------------------------
# sampled checkers for infinite matrix rings


class _SampledEnv:
    """Seeded random element source plus backend access for one matrix ring."""

    def __init__(self, ring: MatrixRing, seed: int):
        self.ring = ring
        self.k = ring.size
        self.dom = ring.scalars
        self.rng = random.Random(seed)
        self.be = backend_for(ring, "matrix")
        self.draw = 0

    def _entry(self):
        num = self.rng.randint(-4, 4)
        den = 2 if self.rng.random() < 0.2 else 1
        return Fraction(num, den)

    def rand_element(self) -> Element:
        self.draw += 1
        k = self.k
        if self.draw % 11 == 0:
            return self.ring.zero
        if self.draw % 13 == 0:
            return self.ring.one
        r = self.rng.randint(0, k)
        if r == 0:
            return self.ring.zero
        u = [[self._entry() for _ in range(r)] for _ in range(k)]
        v = [[self._entry() for _ in range(k)] for _ in range(r)]
        prod = [
            [sum((u[i][t] * v[t][j] for t in range(r)), Fraction(0)) for j in range(k)]
            for i in range(k)
        ]
        return self.ring.element(prod)

    def rand_invertible(self) -> Element:
        while True:
            m = [[self._entry() for _ in range(self.k)] for _ in range(self.k)]
            e = self.ring.element(m)
            if e.inverse() is not None:
                return e

    def outer_from(self, a: Element) -> Element:
        g = self.be.inner_inverse(a)
        return g * a * g  # satisfies y a y = y

    def exists_value(self, a, b, c):
        rep = engine.bc_inverse(a, b, c, backend="matrix")
        return rep.exists, rep.value

    def candidates(self, a, b, c, value):
        cands = []
        if value is not None:
            cands.append(value)
        cands.append(self.outer_from(a))
        cands.append(self.rand_element())
        cands.append(self.rand_element())
        return cands


def _s_eq1_uniqueness(env: _SampledEnv):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, value = env.exists_value(a, b, c)
    for y in env.candidates(a, b, c, value):
        ok = env.be.eq1_check(y, a, b, c) == (exists and y == value)
        if not ok:
            return _ce_elems("yabc", (y, a, b, c),
                             "defining equation holds exactly at the unique value",
                             "mismatch")
    return None


def _s_annihilator(env):
    a, b = env.rand_element(), env.rand_element()
    be = env.be
    if be.in_right_ideal(a, b) != be.left_ann_subset(b, a):
        return _ce_elems("ab", (a, b), "aR ⊆ bR iff °b ⊆ °a (b regular)", "mismatch")
    if be.in_left_ideal(a, b) != be.right_ann_subset(b, a):
        return _ce_elems("ab", (a, b), "Ra ⊆ Rb iff b° ⊆ a° (b regular)", "mismatch")
    return None


def _s_pirdcca(env):
    a = env.rand_element()
    y = env.outer_from(a)
    be = env.be
    ya, ay = y * a, a * y
    checks = (
        (be.right_ideal_eq(ya, y), "yaR = yR"),
        (be.left_ideal_eq(ay, y), "Ray = Ry"),
        (be.rann_cap_rid_trivial(a, y), "a° ∩ yR = {0}"),
        (be.rann_cap_rid_trivial(a, ya), "a° ∩ yaR = {0}"),
        (be.lann_cap_lid_trivial(a, y), "°a ∩ Ry = {0}"),
        (be.lann_cap_lid_trivial(a, ay), "°a ∩ Ray = {0}"),
    )
    for ok, what in checks:
        if not ok:
            return _ce_elems("ay", (a, y), what, "fails")
    return None


def _s_abcire(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, value = env.exists_value(a, b, c)
    be = env.be
    for y in env.candidates(a, b, c, value):
        by_def = be.eq1_check(y, a, b, c)
        by_char = (
            y * a * y == y and be.right_ideal_eq(y, b) and be.left_ideal_eq(y, c)
        )
        if by_def != by_char:
            return _ce_elems("yabc", (y, a, b, c),
                             "defining equation iff yay=y, yR=bR, Ry=Rc", "mismatch")
    return None


def _s_abcirg(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, _ = env.exists_value(a, b, c)
    cab = c * a * b
    crit = env.be.in_left_ideal(b, cab) and env.be.in_right_ideal(c, cab)
    if exists != crit:
        return _ce_elems("abc", (a, b, c), "existence iff b ∈ Rcab and c ∈ cabR",
                         f"{exists} vs {crit}")
    return None


def _s_abcirf(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, _ = env.exists_value(a, b, c)
    if exists and not (env.be.is_regular(c * a * b) and env.be.is_regular(b)
                       and env.be.is_regular(c)):
        return _ce_elems("abc", (a, b, c), "existence implies regular", "fails")
    return None


def _s_abcirl(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, _ = env.exists_value(a, b, c)
    be = env.be
    item2 = be.rann_cap_rid_trivial(a, b) and be.decomp_right(a * b, c)
    item3 = be.lann_cap_lid_trivial(a, c) and be.decomp_left(c * a, b)
    if not (exists == item2 == item3):
        return _ce_elems("abc", (a, b, c), "existence iff both decomposition items",
                         f"{exists}, {item2}, {item3}")
    return None


def _s_abcirn(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, value = env.exists_value(a, b, c)
    be = env.be
    for y in env.candidates(a, b, c, value):
        is_bc = exists and y == value
        yay = y * a * y == y
        hybrid = yay and be.right_ideal_eq(y, b) and be.right_ann_eq(y, c)
        annih = yay and be.left_ann_eq(y, b) and be.right_ann_eq(y, c)
        if not (is_bc == hybrid == annih):
            return _ce_elems("yabc", (y, a, b, c),
                             "bc iff hybrid iff annihilator (everything regular)",
                             f"{is_bc}, {hybrid}, {annih}")
    return None


def _s_anihilata(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, _ = env.exists_value(a, b, c)
    be = env.be
    ab, ca = a * b, c * a
    item2 = be.right_ann_eq(ab, b) and be.decomp_right(ab, c)
    item3 = be.left_ann_eq(ca, c) and be.decomp_left(ca, b)
    if not (exists == item2 == item3):
        return _ce_elems("abc", (a, b, c), "existence iff both annihilator items",
                         f"{exists}, {item2}, {item3}")
    return None


def _one_more_inner(env, m, g):
    g2 = env.be.second_inner_inverse(m, g)
    return [g] if g2 is None else [g, g2]


def _s_ats2innera(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    be = env.be
    cab = c * a * b
    item3 = be.left_ideal_eq(b, cab)
    item4 = be.right_ann_eq(b, cab)
    for g in _one_more_inner(env, cab, be.inner_inverse(cab)):
        x = b * g * c
        xax = x * a * x == x
        item1 = xax and be.right_ideal_eq(b, x)
        item2 = xax and be.in_right_ideal(b, x)
        if not (item1 == item2 == item3 == item4):
            return _ce_elems("abc", (a, b, c),
                             "xax=x,bR=xR iff bR⊆xR iff Rb=Rcab iff b°=(cab)°",
                             f"{item1}, {item2}, {item3}, {item4}")
    return None


def _s_ats2innerabdd(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    be = env.be
    cab = c * a * b
    item3 = be.right_ideal_eq(c, cab)
    item4 = be.left_ann_eq(c, cab)
    for g in _one_more_inner(env, cab, be.inner_inverse(cab)):
        x = b * g * c
        xax = x * a * x == x
        item1 = xax and be.left_ideal_eq(x, c)
        item2 = xax and be.in_left_ideal(c, x)
        if not (item1 == item2 == item3 == item4):
            return _ce_elems("abc", (a, b, c),
                             "xax=x,Rx=Rc iff Rc⊆Rx iff cR=cabR iff °c=°(cab)",
                             f"{item1}, {item2}, {item3}, {item4}")
    return None


def _s_ats2iannnera(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    be = env.be
    cab = c * a * b
    item3 = be.right_ideal_eq(c, cab)
    for g in _one_more_inner(env, cab, be.inner_inverse(cab)):
        x = b * g * c
        xax = x * a * x == x
        item1 = xax and be.right_ann_eq(x, c)
        item2 = xax and be.right_ann_subset(x, c)
        if not (item1 == item2 == item3):
            return _ce_elems("abc", (a, b, c),
                             "xax=x,x°=c° iff x°⊆c° iff cR=cabR",
                             f"{item1}, {item2}, {item3}")
    return None


def _s_informuast2a(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, value = env.exists_value(a, b, c)
    be = env.be
    cab = c * a * b
    item3 = be.right_ann_eq(b, cab) and be.right_ideal_eq(c, cab)
    for g in _one_more_inner(env, cab, be.inner_inverse(cab)):
        x = b * g * c
        item1 = exists and x == value
        item2 = (
            x * a * x == x
            and be.in_right_ideal(b, x)
            and be.right_ann_subset(x, c)
        )
        if not (item1 == item2 == item3):
            return _ce_elems("abc", (a, b, c),
                             "x = b(cab)⁻c is the inverse iff items (2), (3)",
                             f"{item1}, {item2}, {item3}")
    return None


def _s_informuast2aal(env):
    a, d = env.rand_element(), env.rand_element()
    exists, value = env.exists_value(a, d, d)
    be = env.be
    dad = d * a * d
    item3 = be.right_ann_eq(d, dad) and be.right_ideal_eq(d, dad)
    for g in _one_more_inner(env, dad, be.inner_inverse(dad)):
        x = d * g * d
        item1 = exists and x == value
        item2 = (
            x * a * x == x
            and be.in_right_ideal(d, x)
            and be.right_ann_subset(x, d)
        )
        if not (item1 == item2 == item3):
            return _ce_elems("ad", (a, d),
                             "x = d(dad)⁻d is the inverse along d iff items (2), (3)",
                             f"{item1}, {item2}, {item3}")
    return None


def _left_def(be, y, a, b, c):
    return be.in_left_ideal(y, c) and y * a * b == b


def _right_def(be, y, a, b, c):
    return be.in_right_ideal(y, b) and c * a * y == c


def _s_star_duality(env):
    be = env.be
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    cab = c * a * b
    g = be.inner_inverse(cab)
    x0 = b * g * c
    ys = [env.rand_element()]
    if x0 * a * b == b:  # genuine left instance to exercise the true branch
        v = env.rand_element()
        ys.append(x0 + v * (env.ring.one - cab * g) * c)
    for y in ys:
        left = _left_def(be, y, a, b, c)
        right = _right_def(be, y.star(), a.star(), c.star(), b.star())
        if left != right:
            return _ce_elems("yabc", (y, a, b, c),
                             "left (b,c)-inverse iff star is right (c*,b*)-inverse",
                             f"{left} vs {right}")
    return None


def _s_general_solutions(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    be = env.be
    cab = c * a * b
    if not be.in_left_ideal(b, cab):
        return None
    g = be.inner_inverse(cab)
    x0 = b * g * c
    one = env.ring.one
    om = one - cab * g
    for _ in range(3):
        v = env.rand_element()
        y = x0 + v * om * c
        if not _left_def(be, y, a, b, c):
            return _ce_elems("abcv", (a, b, c, v),
                             "every family member is a left inverse", "fails")
        # reconstruction round trip: y = s c with s cab = b, v' = s - b(cab)⁻
        s = linalg.solve_left(env.dom, c.payload, y.payload)
        if s is None:
            return _ce_elems("abcv", (a, b, c, v), "family member lies in Rc",
                             "no s with y = sc")
        v2 = Element(env.ring, s) - b * g
        if x0 + v2 * om * c != y:
            return _ce_elems("abcv", (a, b, c, v),
                             "family reproduces each left inverse", "round trip fails")
    return None


def _s_coincide(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    be = env.be
    cab = c * a * b
    left = be.in_left_ideal(b, cab)
    right = be.in_right_ideal(c, cab)
    if not (left and right):
        return None
    exists, value = env.exists_value(a, b, c)
    if not exists:
        return _ce_elems("abc", (a, b, c),
                         "both one-sided invertible implies two-sided", "not exists")
    g = be.inner_inverse(cab)
    x0 = b * g * c
    one = env.ring.one
    for _ in range(2):
        v = env.rand_element()
        yl = x0 + v * (one - cab * g) * c
        yr = x0 + b * (one - g * cab) * v
        if yl != value or yr != value:
            return _ce_elems("abcv", (a, b, c, v),
                             "one-sided families collapse to the unique inverse",
                             "family member differs")
    return None


def _s_fiveway(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    exists, _ = env.exists_value(a, b, c)
    be = env.be
    ab, ca = a * b, c * a
    cab = c * ab
    left_part = be.decomp_left(c, ab) and be.left_ideal_eq(b, ab)
    right_part = be.decomp_right(b, ca) and be.right_ideal_eq(c, ca)
    item2 = be.left_ann_eq(c, cab) and left_part
    item3 = be.right_ann_eq(b, cab) and right_part
    ces = []
    for g in _one_more_inner(env, cab, be.inner_inverse(cab)):
        x = b * g * c
        item4 = be.in_left_ideal(c, x) and left_part
        item5 = be.in_right_ideal(b, x) and right_part
        if item4 != exists or item5 != exists:
            ces.append((item4, item5))
    if not (exists == item2 == item3) or ces:
        return _ce_elems("abc", (a, b, c), "five-way items agree",
                         f"{exists}, {item2}, {item3}, extra {ces}")
    return None


def _s_bcuva(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    q1 = env.rand_invertible()
    q2 = env.rand_invertible()
    u = b * q1
    v = q2 * c
    ok = engine.generator_invariance(a, b, c, u, v, backend="matrix")
    if not ok:
        return _ce_elems("abcuv", (a, b, c, u, v),
                         "bR=uR, Rc=Rv: inverses coincide", "differ")
    return None


def _s_inofbca(env):
    a, b = env.rand_element(), env.rand_element()
    be = env.be
    ab = a * b
    item2 = be.right_ideal_eq(a, ab) and be.right_ann_eq(ab, b)
    item3 = be.decomp_right(b, a)
    if item2 != item3:
        return _ce_elems("ab", (a, b), "items (2) and (3) agree", f"{item2} vs {item3}")
    if item2:
        y = b * be.inner_inverse(ab)
        if not (a * y * a == a and y * a * y == y and be.right_ideal_eq(y, b)):
            return _ce_elems("ab", (a, b), "witness y = b(ab)⁻ satisfies item (1)",
                             "fails")
    y = env.outer_from(a)
    if a * y * a == a and y * a * y == y and be.right_ideal_eq(y, b) and not item2:
        return _ce_elems("ab", (a, b), "item (1) implies item (2)", "fails")
    return None


def _s_inofbcdua(env):
    a, c = env.rand_element(), env.rand_element()
    be = env.be
    ca = c * a
    item2 = be.left_ideal_eq(ca, a) and be.left_ann_eq(ca, c)
    item3 = be.decomp_left(c, a)
    if item2 != item3:
        return _ce_elems("ac", (a, c), "items (2) and (3) agree", f"{item2} vs {item3}")
    if item2:
        y = be.inner_inverse(ca) * c
        if not (a * y * a == a and y * a * y == y and be.left_ideal_eq(y, c)):
            return _ce_elems("ac", (a, c), "witness y = (ca)⁻c satisfies item (1)",
                             "fails")
    return None


def _s_inofbcbca(env):
    a, b, c = env.rand_element(), env.rand_element(), env.rand_element()
    rep = engine.inner_outer_bc(a, b, c, backend="matrix")
    be = env.be
    ab, ca = a * b, c * a
    item2 = (
        be.right_ideal_eq(a, ab)
        and be.left_ideal_eq(ca, a)
        and be.right_ann_eq(ab, b)
        and be.left_ann_eq(ca, c)
    )
    item3 = be.decomp_right(b, a) and be.decomp_left(c, a)
    if not (rep.exists == item2 == item3):
        return _ce_elems("abc", (a, b, c), "inner+outer items agree",
                         f"{rep.exists}, {item2}, {item3}")
    return None


def _s_12drp(env):
    a = env.rand_element()
    rep = engine.bc_inverse(a, a, a, backend="matrix")
    if rep.exists:
        y = rep.value
        aa = a * a
        if not (a * (y * y) == y and y * aa == a):
            return _ce_elems("a", (a,), "a# satisfies ay²=y, ya²=a", "fails")
    for y in (env.outer_from(a), env.rand_element()):
        aya = a * y * a == a
        yay = y * a * y == y
        ayy = a * (y * y) == y
        yaa = y * (a * a) == a
        if (aya and yay and ayy and yaa) != (ayy and yaa):
            return _ce_elems("ay", (a, y), "four identities iff ay²=y, ya²=a",
                             "mismatch")
        yya = (y * y) * a == y
        aay = (a * a) * y == a
        if (aya and yay and yya and aay) != (yya and aay):
            return _ce_elems("ay", (a, y), "four identities iff y²a=y, a²y=a",
                             "mismatch")
        if aya and yay and (env.be.right_ideal_eq(y, a) != (ayy and yaa)):
            return _ce_elems("ay", (a, y),
                             "given aya=a, yay=y: yR=aR iff ay²=y, ya²=a", "mismatch")
    return None


def _s_corinoc(env):
    a = env.rand_element()
    be = env.be
    sa = a.star()
    core = engine.bc_inverse(a, a, sa, backend="matrix").exists
    aa = a * a
    item2 = (
        be.right_ideal_eq(a, aa)
        and be.left_ideal_eq(sa * a, a)
        and be.right_ann_eq(aa, a)
    )
    item3 = be.decomp_right(a, a) and be.decomp_left(sa, a)
    group = engine.bc_inverse(a, a, a, backend="matrix").exists
    one_three = engine.one_three_inverse(a, backend="matrix") is not None
    item4 = group and one_three
    if not (core == item2 == item3 == item4):
        return _ce_elems("a", (a,), "core-invertibility items agree",
                         f"{core}, {item2}, {item3}, {item4}")
    return None


def _s_alongd(env):
    a, d = env.rand_element(), env.rand_element()
    be = env.be
    exists, value = env.exists_value(a, d, d)
    ad, da = a * d, d * a
    gad = engine.bc_inverse(ad, ad, ad, backend="matrix")
    gda = engine.bc_inverse(da, da, da, backend="matrix")
    item2 = be.in_right_ideal(d, da) and gda.exists
    item3 = be.in_left_ideal(d, ad) and gad.exists
    if not (exists == item2 == item3):
        return _ce_elems("ad", (a, d), "inverse along d iff items (2), (3)",
                         f"{exists}, {item2}, {item3}")
    if exists and (d * gad.value != value or gda.value * d != value):
        return _ce_elems("ad", (a, d), "a^{||d} = d(ad)# = (da)#d", "mismatch")
    return None


def _s_alongo(env):
    a, d = env.rand_element(), env.rand_element()
    exists, _ = env.exists_value(a, d, d)
    dad = d * a * d
    crit = env.be.right_ideal_eq(d, dad) and env.be.left_ideal_eq(d, dad)
    if exists != crit:
        return _ce_elems("ad", (a, d), "inverse along d iff dR=dadR and Rd=Rdad",
                         f"{exists} vs {crit}")
    return None


def _s_ats2ringgroupa(env):
    a, d = env.rand_element(), env.rand_element()
    b = d * env.rand_invertible()  # bR = dR
    c = env.rand_invertible() * d  # c° = d°
    exists, value = env.exists_value(a, b, c)
    if not exists:
        return None
    gad = engine.bc_inverse(a * d, a * d, a * d, backend="matrix")
    gda = engine.bc_inverse(d * a, d * a, d * a, backend="matrix")
    if not gad.exists or not gda.exists:
        return _ce_elems("abcd", (a, b, c, d), "ad and da group invertible", "fails")
    if d * gad.value != value or gda.value * d != value:
        return _ce_elems("abcd", (a, b, c, d),
                         "(b,c)-inverse equals d(ad)# and (da)#d", "mismatch")
    along = env.exists_value(a, d, d)
    if not along[0] or along[1] != value:
        return _ce_elems("abcd", (a, b, c, d),
                         "(b,c)-inverse equals the inverse along d", "mismatch")
    return None


# ---------------------------------------------------------------------------
# registry and drivers


@dataclass(frozen=True)
class _SuiteDef:
    arity: int
    needs_star: bool
    finite_check: Callable
    sampled_check: Callable


SUITES = {
    "eq1-uniqueness": _SuiteDef(3, False, _f_eq1_uniqueness, _s_eq1_uniqueness),
    "lemma-annihilator": _SuiteDef(2, False, _f_annihilator, _s_annihilator),
    "lemma-pirdcca": _SuiteDef(2, False, _f_pirdcca, _s_pirdcca),
    "lemma-abcire": _SuiteDef(4, False, _f_abcire, _s_abcire),
    "lemma-abcirg": _SuiteDef(3, False, _f_abcirg, _s_abcirg),
    "lemma-abcirf": _SuiteDef(3, False, _f_abcirf, _s_abcirf),
    "lemma-abcirl": _SuiteDef(3, False, _f_abcirl, _s_abcirl),
    "lemma-abcirn": _SuiteDef(4, False, _f_abcirn, _s_abcirn),
    "thm-anihilata": _SuiteDef(3, False, _f_anihilata, _s_anihilata),
    "lemma-ats2innera": _SuiteDef(3, False, _f_ats2innera, _s_ats2innera),
    "lemma-ats2innerabdd": _SuiteDef(3, False, _f_ats2innerabdd, _s_ats2innerabdd),
    "lemma-ats2iannnera": _SuiteDef(3, False, _f_ats2iannnera, _s_ats2iannnera),
    "thm-informuast2a": _SuiteDef(3, False, _f_informuast2a, _s_informuast2a),
    "cor-informuast2aal": _SuiteDef(2, False, _f_informuast2aal, _s_informuast2aal),
    "lemma-star-duality": _SuiteDef(4, True, _f_star_duality, _s_star_duality),
    "thm-general-solutions": _SuiteDef(3, False, _f_general_solutions,
                                       _s_general_solutions),
    "thm-coincide": _SuiteDef(3, False, _f_coincide, _s_coincide),
    "thm-fiveway": _SuiteDef(3, False, _f_fiveway, _s_fiveway),
    "lemma-bcuva": _SuiteDef(5, False, _f_bcuva, _s_bcuva),
    "thm-inofbca": _SuiteDef(2, False, _f_inofbca, _s_inofbca),
    "thm-inofbcdua": _SuiteDef(2, False, _f_inofbcdua, _s_inofbcdua),
    "thm-inofbcbca": _SuiteDef(3, False, _f_inofbcbca, _s_inofbcbca),
    "eq-12drp": _SuiteDef(2, False, _f_12drp, _s_12drp),
    "cor-corinoc": _SuiteDef(1, True, _f_corinoc, _s_corinoc),
    "lemma-alongd": _SuiteDef(2, False, _f_alongd, _s_alongd),
    "lemma-alongo": _SuiteDef(2, False, _f_alongo, _s_alongo),
    "lemma-ats2ringgroupa": _SuiteDef(4, False, _f_ats2ringgroupa,
                                      _s_ats2ringgroupa),
}


def suite_ids() -> list:
    return list(SUITES)


def run_suite(ring: Ring, suite: str, *, seed: Optional[int] = None,
              sampled: bool = False, samples: int = DEFAULT_SAMPLES,
              max_tuples: int = DEFAULT_TUPLE_GUARD) -> SuiteReport:
    """Run one verification suite; exhaustive when the ring allows it."""
    sd = SUITES.get(suite)
    if sd is None:
        raise UnknownSuite(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    if sd.needs_star and ring.involution is Involution.NONE:
        raise NoInvolution(f"suite {suite} needs an involution, {ring.spec} has none")
    t0 = time.perf_counter()
    counterexamples = []
    checked = 0
    infinite = ring.order is None
    use_sampled = sampled or infinite
    if use_sampled and infinite:
        if not isinstance(ring, MatrixRing) or not ring.is_field_matrix_ring:
            raise CardinalityGuard(f"{ring.spec} supports neither enumeration nor sampling")
        used_seed = DEFAULT_SEED if seed is None else seed
        env = _SampledEnv(ring, used_seed)
        for _ in range(samples):
            checked += 1
            ce = sd.sampled_check(env)
            if ce is not None:
                counterexamples.append(ce)
                break
        mode, used_samples = "sampled", samples
    else:
        ops = finite_ops(ring)
        if use_sampled:
            rng = random.Random(DEFAULT_SEED if seed is None else seed)
            n = ops.n
            for _ in range(samples):
                checked += 1
                tpl = tuple(rng.randrange(n) for _ in range(sd.arity))
                ce = sd.finite_check(ops, tpl)
                if ce is not None:
                    counterexamples.append(ce)
                    break
            mode = "sampled"
            used_seed = DEFAULT_SEED if seed is None else seed
            used_samples = samples
        else:
            total = ops.n ** sd.arity
            if total > max_tuples:
                raise CardinalityGuard(
                    f"suite {suite} over {ring.spec} sweeps {total} tuples, above the "
                    f"guard of {max_tuples}; use sampled mode"
                )
            for tpl in itertools.product(range(ops.n), repeat=sd.arity):
                checked += 1
                ce = sd.finite_check(ops, tpl)
                if ce is not None:
                    counterexamples.append(ce)
                    break
            mode, used_seed, used_samples = "exhaustive", None, None
    elapsed = time.perf_counter() - t0
    return SuiteReport(
        suite=suite,
        ring_spec=ring.spec,
        mode=mode,
        seed=used_seed,
        samples=used_samples,
        tuples_checked=checked,
        counterexamples=counterexamples,
        verdict="pass" if not counterexamples else "fail",
        elapsed=elapsed,
    )


def run_all(ring: Ring, *, seed: Optional[int] = None, sampled: bool = False,
            samples: int = DEFAULT_SAMPLES,
            max_tuples: int = DEFAULT_TUPLE_GUARD) -> list:
    """All suites applicable to the ring, in registry order."""
    reports = []
    for suite, sd in SUITES.items():
        if sd.needs_star and ring.involution is Involution.NONE:
            continue
        reports.append(run_suite(ring, suite, seed=seed, sampled=sampled,
                                 samples=samples, max_tuples=max_tuples))
    return reports


def cross_backend_check(p: int, k: int, *, sampled: bool = False,
                        seed: Optional[int] = None, samples: int = DEFAULT_SAMPLES,
                        guard: int = CROSSCHECK_TRIPLE_GUARD) -> SuiteReport:
    """Matrix-backend verdicts and values versus finite enumeration on M_k(Z/p)."""
    ring = MatrixRing(PrimeField(p), k)
    n = ring.order
    t0 = time.perf_counter()
    counterexamples = []
    checked = 0
    backend_for(ring, "matrix")  # warm the shared backend cache
    ops = finite_ops(ring)

    def check_triple(ia, ib, ic):
        a, b, c = ops.element(ia), ops.element(ib), ops.element(ic)
        sols = ops.eq1_solutions(ia, ib, ic)
        exists_f = bool(sols)
        rep = engine.bc_inverse(a, b, c, backend="matrix")
        if rep.exists != exists_f:
            return _ce(ops, "abc", (ia, ib, ic), f"finite exists {exists_f}",
                       f"matrix exists {rep.exists}")
        if exists_f and rep.value.payload != ops.enum.payload_list[sols[0]]:
            return _ce(ops, "abc", (ia, ib, ic),
                       f"value {ops.literal(sols[0])}", f"value {rep.value.literal()}")
        return None

    if sampled or n ** 3 > guard:
        if not sampled:
            raise CardinalityGuard(
                f"cross-backend check over {ring.spec} has {n ** 3} triples, above "
                f"the guard of {guard}; use sampled mode"
            )
        rng = random.Random(DEFAULT_SEED if seed is None else seed)
        for _ in range(samples):
            checked += 1
            ce = check_triple(rng.randrange(n), rng.randrange(n), rng.randrange(n))
            if ce is not None:
                counterexamples.append(ce)
                break
        mode = "sampled"
        used_seed = DEFAULT_SEED if seed is None else seed
        used_samples = samples
    else:
        for ia, ib, ic in itertools.product(range(n), repeat=3):
            checked += 1
            ce = check_triple(ia, ib, ic)
            if ce is not None:
                counterexamples.append(ce)
                break
        mode, used_seed, used_samples = "exhaustive", None, None
    elapsed = time.perf_counter() - t0
    return SuiteReport(
        suite="cross-backend",
        ring_spec=ring.spec,
        mode=mode,
        seed=used_seed,
        samples=used_samples,
        tuples_checked=checked,
        counterexamples=counterexamples,
        verdict="pass" if not counterexamples else "fail",
        elapsed=elapsed,
    )
