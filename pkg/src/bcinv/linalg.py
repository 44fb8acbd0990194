"""Exact linear algebra over the rationals and modular scalars.

Backs every rank, subspace and inner-inverse computation for matrix
rings. All arithmetic is exact (fractions.Fraction or residues); no
floating point enters anywhere. Pivoting always picks the first nonzero
candidate, so row-echelon forms and transforms are reproducible.

Matrices are tuples of row tuples; that keeps them hashable so they can
double as ring-element payloads and cache keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DimensionMismatch


# ---------------------------------------------------------------------------
# scalar domains


class Rationals:
    """Exact rational scalars."""

    is_field = True
    size = None  # infinite

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        return Fraction(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(a.denominator, a.numerator)

    def parse(self, token: str):
        # Fraction accepts "7", "-3" and "1/2"; it normalizes the sign and
        # reduces, which is exactly the canonical form we store.
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {token!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return type(other) is Rationals

    def __hash__(self):
        return hash(Rationals)

    def __repr__(self):
        return "Rationals()"


class _ModularScalars:
    """Residues 0..n-1 with arithmetic mod n."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("modulus must be at least 2")
        self.size = n
        self.zero = 0
        self.one = 1

    def coerce(self, v):
        v = int(v)
        if not 0 <= v < self.size:
            raise ValueError(f"residue {v} out of range [0, {self.size})")
        return v

    def add(self, a, b):
        return (a + b) % self.size

    def sub(self, a, b):
        return (a - b) % self.size

    def mul(self, a, b):
        return (a * b) % self.size

    def neg(self, a):
        return (-a) % self.size

    def parse(self, token: str):
        try:
            v = int(token)
        except ValueError as exc:
            raise ValueError(f"bad residue literal {token!r}") from exc
        if not 0 <= v < self.size:
            # reject rather than reduce: silent wrap-around hides typos
            raise ValueError(f"residue {v} out of range [0, {self.size})")
        return v

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return type(other) is type(self) and other.size == self.size

    def __hash__(self):
        return hash((type(self), self.size))

    def __repr__(self):
        return f"{type(self).__name__}({self.size})"


class PrimeField(_ModularScalars):
    """The field Z/p for prime p."""

    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        super().__init__(p)

    def inv(self, a):
        if a % self.size == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.size - 2, self.size)


class IntegersMod(_ModularScalars):
    """Z/n for arbitrary n >= 2; not a field, so no linear algebra on it."""

    is_field = False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# basic matrix operations (domain-parameterized, shape from the tuples)


def dims(m):
    return len(m), len(m[0])


def identity(dom, k: int):
    return tuple(
        tuple(dom.one if i == j else dom.zero for j in range(k)) for i in range(k)
    )


def zeros(dom, r: int, c: int):
    return tuple(tuple(dom.zero for _ in range(c)) for _ in range(r))


def transpose(m):
    return tuple(tuple(row) for row in zip(*m))


def mat_add(dom, a, b):
    if dims(a) != dims(b):
        raise DimensionMismatch(f"add: {dims(a)} vs {dims(b)}")
    return tuple(
        tuple(dom.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_sub(dom, a, b):
    if dims(a) != dims(b):
        raise DimensionMismatch(f"sub: {dims(a)} vs {dims(b)}")
    return tuple(
        tuple(dom.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_neg(dom, a):
    return tuple(tuple(dom.neg(x) for x in row) for row in a)


def mat_mul(dom, a, b):
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ca != rb:
        raise DimensionMismatch(f"mul: {dims(a)} vs {dims(b)}")
    bt = transpose(b)
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = dom.zero
            for x, y in zip(row, col):
                acc = dom.add(acc, dom.mul(x, y))
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_pow(dom, a, k: int):
    r, c = dims(a)
    if r != c:
        raise DimensionMismatch("pow needs a square matrix")
    if k < 0:
        raise ValueError("negative power")
    out = identity(dom, r)
    base = a
    while k:
        if k & 1:
            out = mat_mul(dom, out, base)
        base = mat_mul(dom, base, base) if k > 1 else base
        k >>= 1
    return out


def hstack(a, b):
    if len(a) != len(b):
        raise DimensionMismatch("hstack: row counts differ")
    return tuple(ra + rb for ra, rb in zip(a, b))


def is_zero_matrix(dom, m) -> bool:
    return all(x == dom.zero for row in m for x in row)


# ---------------------------------------------------------------------------
# reduced row echelon form with invertible transform


@dataclass(frozen=True)
class RrefResult:
    rref: tuple
    rank: int
    transform: tuple  # transform @ input == rref, invertible
    pivots: tuple


def rref(dom, m) -> RrefResult:
    """Gauss-Jordan with the first nonzero pivot; returns (R, rank, T, pivots).

    T is invertible and T @ m == R; both facts are checked before returning.
    """
    if not dom.is_field:
        raise ValueError("row reduction requires field scalars")
    rows, cols = dims(m)
    a = [list(row) for row in m]
    t = [[dom.one if i == j else dom.zero for j in range(rows)] for i in range(rows)]
    tdet = dom.one
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c] != dom.zero:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
            t[r], t[pr] = t[pr], t[r]
            tdet = dom.neg(tdet)
        pv = a[r][c]
        if pv != dom.one:
            f = dom.inv(pv)
            a[r] = [dom.mul(f, x) for x in a[r]]
            t[r] = [dom.mul(f, x) for x in t[r]]
            tdet = dom.mul(tdet, f)
        for i in range(rows):
            if i != r and a[i][c] != dom.zero:
                f = a[i][c]
                a[i] = [dom.sub(x, dom.mul(f, y)) for x, y in zip(a[i], a[r])]
                t[i] = [dom.sub(x, dom.mul(f, y)) for x, y in zip(t[i], t[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    rr = tuple(tuple(row) for row in a)
    tt = tuple(tuple(row) for row in t)
    if tdet == dom.zero or mat_mul(dom, tt, m) != rr:
        raise AssertionError("rref transform failed its invariants")
    return RrefResult(rr, r, tt, tuple(pivots))


def rank(dom, m) -> int:
    return rref(dom, m).rank


def inverse(dom, m):
    """Two-sided inverse of a square matrix, or None."""
    r, c = dims(m)
    if r != c:
        raise DimensionMismatch("inverse needs a square matrix")
    res = rref(dom, m)
    if res.rank != r:
        return None
    # rref of an invertible matrix is I, so the transform is the inverse
    return res.transform


# ---------------------------------------------------------------------------
# subspaces in canonical (RREF-row) form


class Side(Enum):
    COLUMN = "column"
    ROW = "row"
    NULL = "null"
    LEFT_NULL = "left_null"


_COLUMN_LIKE = (Side.COLUMN, Side.NULL)


def _orientation(side: Side) -> str:
    return "col" if side in _COLUMN_LIKE else "row"


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of F^ambient, basis stored as the nonzero rows of an RREF.

    The RREF form is canonical, so two equal subspaces have identical
    bases and equality is a plain tuple comparison.
    """

    ambient: int
    side: Side
    basis: tuple  # tuple of coordinate tuples, possibly empty

    @property
    def dim(self) -> int:
        return len(self.basis)


def _canonical_basis(dom, vectors, ambient) -> tuple:
    vecs = [v for v in vectors if any(x != dom.zero for x in v)]
    if not vecs:
        return ()
    res = rref(dom, tuple(vecs))
    return res.rref[: res.rank]


def row_space(dom, m) -> SubspaceBasis:
    res = rref(dom, m)
    return SubspaceBasis(dims(m)[1], Side.ROW, res.rref[: res.rank])


def column_space(dom, m) -> SubspaceBasis:
    res = rref(dom, transpose(m))
    return SubspaceBasis(dims(m)[0], Side.COLUMN, res.rref[: res.rank])


def null_space(dom, m) -> SubspaceBasis:
    """Basis of {x : m x = 0}, canonicalized; rank-nullity is asserted."""
    rows, cols = dims(m)
    res = rref(dom, m)
    pivot_set = set(res.pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    vecs = []
    for f in free:
        v = [dom.zero] * cols
        v[f] = dom.one
        for r_i, p_c in enumerate(res.pivots):
            v[p_c] = dom.neg(res.rref[r_i][f])
        vecs.append(tuple(v))
    basis = _canonical_basis(dom, vecs, cols)
    if len(basis) != cols - res.rank:
        raise AssertionError("rank-nullity violated")
    return SubspaceBasis(cols, Side.NULL, basis)


def left_null_space(dom, m) -> SubspaceBasis:
    ns = null_space(dom, transpose(m))
    return SubspaceBasis(dims(m)[0], Side.LEFT_NULL, ns.basis)


def _check_compatible(x: SubspaceBasis, y: SubspaceBasis):
    if x.ambient != y.ambient:
        raise DimensionMismatch(f"ambient {x.ambient} vs {y.ambient}")
    if _orientation(x.side) != _orientation(y.side):
        raise DimensionMismatch(f"cannot compare {x.side.value} with {y.side.value}")


def _stack_rank(dom, x: SubspaceBasis, y: SubspaceBasis) -> int:
    vecs = x.basis + y.basis
    if not vecs:
        return 0
    return rref(dom, vecs).rank


def subspace_subset(dom, x: SubspaceBasis, y: SubspaceBasis) -> bool:
    _check_compatible(x, y)
    if x.dim == 0:
        return True
    return _stack_rank(dom, x, y) == y.dim


def subspaces_equal(dom, x: SubspaceBasis, y: SubspaceBasis) -> bool:
    _check_compatible(x, y)
    return x.basis == y.basis  # RREF bases are canonical


def subspace_intersection_trivial(dom, x: SubspaceBasis, y: SubspaceBasis) -> bool:
    _check_compatible(x, y)
    return _stack_rank(dom, x, y) == x.dim + y.dim


def subspace_direct_sum(dom, x: SubspaceBasis, y: SubspaceBasis) -> bool:
    _check_compatible(x, y)
    return x.dim + y.dim == x.ambient and _stack_rank(dom, x, y) == x.ambient


# ---------------------------------------------------------------------------
# linear matrix equations


def solve_right(dom, a, b):
    """One X with a @ X == b, or None (free variables set to zero)."""
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ra != rb:
        raise DimensionMismatch("solve_right: row counts differ")
    res = rref(dom, hstack(a, b))
    if any(p >= ca for p in res.pivots):
        return None
    x = [[dom.zero] * cb for _ in range(ca)]
    for r_i, p_c in enumerate(res.pivots):
        row = res.rref[r_i]
        # pivot row reads x[p_c] + sum over free columns; free vars are zero
        for j in range(cb):
            x[p_c][j] = row[ca + j]
    xt = tuple(tuple(row) for row in x)
    # the construction above is only valid when every non-pivot coefficient
    # multiplies a zero free variable; check the product to be safe
    if mat_mul(dom, a, xt) != b:
        return None
    return xt


def solve_left(dom, a, b):
    """One X with X @ a == b, or None."""
    xt = solve_right(dom, transpose(a), transpose(b))
    return None if xt is None else transpose(xt)


# ---------------------------------------------------------------------------
# inner inverses


def inner_inverse(dom, m):
    """One g with m g m == m, via the rank normal form u m v = [[I,0],[0,0]]."""
    rows, cols = dims(m)
    r1 = rref(dom, m)  # r1.transform @ m == R
    r2 = rref(dom, transpose(r1.rref))  # r2.transform @ R^T == [[I,0],[0,0]]
    u = r1.transform  # rows x rows
    v = transpose(r2.transform)  # cols x cols; R @ v == D
    r = r1.rank
    dplus = tuple(
        tuple(dom.one if (i == j and i < r) else dom.zero for j in range(rows))
        for i in range(cols)
    )
    g = mat_mul(dom, mat_mul(dom, v, dplus), u)
    if mat_mul(dom, mat_mul(dom, m, g), m) != m:
        raise AssertionError("inner inverse construction failed m g m = m")
    return g


def inner_inverse_family(dom, m, g0, s=None, t=None):
    """Inner inverses g0 + s - g0 m s m g0, chained for a second parameter t.

    Every parameter choice yields an inner inverse of m; with s = t = 0 the
    base witness g0 comes back. The identity m g m = m is checked.
    """
    g = g0
    for param in (s, t):
        if param is None:
            continue
        gm = mat_mul(dom, g, m)
        mg = mat_mul(dom, m, g)
        correction = mat_mul(dom, gm, mat_mul(dom, param, mg))
        g = mat_sub(dom, mat_add(dom, g, param), correction)
    if mat_mul(dom, mat_mul(dom, m, g), m) != m:
        raise AssertionError("parametrized inner inverse failed m g m = m")
    return g


def second_inner_inverse(dom, m, g0):
    """A second, distinct inner inverse when one exists, else None."""
    rows, cols = dims(m)
    if rows == cols and rank(dom, m) == rows:
        return None  # invertible: the inner inverse is unique
    for i in range(cols):
        for j in range(rows):
            s = tuple(
                tuple(dom.one if (x, y) == (i, j) else dom.zero for y in range(rows))
                for x in range(cols)
            )
            g = inner_inverse_family(dom, m, g0, s=s)
            if g != g0:
                return g
    return None


def matrix_equation_solvable(dom, a, b, c):
    """One X with a X b == c, or None (Penrose consistency condition)."""
    ga = inner_inverse(dom, a)
    gb = inner_inverse(dom, b)
    x = mat_mul(dom, mat_mul(dom, ga, c), gb)
    if mat_mul(dom, mat_mul(dom, a, x), b) == c:
        return x
    return None


def all_matrices(dom, k: int):
    """Canonical enumeration of all k x k matrices over a finite scalar domain."""
    if dom.size is None:
        raise ValueError("cannot enumerate matrices over an infinite domain")
    for flat in itertools.product(range(dom.size), repeat=k * k):
        yield tuple(flat[i * k : (i + 1) * k] for i in range(k))
