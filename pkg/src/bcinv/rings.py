"""Concrete unital rings with optional involution, and their elements.

Supported kinds: integers mod n, k x k matrices over an exact scalar
domain (rationals, a prime field, or integers mod n), and finite rings
given by explicit Cayley tables. Handles and elements are immutable;
elements of different handles never mix.

Ring spec grammar (used by the CLI):

    zn:<n> | mat:q:<k> | mat:zp:<p>:<k> | mat:zn:<n>:<k> | table:<path>

Element literals: a decimal residue for modular rings, a table index for
table rings, and a row-major bracketed list with integer or p/q entries
for matrix rings, e.g. [[1/2,0],[0,-3]].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator, Optional

from . import linalg
from .errors import (
    InfiniteRing,
    MixedRings,
    NoInvolution,
    TableValidationError,
)
from .linalg import IntegersMod, PrimeField, Rationals


class Involution(Enum):
    IDENTITY = "identity"
    TRANSPOSE = "transpose"
    TABLE = "table"
    NONE = "none"


class Ring:
    """Base class for ring handles. Subclasses implement payload arithmetic."""

    spec: str
    involution: Involution
    order: Optional[int]  # None when infinite

    # -- payload arithmetic, provided by subclasses -------------------------

    def add_payload(self, p, q):
        raise NotImplementedError

    def mul_payload(self, p, q):
        raise NotImplementedError

    def neg_payload(self, p):
        raise NotImplementedError

    def star_payload(self, p):
        raise NotImplementedError

    def zero_payload(self):
        raise NotImplementedError

    def one_payload(self):
        raise NotImplementedError

    def coerce(self, value):
        """Validate and canonicalize a payload; raises ValueError."""
        raise NotImplementedError

    def parse_literal(self, text: str):
        raise NotImplementedError

    def format_literal(self, p) -> str:
        raise NotImplementedError

    def unit_inverse_payload(self, p):
        """Two-sided inverse payload, or None."""
        raise NotImplementedError

    def payloads(self) -> Iterator[Any]:
        """Canonical enumeration of all payloads (finite rings only)."""
        raise InfiniteRing(f"{self.spec} is not enumerable")

    # -- element facade ------------------------------------------------------

    def element(self, value) -> "Element":
        return Element(self, self.coerce(value))

    def parse(self, text: str) -> "Element":
        return Element(self, self.parse_literal(text))

    @property
    def zero(self) -> "Element":
        return Element(self, self.zero_payload())

    @property
    def one(self) -> "Element":
        return Element(self, self.one_payload())

    def elements(self) -> Iterator["Element"]:
        for p in self.payloads():
            yield Element(self, p)

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    # equality is structural so independently built handles interoperate
    def _signature(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._signature() == other._signature()

    def __hash__(self):
        return hash((type(self), self._signature()))

    def __repr__(self):
        return f"<ring {self.spec}>"


@dataclass(frozen=True, slots=True)
class Element:
    """One ring element: a handle plus its canonical payload encoding."""

    ring: Ring
    payload: Any

    def _check_same(self, other: "Element"):
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if self.ring != other.ring:
            raise MixedRings(f"{self.ring.spec} vs {other.ring.spec}")

    def __add__(self, other: "Element") -> "Element":
        self._check_same(other)
        return Element(self.ring, self.ring.add_payload(self.payload, other.payload))

    def __sub__(self, other: "Element") -> "Element":
        self._check_same(other)
        return self + (-other)

    def __mul__(self, other: "Element") -> "Element":
        self._check_same(other)
        return Element(self.ring, self.ring.mul_payload(self.payload, other.payload))

    def __neg__(self) -> "Element":
        return Element(self.ring, self.ring.neg_payload(self.payload))

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative powers are not defined; use .inverse()")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def star(self) -> "Element":
        return Element(self.ring, self.ring.star_payload(self.payload))

    def is_zero(self) -> bool:
        return self.payload == self.ring.zero_payload()

    def is_one(self) -> bool:
        return self.payload == self.ring.one_payload()

    def inverse(self) -> Optional["Element"]:
        p = self.ring.unit_inverse_payload(self.payload)
        return None if p is None else Element(self.ring, p)

    def literal(self) -> str:
        return self.ring.format_literal(self.payload)

    def __repr__(self):
        return f"<{self.literal()} in {self.ring.spec}>"


# spec-surface aliases; the Element operators carry the actual logic
def add(x: Element, y: Element) -> Element:
    return x + y


def mul(x: Element, y: Element) -> Element:
    return x * y


def neg(x: Element) -> Element:
    return -x


def star(x: Element) -> Element:
    return x.star()


def is_zero(x: Element) -> bool:
    return x.is_zero()


def is_one(x: Element) -> bool:
    return x.is_one()


def is_unit(x: Element) -> Optional[Element]:
    return x.inverse()


# ---------------------------------------------------------------------------
# integers mod n


class ModularRing(Ring):
    def __init__(self, n: int, involution: Involution = Involution.IDENTITY):
        if n < 2:
            raise ValueError("modulus must be at least 2 (the ring must be nontrivial)")
        if involution not in (Involution.IDENTITY, Involution.NONE):
            raise ValueError("Z/n supports the identity involution or none")
        self.n = n
        self.spec = f"zn:{n}"
        self.involution = involution
        self.order = n

    def _signature(self):
        return (self.n, self.involution)

    def add_payload(self, p, q):
        return (p + q) % self.n

    def mul_payload(self, p, q):
        return (p * q) % self.n

    def neg_payload(self, p):
        return (-p) % self.n

    def star_payload(self, p):
        if self.involution is Involution.NONE:
            raise NoInvolution(f"{self.spec} has no involution")
        return p

    def zero_payload(self):
        return 0

    def one_payload(self):
        return 1

    def coerce(self, value):
        v = int(value)
        if not 0 <= v < self.n:
            raise ValueError(f"residue {v} out of range [0, {self.n})")
        return v

    def parse_literal(self, text: str):
        try:
            v = int(text.strip())
        except ValueError as exc:
            raise ValueError(f"bad residue literal {text!r}") from exc
        return self.coerce(v)

    def format_literal(self, p) -> str:
        return str(p)

    def unit_inverse_payload(self, p):
        try:
            return pow(p, -1, self.n)
        except ValueError:
            return None

    def payloads(self):
        return iter(range(self.n))


# ---------------------------------------------------------------------------
# k x k matrices over an exact scalar domain


class MatrixRing(Ring):
    def __init__(self, scalars, size: int, involution: Involution = Involution.TRANSPOSE):
        if size < 1:
            raise ValueError("matrix size must be positive")
        if involution not in (Involution.TRANSPOSE, Involution.NONE):
            raise ValueError("matrix rings support the transpose involution or none")
        self.scalars = scalars
        self.size = size
        self.involution = involution
        if isinstance(scalars, Rationals):
            self.spec = f"mat:q:{size}"
            self.order = None
        elif isinstance(scalars, PrimeField):
            self.spec = f"mat:zp:{scalars.size}:{size}"
            self.order = scalars.size ** (size * size)
        elif isinstance(scalars, IntegersMod):
            self.spec = f"mat:zn:{scalars.size}:{size}"
            self.order = scalars.size ** (size * size)
        else:
            raise ValueError(f"unsupported scalar domain {scalars!r}")
        # product cache for small finite rings: sweeps hit the same pairs a lot
        self._mul_cache = {} if (self.order is not None and self.order <= 4096) else None

    def _signature(self):
        return (self.scalars, self.size, self.involution)

    @property
    def is_field_matrix_ring(self) -> bool:
        return self.scalars.is_field

    def add_payload(self, p, q):
        return linalg.mat_add(self.scalars, p, q)

    def mul_payload(self, p, q):
        if self._mul_cache is None:
            return linalg.mat_mul(self.scalars, p, q)
        key = (p, q)
        out = self._mul_cache.get(key)
        if out is None:
            out = linalg.mat_mul(self.scalars, p, q)
            self._mul_cache[key] = out
        return out

    def neg_payload(self, p):
        return linalg.mat_neg(self.scalars, p)

    def star_payload(self, p):
        if self.involution is Involution.NONE:
            raise NoInvolution(f"{self.spec} has no involution")
        return linalg.transpose(p)

    def zero_payload(self):
        return linalg.zeros(self.scalars, self.size, self.size)

    def one_payload(self):
        return linalg.identity(self.scalars, self.size)

    def coerce(self, value):
        rows = tuple(value)
        if len(rows) != self.size:
            raise ValueError(f"expected {self.size} rows, got {len(rows)}")
        out = []
        for row in rows:
            row = tuple(row)
            if len(row) != self.size:
                raise ValueError(f"expected {self.size} columns, got {len(row)}")
            out.append(tuple(self.scalars.coerce(x) for x in row))
        return tuple(out)

    def parse_literal(self, text: str):
        return parse_matrix_literal(text, self.scalars, self.size)

    def format_literal(self, p) -> str:
        rows = ",".join(
            "[" + ",".join(self.scalars.format(x) for x in row) + "]" for row in p
        )
        return f"[{rows}]"

    def unit_inverse_payload(self, p):
        if self.scalars.is_field:
            return linalg.inverse(self.scalars, p)
        return _modular_matrix_inverse(p, self.scalars.size)

    def payloads(self):
        if self.order is None:
            raise InfiniteRing(f"{self.spec} is not enumerable")
        return linalg.all_matrices(self.scalars, self.size)


def _int_det(m) -> int:
    """Determinant of an integer matrix by cofactor expansion (small sizes)."""
    k = len(m)
    if k == 1:
        return m[0][0]
    total = 0
    for j in range(k):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _int_det(minor)
    return total


def _modular_matrix_inverse(p, n: int):
    """Inverse of a matrix over Z/n via the integer adjugate, or None.

    Invertible over Z/n iff det is a unit mod n; then inv = det^{-1} adj.
    Cofactor expansion is exponential in k, fine at the desk scales where
    composite-modulus matrix rings are usable at all.
    """
    k = len(p)
    lifted = [list(row) for row in p]
    det = _int_det(lifted) % n
    try:
        det_inv = pow(det, -1, n)
    except ValueError:
        return None
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [row[:i] + row[i + 1 :] for r, row in enumerate(lifted) if r != j]
            adj[i][j] = ((-1) ** (i + j) * _int_det(minor)) % n if k > 1 else 1
    return tuple(tuple((det_inv * adj[i][j]) % n for j in range(k)) for i in range(k))


def parse_matrix_literal(text: str, scalars, size: int):
    """Parse a row-major bracketed matrix literal like [[1/2,0],[0,-3]]."""
    s = "".join(text.split())
    pos = 0

    def expect(ch):
        nonlocal pos
        if pos >= len(s) or s[pos] != ch:
            raise ValueError(f"bad matrix literal {text!r}: expected {ch!r} at {pos}")
        pos += 1

    def scalar_token():
        nonlocal pos
        start = pos
        while pos < len(s) and (s[pos].isdigit() or s[pos] in "-/"):
            pos += 1
        if start == pos:
            raise ValueError(f"bad matrix literal {text!r}: expected a scalar at {pos}")
        return s[start:pos]

    expect("[")
    rows = []
    while True:
        expect("[")
        row = [scalars.parse(scalar_token())]
        while pos < len(s) and s[pos] == ",":
            pos += 1
            row.append(scalars.parse(scalar_token()))
        expect("]")
        rows.append(tuple(row))
        if pos < len(s) and s[pos] == ",":
            pos += 1
            continue
        break
    expect("]")
    if pos != len(s):
        raise ValueError(f"bad matrix literal {text!r}: trailing characters")
    if len(rows) != size or any(len(r) != size for r in rows):
        raise ValueError(
            f"matrix literal {text!r} does not match the declared size {size}x{size}"
        )
    return tuple(rows)


# ---------------------------------------------------------------------------
# finite rings from explicit Cayley tables


class TableRing(Ring):
    """A finite ring given by addition/multiplication tables over 0..n-1.

    Tables are validated eagerly (closure by typing, associativity,
    commutative addition with inverses, unit laws, distributivity, and the
    involution axioms when a star table is present): every downstream
    verdict rests on these axioms, so a bad table must not load. The check
    is O(n^3) in the order.
    """

    def __init__(self, add_table, mul_table, zero: int, one: int, star_table=None,
                 spec: str = "table:<memory>"):
        self.add_table = tuple(tuple(row) for row in add_table)
        self.mul_table = tuple(tuple(row) for row in mul_table)
        self.zero_index = zero
        self.one_index = one
        self.star_table = tuple(star_table) if star_table is not None else None
        self.spec = spec
        self.order = len(self.add_table)
        self.involution = Involution.TABLE if self.star_table is not None else Involution.NONE
        self._validate()

    def _signature(self):
        return (self.add_table, self.mul_table, self.zero_index, self.one_index,
                self.star_table)

    def _validate(self):
        n = self.order
        if n < 2:
            raise TableValidationError("table ring must have at least two elements")

        def check_table(tbl, name):
            if len(tbl) != n or any(len(row) != n for row in tbl):
                raise TableValidationError(f"{name} table is not {n}x{n}")
            for row in tbl:
                for v in row:
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise TableValidationError(f"{name} table entry {v!r} out of range")

        check_table(self.add_table, "add")
        check_table(self.mul_table, "mul")
        if not 0 <= self.zero_index < n or not 0 <= self.one_index < n:
            raise TableValidationError("zero/one index out of range")
        if self.zero_index == self.one_index:
            raise TableValidationError("one must differ from zero")
        add, mul_, z, o = self.add_table, self.mul_table, self.zero_index, self.one_index
        rng = range(n)
        for a in rng:
            if add[a][z] != a or add[z][a] != a:
                raise TableValidationError("zero is not an additive identity")
            if mul_[a][o] != a or mul_[o][a] != a:
                raise TableValidationError("one is not a multiplicative identity")
            if all(add[a][b] != z for b in rng):
                raise TableValidationError(f"element {a} has no additive inverse")
            for b in rng:
                if add[a][b] != add[b][a]:
                    raise TableValidationError("addition is not commutative")
        for a in rng:
            for b in rng:
                for c in rng:
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise TableValidationError("addition is not associative")
                    if mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]:
                        raise TableValidationError("multiplication is not associative")
                    if mul_[a][add[b][c]] != add[mul_[a][b]][mul_[a][c]]:
                        raise TableValidationError("left distributivity fails")
                    if mul_[add[a][b]][c] != add[mul_[a][c]][mul_[b][c]]:
                        raise TableValidationError("right distributivity fails")
        if self.star_table is not None:
            st = self.star_table
            if len(st) != n or any(not isinstance(v, int) or not 0 <= v < n for v in st):
                raise TableValidationError("star table malformed")
            for a in rng:
                if st[st[a]] != a:
                    raise TableValidationError("star is not self-inverse")
                for b in rng:
                    if st[add[a][b]] != add[st[a]][st[b]]:
                        raise TableValidationError("star is not additive")
                    if st[mul_[a][b]] != mul_[st[b]][st[a]]:
                        raise TableValidationError("star is not anti-multiplicative")

    @classmethod
    def from_json(cls, path: str) -> "TableRing":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise TableValidationError(f"cannot read table file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise TableValidationError(f"table file {path} is not valid JSON: {exc}") from exc
        try:
            order = data["order"]
            add_table = data["add"]
            mul_table = data["mul"]
            zero = data["zero"]
            one = data["one"]
        except (KeyError, TypeError) as exc:
            raise TableValidationError(f"table file {path} misses a required field: {exc}") from exc
        try:
            if len(add_table) != order or len(mul_table) != order:
                raise TableValidationError(f"table file {path}: order does not match tables")
        except TypeError as exc:
            raise TableValidationError(f"table file {path}: malformed tables: {exc}") from exc
        return cls(add_table, mul_table, zero, one, data.get("star"), spec=f"table:{path}")

    def add_payload(self, p, q):
        return self.add_table[p][q]

    def mul_payload(self, p, q):
        return self.mul_table[p][q]

    def neg_payload(self, p):
        z = self.zero_index
        for q in range(self.order):
            if self.add_table[p][q] == z:
                return q
        raise AssertionError("validated table lost an additive inverse")

    def star_payload(self, p):
        if self.star_table is None:
            raise NoInvolution(f"{self.spec} has no involution")
        return self.star_table[p]

    def zero_payload(self):
        return self.zero_index

    def one_payload(self):
        return self.one_index

    def coerce(self, value):
        v = int(value)
        if not 0 <= v < self.order:
            raise ValueError(f"table index {v} out of range [0, {self.order})")
        return v

    def parse_literal(self, text: str):
        try:
            v = int(text.strip())
        except ValueError as exc:
            raise ValueError(f"bad table index literal {text!r}") from exc
        return self.coerce(v)

    def format_literal(self, p) -> str:
        return str(p)

    def unit_inverse_payload(self, p):
        o = self.one_index
        for q in range(self.order):
            if self.mul_table[p][q] == o and self.mul_table[q][p] == o:
                return q
        return None

    def payloads(self):
        return iter(range(self.order))


# ---------------------------------------------------------------------------
# ring spec parsing


def parse_ring(spec: str) -> Ring:
    parts = spec.split(":")
    try:
        if parts[0] == "zn" and len(parts) == 2:
            return ModularRing(int(parts[1]))
        if parts[0] == "mat" and len(parts) >= 3:
            if parts[1] == "q" and len(parts) == 3:
                return MatrixRing(Rationals(), int(parts[2]))
            if parts[1] == "zp" and len(parts) == 4:
                return MatrixRing(PrimeField(int(parts[2])), int(parts[3]))
            if parts[1] == "zn" and len(parts) == 4:
                return MatrixRing(IntegersMod(int(parts[2])), int(parts[3]))
        if parts[0] == "table" and len(parts) >= 2:
            return TableRing.from_json(":".join(parts[1:]))
    except ValueError as exc:
        raise ValueError(f"bad ring spec {spec!r}: {exc}") from exc
    raise ValueError(f"bad ring spec {spec!r}")
