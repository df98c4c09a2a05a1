"""Rings with involution: descriptors, concrete ring families, and elements.

Four families are supported:

* ``Z_n`` with the identity involution,
* ``M_d(Q)`` and ``M_d(GF(p))`` with transpose,
* ``M_d(Z_n)`` with transpose,
* finite rings given by explicit addition/multiplication tables and a star map.

Every finite ring also exposes an *index space*: its elements are numbered
``0 .. size-1`` in canonical enumeration order (residue order for ``Z_n``,
row-major lexicographic residue order for matrices, table index for table
rings) and the ``*_idx`` methods evaluate ring operations on numpy arrays of
indices.  The exhaustive searches in :mod:`ginv.engine` and
:mod:`ginv.oracle` run in that space.
"""

from __future__ import annotations

import enum
import functools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

import numpy as np

from . import linalg
from .errors import (
    InfiniteRing,
    InvolutionInvalid,
    MalformedSpec,
    NoSolution,
    NotAUnit,
    NotCommutative,
    RingMismatch,
    RingTooLarge,
)

#: Finite rings larger than this are refused by exhaustive operations.
DEFAULT_MAX_RING_SIZE = 65536
#: Largest table ring whose axioms are checked at construction.
DEFAULT_TABLE_BOUND = 64
#: Multiplication tables are cached for rings up to this size.
_TABLE_CACHE_LIMIT = 1024
#: Involution laws are checked exhaustively over pairs up to this many pairs.
_PAIR_CHECK_LIMIT = 2**20


def max_ring_size() -> int:
    """Exhaustive-scan guard; ``GINV_MAX_RING_SIZE`` overrides the default."""
    value = os.environ.get("GINV_MAX_RING_SIZE")
    return int(value) if value else DEFAULT_MAX_RING_SIZE


class Kind(enum.Enum):
    ZMOD = "zmod"
    MATRIX_FIELD = "mat-field"
    MATRIX_ZMOD = "mat-zmod"
    TABLE = "table"


class Involution(enum.Enum):
    IDENTITY = "identity"
    TRANSPOSE = "transpose"
    EXPLICIT_MAP = "explicit"


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class RingDescriptor:
    """Identifies a concrete ring together with its involution.

    ``modulus`` is ``n`` for ``Z_n`` and ``M_d(Z_n)``, ``p`` for ``M_d(GF(p))``
    and ``None`` for ``M_d(Q)``.  Table rings carry their tables as nested
    tuples.
    """

    kind: Kind
    involution: Involution
    modulus: int | None = None
    dim: int | None = None
    add_table: tuple | None = None
    mul_table: tuple | None = None
    star_map: tuple | None = None

    @classmethod
    def zmod(cls, n: int, involution: Involution = Involution.IDENTITY) -> "RingDescriptor":
        return cls(Kind.ZMOD, involution, modulus=n)

    @classmethod
    def matrix_field(cls, dim: int, p: int | None = None,
                     involution: Involution = Involution.TRANSPOSE) -> "RingDescriptor":
        return cls(Kind.MATRIX_FIELD, involution, modulus=p, dim=dim)

    @classmethod
    def matrix_zmod(cls, n: int, dim: int,
                    involution: Involution = Involution.TRANSPOSE) -> "RingDescriptor":
        return cls(Kind.MATRIX_ZMOD, involution, modulus=n, dim=dim)

    @classmethod
    def table(cls, add_table, mul_table, star_map) -> "RingDescriptor":
        freeze = lambda t: tuple(tuple(int(v) for v in row) for row in t)  # noqa: E731
        return cls(Kind.TABLE, Involution.EXPLICIT_MAP, add_table=freeze(add_table),
                   mul_table=freeze(mul_table), star_map=tuple(int(v) for v in star_map))

    def __str__(self) -> str:
        if self.kind is Kind.ZMOD:
            base = f"zmod:{self.modulus}"
        elif self.kind is Kind.MATRIX_FIELD:
            base = f"mat:rat:{self.dim}" if self.modulus is None else f"mat:gf:{self.modulus}:{self.dim}"
        elif self.kind is Kind.MATRIX_ZMOD:
            base = f"mat:zmod:{self.modulus}:{self.dim}"
        else:
            return f"table:{len(self.star_map)}"
        return f"{base}:inv={self.involution.value}"


def parse_descriptor(text: str) -> RingDescriptor:
    """Parse ``zmod:8``, ``mat:rat:2``, ``mat:gf:2:2``, ``mat:zmod:4:2``.

    An optional ``:inv=identity`` or ``:inv=transpose`` suffix selects the
    involution; ``zmod`` defaults to identity and matrices to transpose.
    """
    parts = text.strip().split(":")
    involution = None
    if parts and parts[-1].startswith("inv="):
        name = parts.pop()[4:]
        try:
            involution = Involution(name)
        except ValueError:
            raise MalformedSpec(f"unknown involution {name!r}") from None
    try:
        if parts[0] == "zmod" and len(parts) == 2:
            return RingDescriptor.zmod(int(parts[1]), involution or Involution.IDENTITY)
        if parts[0] == "mat":
            inv = involution or Involution.TRANSPOSE
            if parts[1] == "rat" and len(parts) == 3:
                return RingDescriptor.matrix_field(int(parts[2]), None, inv)
            if parts[1] == "gf" and len(parts) == 4:
                return RingDescriptor.matrix_field(int(parts[3]), int(parts[2]), inv)
            if parts[1] == "zmod" and len(parts) == 4:
                return RingDescriptor.matrix_zmod(int(parts[2]), int(parts[3]), inv)
    except (IndexError, ValueError):
        pass
    raise MalformedSpec(f"cannot parse ring descriptor {text!r}")


class Element:
    """An immutable element of a validated ring, stored in canonical form."""

    __slots__ = ("ring", "payload", "_hash")

    def __init__(self, ring: "Ring", payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)
        object.__setattr__(self, "_hash", hash((ring.descriptor, payload)))

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.ring is not self.ring and other.ring.descriptor != self.ring.descriptor:
            raise RingMismatch(f"{self.ring.descriptor} vs {other.ring.descriptor}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.ring, self.ring._add(self.payload, other.payload))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.ring, self.ring._add(self.payload, self.ring._neg(other.payload)))

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.ring, self.ring._mul(self.payload, other.payload))

    def __neg__(self) -> "Element":
        return Element(self.ring, self.ring._neg(self.payload))

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative powers need an inverse; use Ring.inverse")
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def star(self) -> "Element":
        return Element(self.ring, self.ring._star(self.payload))

    def is_zero(self) -> bool:
        return self.payload == self.ring._zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring.descriptor == other.ring.descriptor and self.payload == other.payload

    def __hash__(self) -> int:
        return self._hash

    def to_json(self):
        return self.ring.encode(self.payload)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Element({self.ring.descriptor}, {render(self)})"


class Ring:
    """Base class for validated ring handles.  Obtain one with :func:`make_ring`."""

    descriptor: RingDescriptor
    is_finite: bool = True
    is_commutative: bool = False

    def __init__(self, descriptor: RingDescriptor):
        self.descriptor = descriptor

    # payload level, implemented by subclasses
    _zero = None
    _one = None

    def _add(self, p, q): raise NotImplementedError
    def _mul(self, p, q): raise NotImplementedError
    def _neg(self, p): raise NotImplementedError
    def _star(self, p): raise NotImplementedError
    def _canon(self, payload): raise NotImplementedError
    def encode(self, payload): raise NotImplementedError

    def decode(self, obj) -> Element:
        return self.element(obj)

    def element(self, value) -> Element:
        """Build an element from a raw value (int, nested list, ``{"idx": k}``)."""
        return Element(self, self._canon(value))

    def zero(self) -> Element:
        return Element(self, self._zero)

    def one(self) -> Element:
        return Element(self, self._one)

    def inverse(self, e: Element) -> Element:
        """Two-sided inverse of a unit; raises NotAUnit."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and other.descriptor == self.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor}>"

    # finite-ring index space
    @property
    def size(self) -> int:
        raise InfiniteRing(f"{self.descriptor} is infinite")

    def require_enumerable(self) -> int:
        """Return the size, or raise if exhaustive scans are not allowed."""
        n = self.size
        if n > max_ring_size():
            raise RingTooLarge(f"{self.descriptor} has {n} elements (limit {max_ring_size()})")
        return n


class FiniteRing(Ring):
    """Shared index-space machinery for finite rings."""

    def index(self, e: Element) -> int:
        raise NotImplementedError

    def at(self, i: int) -> Element:
        raise NotImplementedError

    def elements(self) -> Iterator[Element]:
        self.require_enumerable()
        return (self.at(i) for i in range(self.size))

    def _mul_raw(self, i, j): raise NotImplementedError
    def _add_raw(self, i, j): raise NotImplementedError

    @functools.cached_property
    def _mul_tab(self):
        if self.size > _TABLE_CACHE_LIMIT:
            return None
        r = np.arange(self.size)
        return self._mul_raw(r[:, None], r[None, :])

    @functools.cached_property
    def _add_tab(self):
        if self.size > _TABLE_CACHE_LIMIT:
            return None
        r = np.arange(self.size)
        return self._add_raw(r[:, None], r[None, :])

    def mul_idx(self, i, j):
        t = self._mul_tab
        return t[i, j] if t is not None else self._mul_raw(np.asarray(i), np.asarray(j))

    def add_idx(self, i, j):
        t = self._add_tab
        return t[i, j] if t is not None else self._add_raw(np.asarray(i), np.asarray(j))

    @functools.cached_property
    def star_table(self) -> np.ndarray:
        raise NotImplementedError

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        raise NotImplementedError

    def star_idx(self, i):
        return self.star_table[i]

    def neg_idx(self, i):
        return self.neg_table[i]

    @property
    def zero_idx(self) -> int:
        return self.index(self.zero())

    @property
    def one_idx(self) -> int:
        return self.index(self.one())

    def indices(self) -> np.ndarray:
        return np.arange(self.require_enumerable())

    def inverse(self, e: Element) -> Element:
        i = self.index(e)
        xs = self.indices()
        one = self.one_idx
        hits = np.flatnonzero((self.mul_idx(i, xs) == one) & (self.mul_idx(xs, i) == one))
        if hits.size == 0:
            raise NotAUnit(f"{render(e)} is not a unit")
        return self.at(int(hits[0]))


class ZModRing(FiniteRing):
    is_commutative = True

    def __init__(self, descriptor):
        super().__init__(descriptor)
        self.n = descriptor.modulus
        self._zero = 0
        self._one = 1 % self.n

    @property
    def size(self):
        return self.n

    def _canon(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise MalformedSpec(f"Z_{self.n} elements are integers, got {value!r}")
        return int(value) % self.n

    def _add(self, p, q): return (p + q) % self.n
    def _mul(self, p, q): return (p * q) % self.n
    def _neg(self, p): return (-p) % self.n
    def _star(self, p): return p

    def encode(self, payload):
        return payload

    def index(self, e):
        return e.payload

    def at(self, i):
        return Element(self, int(i))

    def _mul_raw(self, i, j):
        return (np.asarray(i, dtype=np.int64) * j) % self.n

    def _add_raw(self, i, j):
        return (np.asarray(i, dtype=np.int64) + j) % self.n

    @functools.cached_property
    def star_table(self):
        return np.arange(self.n)

    @functools.cached_property
    def neg_table(self):
        return (-np.arange(self.n)) % self.n


class _Residues:
    """Coefficient arithmetic for Z_n (not a field)."""

    def __init__(self, n):
        self.n = n
        self.characteristic = n

    def canon(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise MalformedSpec(f"Z_{self.n} entries are integers, got {x!r}")
        return int(x) % self.n


class MatrixRing(Ring):
    """Square d x d matrices over Q, GF(p) or Z_n."""

    def __init__(self, descriptor, coef):
        super().__init__(descriptor)
        self.dim = descriptor.dim
        self.coef = coef
        d = self.dim
        self._zero = tuple(tuple(coef.canon(0) for _ in range(d)) for _ in range(d))
        self._one = tuple(tuple(coef.canon(int(i == j)) for j in range(d)) for i in range(d))
        self.is_commutative = d == 1

    def _canon(self, value):
        d = self.dim
        if isinstance(value, FieldMatrix):
            value = value.rows
        if isinstance(value, np.ndarray):
            value = value.tolist()
        if not isinstance(value, (list, tuple)) or len(value) != d or any(
            not isinstance(r, (list, tuple)) or len(r) != d for r in value
        ):
            raise MalformedSpec(f"expected a {d}x{d} matrix, got {value!r}")
        return tuple(tuple(self.coef.canon(v) for v in r) for r in value)

    def _add(self, p, q):
        c = self.coef.canon
        return tuple(tuple(c(a + b) for a, b in zip(r, s)) for r, s in zip(p, q))

    def _mul(self, p, q):
        c = self.coef.canon
        cols = tuple(zip(*q))
        return tuple(tuple(c(sum(a * b for a, b in zip(r, col))) for col in cols) for r in p)

    def _neg(self, p):
        c = self.coef.canon
        return tuple(tuple(c(-a) for a in r) for r in p)

    def _star(self, p):
        return tuple(zip(*p))

    def encode(self, payload):
        return [[_encode_scalar(v) for v in r] for r in payload]

    def to_field_matrix(self, e: Element) -> "FieldMatrix":
        return FieldMatrix(self.coef, e.payload)


FieldMatrix = linalg.FieldMatrix


def _encode_scalar(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return int(v)


class RationalMatrixRing(MatrixRing):
    is_finite = False

    def __init__(self, descriptor):
        super().__init__(descriptor, linalg.QQ)

    def inverse(self, e):
        return Element(self, linalg.invert_unit(self.to_field_matrix(e)).rows)


class FiniteMatrixRing(MatrixRing, FiniteRing):
    """M_d over GF(p) or Z_n; elements are numbered as base-n digit strings."""

    def __init__(self, descriptor, coef):
        MatrixRing.__init__(self, descriptor, coef)
        self.n = coef.characteristic
        self._digits = self.dim * self.dim
        self._weights = self.n ** np.arange(self._digits - 1, -1, -1, dtype=np.int64)

    @property
    def size(self):
        return self.n ** self._digits

    def index(self, e):
        i = 0
        for r in e.payload:
            for v in r:
                i = i * self.n + v
        return i

    def at(self, i):
        i = int(i)
        digits = []
        for _ in range(self._digits):
            i, v = divmod(i, self.n)
            digits.append(v)
        digits.reverse()
        d = self.dim
        return Element(self, tuple(tuple(digits[r * d:(r + 1) * d]) for r in range(d)))

    @functools.cached_property
    def _payloads(self) -> np.ndarray:
        self.require_enumerable()
        idx = np.arange(self.size, dtype=np.int64)
        digits = (idx[:, None] // self._weights[None, :]) % self.n
        return digits.reshape(self.size, self.dim, self.dim)

    def _encode_arr(self, mats):
        flat = mats.reshape(mats.shape[:-2] + (self._digits,))
        return flat @ self._weights

    def _mul_raw(self, i, j):
        p = self._payloads
        return self._encode_arr((p[i] @ p[j]) % self.n)

    def _add_raw(self, i, j):
        p = self._payloads
        return self._encode_arr((p[i] + p[j]) % self.n)

    @functools.cached_property
    def star_table(self):
        return self._encode_arr(np.swapaxes(self._payloads, -1, -2))

    @functools.cached_property
    def neg_table(self):
        return self._encode_arr((-self._payloads) % self.n)

    def inverse(self, e):
        if isinstance(self.coef, linalg.PrimeField):
            return Element(self, linalg.invert_unit(self.to_field_matrix(e)).rows)
        return FiniteRing.inverse(self, e)


class TableRing(FiniteRing):
    def __init__(self, descriptor):
        super().__init__(descriptor)
        self.add_t = np.array(descriptor.add_table, dtype=np.int64)
        self.mul_t = np.array(descriptor.mul_table, dtype=np.int64)
        self.star_t = np.array(descriptor.star_map, dtype=np.int64)
        n = len(self.star_t)
        r = np.arange(n)
        zeros = [z for z in range(n) if np.array_equal(self.add_t[z], r)]
        ones = [u for u in range(n) if np.array_equal(self.mul_t[u], r)
                and np.array_equal(self.mul_t[:, u], r)]
        if not zeros or not ones:
            raise MalformedSpec("table ring needs additive and multiplicative identities")
        self._zero, self._one = zeros[0], ones[0]
        self.is_commutative = bool(np.array_equal(self.mul_t, self.mul_t.T))

    @property
    def size(self):
        return len(self.star_t)

    def _canon(self, value):
        if isinstance(value, dict) and set(value) == {"idx"}:
            value = value["idx"]
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)) \
                or not 0 <= value < self.size:
            raise MalformedSpec(f"table element must be an index in [0, {self.size})")
        return int(value)

    def _add(self, p, q): return int(self.add_t[p, q])
    def _mul(self, p, q): return int(self.mul_t[p, q])
    def _neg(self, p): return int(self.neg_table[p])
    def _star(self, p): return int(self.star_t[p])

    def encode(self, payload):
        return {"idx": payload}

    def index(self, e):
        return e.payload

    def at(self, i):
        return Element(self, int(i))

    def _mul_raw(self, i, j):
        return self.mul_t[i, j]

    def _add_raw(self, i, j):
        return self.add_t[i, j]

    @functools.cached_property
    def star_table(self):
        return self.star_t

    @functools.cached_property
    def neg_table(self):
        return np.argmax(self.add_t == self._zero, axis=1)


def _validate_table_axioms(ring: TableRing, bound: int) -> None:
    n = ring.size
    if n > bound:
        raise MalformedSpec(f"table ring of size {n} exceeds validation bound {bound}")
    A, M, r = ring.add_t, ring.mul_t, np.arange(n)
    for t in (A, M):
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise MalformedSpec("tables must be size x size with entries in range")
    if ring.star_t.min() < 0 or ring.star_t.max() >= n:
        raise MalformedSpec("star map entries out of range")
    i, j, k = r[:, None, None], r[None, :, None], r[None, None, :]
    checks = {
        "addition is commutative": np.array_equal(A, A.T),
        "addition is associative": np.array_equal(A[A[i, j], k], A[i, A[j, k]]),
        "every element has a negative": bool((A == ring._zero).any(axis=1).all()),
        "multiplication is associative": np.array_equal(M[M[i, j], k], M[i, M[j, k]]),
        "left distributivity": np.array_equal(M[i, A[j, k]], A[M[i, j], M[i, k]]),
        "right distributivity": np.array_equal(M[A[i, j], k], A[M[i, k], M[j, k]]),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise MalformedSpec("table ring axioms fail: " + ", ".join(failed))


def _check_involution(ring: FiniteRing) -> None:
    n = ring.size
    s = ring.star_table
    r = np.arange(n)
    if not np.array_equal(s[s], r):
        raise InvolutionInvalid("(x*)* = x fails")
    if n * n <= _PAIR_CHECK_LIMIT:
        i, j = r[:, None], r[None, :]
        if not np.array_equal(s[ring.add_idx(i, j)], ring.add_idx(s[i], s[j])):
            raise InvolutionInvalid("(x+y)* = x*+y* fails")
        if not np.array_equal(s[ring.mul_idx(i, j)], ring.mul_idx(s[j], s[i])):
            raise InvolutionInvalid("(xy)* = y*x* fails")


def make_ring(spec: RingDescriptor | str, *, table_bound: int = DEFAULT_TABLE_BOUND) -> Ring:
    """Validate a descriptor and return a ring handle.

    Handles are cached, so repeated calls with equal descriptors return the
    same object (and share its lookup tables).
    """
    if isinstance(spec, str):
        spec = parse_descriptor(spec)
    return _make_ring(spec, table_bound, max_ring_size())


@functools.lru_cache(maxsize=None)
def _make_ring(spec: RingDescriptor, table_bound: int, size_limit: int) -> Ring:
    kind, inv = spec.kind, spec.involution

    if kind is Kind.ZMOD:
        if not isinstance(spec.modulus, int) or spec.modulus < 2:
            raise MalformedSpec("Z_n needs n >= 2")
        if inv is not Involution.IDENTITY:
            raise MalformedSpec("Z_n only carries the identity involution")
        return ZModRing(spec)

    if kind in (Kind.MATRIX_FIELD, Kind.MATRIX_ZMOD):
        if not isinstance(spec.dim, int) or spec.dim < 1:
            raise MalformedSpec("matrix dimension must be positive")
        if inv is Involution.EXPLICIT_MAP:
            raise MalformedSpec("matrix rings take transpose or identity")
        if kind is Kind.MATRIX_FIELD:
            ring = (RationalMatrixRing(spec) if spec.modulus is None
                    else FiniteMatrixRing(spec, linalg.PrimeField(spec.modulus)))
        else:
            if not isinstance(spec.modulus, int) or spec.modulus < 2:
                raise MalformedSpec("M_d(Z_n) needs n >= 2")
            ring = FiniteMatrixRing(spec, _Residues(spec.modulus))
            if ring.size > max_ring_size():
                raise RingTooLarge(
                    f"M_{spec.dim}(Z_{spec.modulus}) has {spec.modulus}^{spec.dim**2} "
                    f"elements; the limit is {max_ring_size()}")
        if inv is Involution.IDENTITY and spec.dim > 1:
            raise NotCommutative(f"{spec}: matrix multiplication is not commutative")
        if ring.is_finite and ring.size <= max_ring_size():
            _check_involution(ring)
        return ring

    if kind is Kind.TABLE:
        if inv is not Involution.EXPLICIT_MAP:
            raise MalformedSpec("table rings carry an explicit star map")
        try:
            ring = TableRing(spec)
        except (ValueError, IndexError) as exc:
            raise MalformedSpec(str(exc)) from exc
        _validate_table_axioms(ring, table_bound)
        _check_involution(ring)
        return ring

    raise MalformedSpec(f"unknown ring kind {kind!r}")


# module-level ring operations ------------------------------------------------

def _same(x: Element, y: Element) -> None:
    x._check(y)


def add(x: Element, y: Element) -> Element:
    return x + y


def mul(x: Element, y: Element) -> Element:
    return x * y


def neg(x: Element) -> Element:
    return -x


def star(x: Element) -> Element:
    return x.star()


def zero(ring: Ring) -> Element:
    return ring.zero()


def one(ring: Ring) -> Element:
    return ring.one()


def render(e: Element) -> str:
    return json.dumps(e.to_json(), separators=(",", ":"))


def parse(ring: Ring, text: str) -> Element:
    return ring.decode(json.loads(text))


class Membership(NamedTuple):
    holds: bool
    witness: Element | None

    def __bool__(self):
        return self.holds


def in_principal_ideal(x: Element, a: Element, side: Side) -> Membership:
    """Is ``x`` in ``aR`` (RIGHT) or ``Ra`` (LEFT)?

    Field matrix rings solve a linear system; every other ring scans in
    canonical order and returns the first witness.
    """
    _same(x, a)
    ring = a.ring
    if isinstance(ring, MatrixRing) and isinstance(ring.coef, linalg.FIELDS):
        am, xm = ring.to_field_matrix(a), ring.to_field_matrix(x)
        try:
            w = linalg.solve_right(am, xm) if side is Side.RIGHT else linalg.solve_left(am, xm)
        except NoSolution:
            return Membership(False, None)
        return Membership(True, Element(ring, w.rows))
    ai, xi, ws = ring.index(a), ring.index(x), ring.indices()
    prods = ring.mul_idx(ai, ws) if side is Side.RIGHT else ring.mul_idx(ws, ai)
    hits = np.flatnonzero(prods == xi)
    if hits.size == 0:
        return Membership(False, None)
    return Membership(True, ring.at(int(hits[0])))


def annihilator(a: Element, side: Side) -> list[Element]:
    """RIGHT: ``{x : ax = 0}``; LEFT: ``{x : xa = 0}``.  Finite rings only."""
    ring = a.ring
    if not ring.is_finite:
        raise InfiniteRing(f"{ring.descriptor} is infinite")
    ai, xs = ring.index(a), ring.indices()
    prods = ring.mul_idx(ai, xs) if side is Side.RIGHT else ring.mul_idx(xs, ai)
    return [ring.at(int(i)) for i in np.flatnonzero(prods == ring.zero_idx)]


def canonical_key(e: Element):
    """Sort key realizing canonical enumeration order on finite rings."""
    return e.ring.index(e)
