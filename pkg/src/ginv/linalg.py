"""Exact linear algebra over the rationals and prime fields.

Everything here is tolerance free: rationals are :class:`fractions.Fraction`
and GF(p) scalars are residues in ``[0, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import MalformedSpec, NoSolution, NotAUnit, ShapeMismatch


class RationalField:
    name = "rat"
    characteristic = 0

    def canon(self, x) -> Fraction:
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, float):
            raise MalformedSpec("floating point scalars are not exact")
        return Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rat")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise MalformedSpec(f"GF({p}): modulus must be prime")
        self.p = p
        self.characteristic = p
        self.name = f"gf:{p}"

    def canon(self, x) -> int:
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise MalformedSpec(f"{x} is not defined in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, float):
            raise MalformedSpec("floating point scalars are not exact")
        return int(x) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(int(x), -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
FIELDS = (RationalField, PrimeField)


def GF(p: int) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class FieldMatrix:
    """A dense matrix with canonical entries in ``field``."""

    field: RationalField | PrimeField
    rows: tuple

    @classmethod
    def from_rows(cls, field, rows: Sequence[Sequence]) -> "FieldMatrix":
        rows = tuple(tuple(field.canon(v) for v in r) for r in rows)
        if not rows or not rows[0] or len({len(r) for r in rows}) != 1:
            raise ShapeMismatch("matrix must be a non-empty rectangle")
        return cls(field, rows)

    @classmethod
    def identity(cls, field, n: int) -> "FieldMatrix":
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, m: int, n: int) -> "FieldMatrix":
        return cls.from_rows(field, [[0] * n for _ in range(m)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def T(self) -> "FieldMatrix":
        return FieldMatrix(self.field, tuple(zip(*self.rows)))

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.shape[1] != other.shape[0]:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        f = self.field.canon
        return FieldMatrix(
            self.field,
            tuple(tuple(f(sum(a * b for a, b in zip(r, c))) for c in cols) for r in self.rows),
        )

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        f = self.field.canon
        return FieldMatrix(
            self.field,
            tuple(tuple(f(a + b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> "FieldMatrix":
        f = self.field.canon
        return FieldMatrix(self.field, tuple(tuple(f(-a) for a in r) for r in self.rows))

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        return self + (-other)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]


class RREF(NamedTuple):
    matrix: FieldMatrix
    pivots: tuple[int, ...]
    rank: int


def _reduce(field, rows: list[list], ncols: int) -> tuple[int, ...]:
    """In-place Gauss-Jordan reduction of ``rows`` on the first ``ncols`` columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.canon(v * inv) for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                fac = rows[i][c]
                rows[i] = [field.canon(v - fac * w) for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(pivots)


def rref(m: FieldMatrix) -> RREF:
    rows = [list(r) for r in m.rows]
    pivots = _reduce(m.field, rows, m.shape[1])
    return RREF(FieldMatrix(m.field, tuple(tuple(r) for r in rows)), pivots, len(pivots))


def rank(m: FieldMatrix) -> int:
    return rref(m).rank


def _rref_with_transform(m: FieldMatrix):
    """Return (E, pivots) with E invertible and E @ m in reduced row-echelon form."""
    rows_n, cols_n = m.shape
    eye = FieldMatrix.identity(m.field, rows_n).rows
    aug = [list(r) + list(e) for r, e in zip(m.rows, eye)]
    pivots = _reduce(m.field, aug, cols_n)
    e = FieldMatrix(m.field, tuple(tuple(r[cols_n:]) for r in aug))
    return e, pivots


def solve_right(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Find X with ``a @ X == b``; free variables are set to zero."""
    if a.field != b.field or a.shape[0] != b.shape[0]:
        raise ShapeMismatch(f"solve_right: {a.shape} vs {b.shape}")
    n = a.shape[1]
    aug = [list(r) + list(s) for r, s in zip(a.rows, b.rows)]
    pivots = _reduce(a.field, aug, n + b.shape[1])
    if any(p >= n for p in pivots):
        raise NoSolution("right-hand side is not in the column space")
    x = [[a.field.canon(0)] * b.shape[1] for _ in range(n)]
    for i, c in enumerate(pivots):
        x[c] = aug[i][n:]
    return FieldMatrix(a.field, tuple(tuple(r) for r in x))


def solve_left(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Find X with ``X @ a == b``."""
    if a.field != b.field or a.shape[1] != b.shape[1]:
        raise ShapeMismatch(f"solve_left: {a.shape} vs {b.shape}")
    return solve_right(a.T, b.T).T


def invert_unit(m: FieldMatrix) -> FieldMatrix:
    if m.shape[0] != m.shape[1]:
        raise ShapeMismatch("only square matrices can be units")
    e, pivots = _rref_with_transform(m)
    if len(pivots) < m.shape[0]:
        raise NotAUnit(f"rank {len(pivots)} < {m.shape[0]}")
    return e


def one_inverse(a: FieldMatrix) -> FieldMatrix:
    """An inner inverse g with ``a @ g @ a == a``.

    With ``E @ a`` in reduced form and pivot columns c_i, the matrix P that
    sends e_i to e_{c_i} gives g = P @ E.
    """
    e, pivots = _rref_with_transform(a)
    m, n = a.shape
    z = a.field.canon(0)
    p = [[z] * m for _ in range(n)]
    for i, c in enumerate(pivots):
        p[c][i] = a.field.canon(1)
    return FieldMatrix(a.field, tuple(tuple(r) for r in p)) @ e
