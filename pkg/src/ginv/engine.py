"""Group, {1,3}, {1,4}, core and dual core inverses.

Each inverse is computed by a constructive formula and re-verified against
its defining equations before it is returned.  Several independent routes to
the core inverse are provided (through group and {1,3}-inverses, through a
unit, through one-sided equations, and through unit decompositions); they are
required to agree and any disagreement raises :class:`ConsistencyError`.

Matrix rings over a field (Q or GF(p)) use exact linear algebra; all other
rings are finite and are searched in canonical enumeration order.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    ConsistencyError,
    InfiniteRing,
    NoSolution,
    NotAUnit,
    Not13Invertible,
    Not14Invertible,
    NotCoreInvertible,
    NotDualCoreInvertible,
    NotGroupInvertible,
    NotInvertible,
    NotRegular,
    PreconditionViolated,
    UnsupportedForm,
)
from .rings import Element, MatrixRing, Side, in_principal_ideal


class InverseKind(enum.Enum):
    INNER = "inner"
    GROUP = "group"
    ONE_THREE = "one-three"
    ONE_FOUR = "one-four"
    CORE = "core"
    DUAL_CORE = "dual-core"


class Form(enum.Enum):
    DEFINITIONAL = "definitional"
    FIVE_EQ = "five-eq"
    THREE_EQ = "three-eq"


class LeftEquations(enum.Enum):
    """Which one-sided system :func:`core_from_left_equations` is given.

    OUTER: ``bab = b, (ab)* = ab, ba^2 = a`` together with ``a in a^2R``.
    INNER: ``aba = a, (ab)* = ab, ba^2 = a``.
    """

    OUTER = "outer"
    INNER = "inner"


@dataclass(frozen=True)
class Equation:
    label: str
    lhs: Element | None
    rhs: Element | None
    holds: bool

    def to_json(self):
        enc = lambda e: None if e is None else e.to_json()  # noqa: E731
        return {"label": self.label, "lhs": enc(self.lhs), "rhs": enc(self.rhs),
                "holds": self.holds}


@dataclass(frozen=True)
class InverseCertificate:
    kind: InverseKind
    form: Form
    subject: Element
    witness: Element
    equations: tuple[Equation, ...]

    @property
    def valid(self) -> bool:
        return all(eq.holds for eq in self.equations)

    @property
    def labels(self) -> list[str]:
        return [eq.label for eq in self.equations]

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "form": self.form.value,
            "subject": self.subject.to_json(),
            "witness": self.witness.to_json(),
            "equations": [eq.to_json() for eq in self.equations],
            "valid": self.valid,
        }

    @classmethod
    def from_json(cls, ring, obj: dict) -> "InverseCertificate":
        """Rebuild a certificate by re-verifying its subject and witness.

        The stored equation list and validity flag are ignored: validity is
        always recomputed from ``(subject, witness)``.
        """
        return verify(InverseKind(obj["kind"]), ring.decode(obj["subject"]),
                      ring.decode(obj["witness"]), Form(obj["form"]))


@dataclass(frozen=True)
class DecompositionWitness:
    """Unit decompositions ``1 = a x1 + u1 = x2 a* + u2 = a y1 + v1 = y2 a + v2``.

    with ``a* u1 = 0``, ``u2 a = 0``, ``a v1 = 0`` and ``v2 a = 0``.
    """

    x1: Element
    x2: Element
    y1: Element
    y2: Element
    u1: Element
    u2: Element
    v1: Element
    v2: Element

    def failures(self, a: Element) -> list[str]:
        one = a.ring.one()
        s = a.star()
        checks = {
            "1=ax1+u1": a * self.x1 + self.u1 == one,
            "a*u1=0": (s * self.u1).is_zero(),
            "1=x2a*+u2": self.x2 * s + self.u2 == one,
            "u2a=0": (self.u2 * a).is_zero(),
            "1=ay1+v1": a * self.y1 + self.v1 == one,
            "av1=0": (a * self.v1).is_zero(),
            "1=y2a+v2": self.y2 * a + self.v2 == one,
            "v2a=0": (self.v2 * a).is_zero(),
        }
        return [k for k, ok in checks.items() if not ok]


# helpers --------------------------------------------------------------------

def _uses_linalg(ring) -> bool:
    return isinstance(ring, MatrixRing) and isinstance(ring.coef, linalg.FIELDS)


def _fm(e: Element) -> linalg.FieldMatrix:
    return e.ring.to_field_matrix(e)


def _first(ring, mask) -> Element | None:
    hits = np.flatnonzero(mask)
    return ring.at(int(hits[0])) if hits.size else None


def _require(checks: dict) -> None:
    failed = [label for label, ok in checks.items() if not ok]
    if failed:
        raise PreconditionViolated(failed)


def _memo(fn):
    """Cache results (and nonexistence errors) per element."""
    cache = {}

    @functools.wraps(fn)
    def wrapper(a):
        try:
            ok, value = cache[a]
        except KeyError:
            try:
                ok, value = True, fn(a)
            except NotInvertible as exc:
                ok, value = False, exc
            cache[a] = ok, value
        if ok:
            return value
        raise value.with_traceback(None)

    wrapper.cache_clear = cache.clear
    return wrapper


def _equal(x: Element, y: Element, what: str) -> None:
    if x != y:
        raise ConsistencyError(f"{what}: {x} != {y}")


# certificates -----------------------------------------------------------------

def _eq(label, lhs, rhs) -> Equation:
    return Equation(label, lhs, rhs, lhs == rhs)


def _member(label, x, a, side) -> Equation:
    m = in_principal_ideal(x, a, side)
    if not m.holds:
        return Equation(label, x, None, False)
    rhs = a * m.witness if side is Side.RIGHT else m.witness * a
    return Equation(label, x, rhs, rhs == x)


def _equations(kind: InverseKind, a: Element, x: Element, form: Form) -> list[Equation]:
    s = a.star()
    ax, xa = a * x, x * a
    inner = _eq("axa=a", ax * a, a)
    if form is Form.DEFINITIONAL:
        if kind is InverseKind.INNER:
            return [inner]
        if kind is InverseKind.GROUP:
            return [inner, _eq("xax=x", xa * x, x), _eq("ax=xa", ax, xa)]
        if kind is InverseKind.ONE_THREE:
            return [inner, _eq("(ax)*=ax", ax.star(), ax)]
        if kind is InverseKind.ONE_FOUR:
            return [inner, _eq("(xa)*=xa", xa.star(), xa)]
        if kind is InverseKind.CORE:
            return [inner, _member("x in aR", x, a, Side.RIGHT),
                    _member("a in xR", a, x, Side.RIGHT),
                    _member("x in Ra*", x, s, Side.LEFT),
                    _member("a* in Rx", s, x, Side.LEFT)]
        return [inner, _member("x in a*R", x, s, Side.RIGHT),
                _member("a* in xR", s, x, Side.RIGHT),
                _member("x in Ra", x, a, Side.LEFT),
                _member("a in Rx", a, x, Side.LEFT)]
    if kind not in (InverseKind.CORE, InverseKind.DUAL_CORE):
        raise UnsupportedForm(f"{form.value} is only defined for core and dual core inverses")
    if kind is InverseKind.CORE:
        three = [_eq("(ax)*=ax", ax.star(), ax), _eq("xa^2=a", xa * a, a),
                 _eq("ax^2=x", ax * x, x)]
    else:
        three = [_eq("(xa)*=xa", xa.star(), xa), _eq("a^2x=a", a * ax, a),
                 _eq("x^2a=x", x * xa, x)]
    if form is Form.THREE_EQ:
        return three
    return [inner, _eq("xax=x", xa * x, x)] + three


def verify(kind: InverseKind, a: Element, x: Element, form: Form = Form.DEFINITIONAL
           ) -> InverseCertificate:
    """Check whether ``x`` is an inverse of ``a`` of the given kind.

    ``form`` chooses the characterization: DEFINITIONAL uses the defining
    equations (and, for core/dual core, the principal-ideal conditions);
    FIVE_EQ and THREE_EQ are the equational characterizations of the core
    and dual core inverse.
    """
    a._check(x)
    kind, form = InverseKind(kind), Form(form)
    return InverseCertificate(kind, form, a, x, tuple(_equations(kind, a, x, form)))


# single-element inverses ------------------------------------------------------

@_memo
def inner_inverse(a: Element) -> Element:
    """An inner inverse; RREF based for field matrices, first-in-order otherwise."""
    ring = a.ring
    if _uses_linalg(ring):
        return ring.element(linalg.one_inverse(_fm(a)).rows)
    ai, xs = ring.index(a), ring.indices()
    g = _first(ring, ring.mul_idx(ring.mul_idx(ai, xs), ai) == ai)
    if g is None:
        raise NotRegular(f"{a} has no inner inverse")
    return g


@_memo
def group_inverse(a: Element) -> Element:
    """``a^#`` as ``u^-2 a`` with ``u = a^2 a^- + 1 - a a^-``."""
    ring = a.ring
    one = ring.one()
    try:
        g = inner_inverse(a)
    except NotRegular:
        raise NotGroupInvertible(f"{a} is not regular") from None
    u = a * a * g + one - a * g
    try:
        u_inv = ring.inverse(u)
    except NotAUnit:
        raise NotGroupInvertible(f"{a}: a^2a^- + 1 - aa^- is not a unit") from None
    result = u_inv * u_inv * a
    v = g * a * a + one - g * a
    try:
        v_inv = ring.inverse(v)
    except NotAUnit:
        raise ConsistencyError(f"{a}: u is a unit but v is not") from None
    _equal(result, a * v_inv * v_inv, "u^-2 a vs a v^-2")
    if not verify(InverseKind.GROUP, a, result).valid:
        raise ConsistencyError(f"group inverse of {a} fails its equations")
    return result


@_memo
def one_three_inverse(a: Element) -> Element:
    """A {1,3}-inverse.

    Field matrices: the canonical solution y of ``(a* a) y = a*``; such a y
    exists exactly when ``a`` lies in ``R a* a``.  Finite rings: the first x in
    canonical order with ``axa = a`` and ``(ax)* = ax``.
    """
    ring = a.ring
    if _uses_linalg(ring):
        s = a.star()
        try:
            y = linalg.solve_right(_fm(s * a), _fm(s))
        except NoSolution:
            raise Not13Invertible(f"{a} is not in R a*a") from None
        x = ring.element(y.rows)
    else:
        ai, xs = ring.index(a), ring.indices()
        ax = ring.mul_idx(ai, xs)
        x = _first(ring, (ring.mul_idx(ax, ai) == ai) & (ring.star_idx(ax) == ax))
        if x is None:
            raise Not13Invertible(f"{a} has no {{1,3}}-inverse")
    if not verify(InverseKind.ONE_THREE, a, x).valid:
        raise ConsistencyError(f"{{1,3}}-inverse of {a} fails its equations")
    return x


@_memo
def one_four_inverse(a: Element) -> Element:
    """A {1,4}-inverse: ``x`` is one for ``a`` iff ``x*`` is a {1,3}-inverse of ``a*``."""
    try:
        x = one_three_inverse(a.star()).star()
    except Not13Invertible:
        raise Not14Invertible(f"{a} has no {{1,4}}-inverse") from None
    if not verify(InverseKind.ONE_FOUR, a, x).valid:
        raise ConsistencyError(f"{{1,4}}-inverse of {a} fails its equations")
    return x


@_memo
def core_inverse(a: Element) -> Element:
    """``a^# a a^(1,3)``; exists exactly when both factors do."""
    failed = []
    try:
        g = group_inverse(a)
    except NotGroupInvertible:
        failed.append("NotGroupInvertible")
    try:
        t = one_three_inverse(a)
    except Not13Invertible:
        failed.append("Not13Invertible")
    if failed:
        raise NotCoreInvertible(failed[0], failed)
    x = g * a * t
    if not verify(InverseKind.CORE, a, x, Form.FIVE_EQ).valid:
        raise ConsistencyError(f"core inverse of {a} fails the five equations")
    return x


@_memo
def dual_core_inverse(a: Element) -> Element:
    """``a^(1,4) a a^#``, cross-checked against ``((a*)^core)*``."""
    failed = []
    try:
        g = group_inverse(a)
    except NotGroupInvertible:
        failed.append("NotGroupInvertible")
    try:
        t = one_four_inverse(a)
    except Not14Invertible:
        failed.append("Not14Invertible")
    if failed:
        raise NotDualCoreInvertible(failed[0], failed)
    x = t * a * g
    if not verify(InverseKind.DUAL_CORE, a, x, Form.FIVE_EQ).valid:
        raise ConsistencyError(f"dual core inverse of {a} fails the five equations")
    try:
        transported = core_inverse(a.star()).star()
    except NotCoreInvertible:
        raise ConsistencyError(f"{a} is dual core invertible but a* is not core invertible")
    _equal(x, transported, "dual core vs star-transported core")
    return x


COMPUTE = {
    InverseKind.INNER: inner_inverse,
    InverseKind.GROUP: group_inverse,
    InverseKind.ONE_THREE: one_three_inverse,
    InverseKind.ONE_FOUR: one_four_inverse,
    InverseKind.CORE: core_inverse,
    InverseKind.DUAL_CORE: dual_core_inverse,
}


def compute(kind: InverseKind, a: Element) -> Element:
    return COMPUTE[InverseKind(kind)](a)


def clear_caches() -> None:
    for fn in COMPUTE.values():
        fn.cache_clear()


def _try(fn, a):
    try:
        return fn(a)
    except NotInvertible:
        return None


# {1,3} and {1,4} families --------------------------------------------------

def one_three_family(a: Element, r: Element, u: Element, w: Element) -> Element:
    """``r + (1 - ra) w`` for a decomposition ``1 = ar + u`` with ``a* u = 0``."""
    one = a.ring.one()
    _require({"1=ar+u": a * r + u == one, "a*u=0": (a.star() * u).is_zero()})
    return r + (one - r * a) * w


def one_four_family(a: Element, s: Element, v: Element, w: Element) -> Element:
    """``s + w (1 - as)`` for a decomposition ``1 = sa + v`` with ``v a* = 0``."""
    one = a.ring.one()
    _require({"1=sa+v": s * a + v == one, "va*=0": (v * a.star()).is_zero()})
    return s + w * (one - a * s)


def _finite(ring):
    if not ring.is_finite:
        raise InfiniteRing(f"{ring.descriptor} is infinite")
    return ring.indices()


def one_three_set(a: Element) -> list[Element]:
    """All {1,3}-inverses of ``a`` as the family generated by one of them."""
    ring = a.ring
    ws = _finite(ring)
    r = ring.index(one_three_inverse(a))
    c = ring.add_idx(ring.one_idx, ring.neg_idx(ring.mul_idx(r, ring.index(a))))
    out = np.unique(ring.add_idx(r, ring.mul_idx(c, ws)))
    return [ring.at(int(i)) for i in out]


def one_four_set(a: Element) -> list[Element]:
    """All {1,4}-inverses of ``a``: ``{s + w (1 - as)}``."""
    ring = a.ring
    ws = _finite(ring)
    s = ring.index(one_four_inverse(a))
    c = ring.add_idx(ring.one_idx, ring.neg_idx(ring.mul_idx(ring.index(a), s)))
    out = np.unique(ring.add_idx(s, ring.mul_idx(ws, c)))
    return [ring.at(int(i)) for i in out]


# alternative routes to the core inverse --------------------------------------------

def core_via_unit(a: Element, b: Element) -> Element:
    """``(a + 1 - ab)^-1 ab`` under ``aba = a, (ab)* = ab, ab^2 = b, a in Ra^2``."""
    ring = a.ring
    ab = a * b
    _require({
        "aba=a": ab * a == a,
        "(ab)*=ab": ab.star() == ab,
        "ab^2=b": ab * b == b,
        "a in Ra^2": in_principal_ideal(a, a * a, Side.LEFT).holds,
    })
    try:
        u_inv = ring.inverse(a + ring.one() - ab)
    except NotAUnit:
        raise ConsistencyError(f"a + 1 - ab is not a unit for a = {a}") from None
    result = u_inv * ab
    _equal(result, b, "(a+1-ab)^-1 ab vs b")
    try:
        _equal(result, core_inverse(a), "(a+1-ab)^-1 ab vs core inverse")
    except NotCoreInvertible as exc:
        raise ConsistencyError(f"hypotheses hold but {a} is not core invertible") from exc
    return result


def core_from_left_equations(a: Element, b: Element,
                             variant: LeftEquations = LeftEquations.OUTER) -> Element:
    """Core inverse from a one-sided system.

    OUTER returns ``b`` itself, INNER returns ``bab``.  Both results are
    compared with :func:`core_inverse`.
    """
    variant = LeftEquations(variant)
    ab = a * b
    common = {"(ab)*=ab": ab.star() == ab, "ba^2=a": b * a * a == a}
    if variant is LeftEquations.OUTER:
        _require({"bab=b": b * a * b == b, **common,
                  "a in a^2R": in_principal_ideal(a, a * a, Side.RIGHT).holds})
        result = b
    else:
        _require({"aba=a": ab * a == a, **common})
        result = b * a * b
    try:
        _equal(result, core_inverse(a), f"{variant.value} left equations vs core inverse")
    except NotCoreInvertible as exc:
        raise ConsistencyError(f"left equations hold but {a} is not core invertible") from exc
    return result


def decomposition_witness(a: Element) -> DecompositionWitness:
    """Find unit decompositions of ``a``.

    Finite rings: each coordinate is the first solution in canonical order,
    searched in the order y1, y2, x1, x2.  Field matrices: built from the
    group and {1,3}-inverses.  Raises PreconditionViolated naming the first
    decomposition that has no solution.
    """
    ring = a.ring
    one = ring.one()
    s = a.star()
    if _uses_linalg(ring):
        g = _try(group_inverse, a)
        if g is None:
            raise PreconditionViolated(["1=ay1+v1"])
        t = _try(one_three_inverse, a)
        if t is None:
            raise PreconditionViolated(["1=ax1+u1"])
        x1, x2, y1, y2 = t, t.star(), g, g
    else:
        ws = ring.indices()
        ai, si, o, z = ring.index(a), ring.index(s), ring.one_idx, ring.zero_idx
        minus = lambda arr: ring.add_idx(o, ring.neg_idx(arr))  # noqa: E731
        y1 = _first(ring, ring.mul_idx(ai, minus(ring.mul_idx(ai, ws))) == z)
        if y1 is None:
            raise PreconditionViolated(["1=ay1+v1"])
        y2 = _first(ring, ring.mul_idx(minus(ring.mul_idx(ws, ai)), ai) == z)
        if y2 is None:
            raise PreconditionViolated(["1=y2a+v2"])
        x1 = _first(ring, ring.mul_idx(si, minus(ring.mul_idx(ai, ws))) == z)
        if x1 is None:
            raise PreconditionViolated(["1=ax1+u1"])
        x2 = _first(ring, ring.mul_idx(minus(ring.mul_idx(ws, si)), ai) == z)
        if x2 is None:
            raise PreconditionViolated(["1=x2a*+u2"])
    w = DecompositionWitness(x1, x2, y1, y2, one - a * x1, one - x2 * s,
                             one - a * y1, one - y2 * a)
    if w.failures(a):
        raise ConsistencyError(f"constructed decomposition fails: {w.failures(a)}")
    return w


def core_from_decomposition(a: Element, w: DecompositionWitness) -> Element:
    """Evaluate the four decomposition formulas for ``a^core`` and check they agree."""
    failed = w.failures(a)
    if failed:
        raise PreconditionViolated(failed)
    x2s = w.x2.star()
    ay = a * w.y1 * w.y1 * a
    values = {
        "a y1^2 a x1": ay * w.x1,
        "a y1^2 a x2*": ay * x2s,
        "y2 a x1": w.y2 * a * w.x1,
        "y2 a x2*": w.y2 * a * x2s,
    }
    first = values["a y1^2 a x1"]
    for label, value in values.items():
        _equal(value, first, f"decomposition formula {label}")
    try:
        _equal(first, core_inverse(a), "decomposition formula vs core inverse")
    except NotCoreInvertible as exc:
        raise ConsistencyError(f"decompositions exist but {a} is not core invertible") from exc
    return first


def decomposition_byproducts(a: Element, w: DecompositionWitness) -> tuple[Element, Element]:
    """Return ``(a^#, a^(1,3))`` read off a decomposition.

    ``a y1^2`` and ``y2^2 a`` must both equal the group inverse; ``x1`` and
    ``x2*`` must both be {1,3}-inverses (they need not coincide).
    """
    failed = w.failures(a)
    if failed:
        raise PreconditionViolated(failed)
    g = a * w.y1 * w.y1
    _equal(g, w.y2 * w.y2 * a, "a y1^2 vs y2^2 a")
    _equal(g, group_inverse(a), "a y1^2 vs group inverse")
    for label, t in (("x1", w.x1), ("x2*", w.x2.star())):
        if not verify(InverseKind.ONE_THREE, a, t).valid:
            raise ConsistencyError(f"{label} is not a {{1,3}}-inverse of {a}")
    return g, w.x1


def core_membership_conditions(a: Element, b: Element, a13: Element | None = None
                               ) -> tuple[bool, bool, bool]:
    """Three equivalent tests of ``b = a^core`` when ``a in a^2R``.

    1. ``b`` is the core inverse of ``a``;
    2. ``ba^2 = a``, ``(ab)* = ab`` and ``b in aR``;
    3. ``a`` has a {1,3}-inverse ``a13``, ``ba^2 = a`` and ``b = b a a13``.

    ``a13`` defaults to :func:`one_three_inverse` when one exists.
    """
    _require({"a in a^2R": in_principal_ideal(a, a * a, Side.RIGHT).holds})
    if a13 is not None:
        _require({"a13 in a{1,3}": verify(InverseKind.ONE_THREE, a, a13).valid})
    else:
        a13 = _try(one_three_inverse, a)
    core = _try(core_inverse, a)
    ba2 = b * a * a == a
    ab = a * b
    c1 = core is not None and core == b
    c2 = ba2 and ab.star() == ab and in_principal_ideal(b, a, Side.RIGHT).holds
    c3 = a13 is not None and ba2 and b == b * a * a13
    if not c1 == c2 == c3:
        raise ConsistencyError(f"core conditions disagree for a={a}, b={b}: {(c1, c2, c3)}")
    return c1, c2, c3


# sums --------------------------------------------------------------------------

def _has(fn, x) -> bool:
    return _try(fn, x) is not None


def group_sum(a: Element, b: Element) -> Element:
    """``(1 - bb^#) a^# + b^# (1 - aa^#)`` for group invertible a, b with ab = 0."""
    _require({"a group invertible": _has(group_inverse, a),
              "b group invertible": _has(group_inverse, b),
              "ab=0": (a * b).is_zero()})
    one = a.ring.one()
    ga, gb = group_inverse(a), group_inverse(b)
    result = (one - b * gb) * ga + gb * (one - a * ga)
    try:
        _equal(result, group_inverse(a + b), "group sum formula vs group inverse")
    except NotGroupInvertible as exc:
        raise ConsistencyError(f"{a} + {b} should be group invertible") from exc
    return result


def core_sum(a: Element, b: Element) -> Element:
    """``(1 - b^core b) a^core + b^core`` when ``ab = 0`` and ``a* b = 0``."""
    _require({"a core invertible": _has(core_inverse, a),
              "b core invertible": _has(core_inverse, b),
              "ab=0": (a * b).is_zero(),
              "a*b=0": (a.star() * b).is_zero()})
    one = a.ring.one()
    ca, cb = core_inverse(a), core_inverse(b)
    for label, value in (("ab^core", a * cb), ("b^core a", cb * a), ("a^core b", ca * b)):
        if not value.is_zero():
            raise ConsistencyError(f"{label} should vanish, got {value}")
    result = (one - cb * b) * ca + cb
    try:
        _equal(result, core_inverse(a + b), "core sum formula vs core inverse")
    except NotCoreInvertible as exc:
        raise ConsistencyError(f"{a} + {b} should be core invertible") from exc
    return result


def core_sum_commuting(a: Element, b: Element) -> Element:
    """``a^core + b^core`` when additionally ``ba = 0``."""
    _require({"a core invertible": _has(core_inverse, a),
              "b core invertible": _has(core_inverse, b),
              "ab=0": (a * b).is_zero(),
              "ba=0": (b * a).is_zero(),
              "a*b=0": (a.star() * b).is_zero()})
    result = core_inverse(a) + core_inverse(b)
    _equal(result, core_sum(a, b), "commuting core sum vs general core sum")
    return result


def dual_core_sum(a: Element, b: Element) -> Element:
    """``a_core + b_core (1 - a a_core)`` when ``ab = 0`` and ``ab* = 0``."""
    _require({"a dual core invertible": _has(dual_core_inverse, a),
              "b dual core invertible": _has(dual_core_inverse, b),
              "ab=0": (a * b).is_zero(),
              "ab*=0": (a * b.star()).is_zero()})
    one = a.ring.one()
    da, db = dual_core_inverse(a), dual_core_inverse(b)
    result = da + db * (one - a * da)
    try:
        _equal(result, dual_core_inverse(a + b), "dual core sum formula vs dual core inverse")
    except NotDualCoreInvertible as exc:
        raise ConsistencyError(f"{a} + {b} should be dual core invertible") from exc
    _equal(result, core_sum(b.star(), a.star()).star(), "dual core sum vs star-transported core sum")
    return result


def dual_core_sum_commuting(a: Element, b: Element) -> Element:
    """``a_core + b_core`` when additionally ``ba = 0``."""
    _require({"a dual core invertible": _has(dual_core_inverse, a),
              "b dual core invertible": _has(dual_core_inverse, b),
              "ab=0": (a * b).is_zero(),
              "ba=0": (b * a).is_zero(),
              "ab*=0": (a * b.star()).is_zero()})
    result = dual_core_inverse(a) + dual_core_inverse(b)
    _equal(result, dual_core_sum(a, b), "commuting dual core sum vs general dual core sum")
    return result
