"""Brute-force ground truth over finite rings.

Nothing in this module calls the inverse engine: every answer comes from
scanning the ring against the defining conditions.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .engine import InverseKind
from .errors import ConsistencyError, InfiniteRing, NoneExists, RingTooLarge
from .rings import Element, FiniteRing, Ring, render

#: Pair-quantified scans run only when |R|^2 is at most this.
PAIR_LIMIT = 2**20


def _finite(ring: Ring) -> FiniteRing:
    if not ring.is_finite:
        raise InfiniteRing(f"{ring.descriptor} is infinite")
    ring.require_enumerable()
    return ring


def _right_ideal(ring, i) -> frozenset:
    return frozenset(np.unique(ring.mul_idx(i, ring.indices())).tolist())


def _left_ideal(ring, i) -> frozenset:
    return frozenset(np.unique(ring.mul_idx(ring.indices(), i)).tolist())


def find_all_idx(kind: InverseKind, ring: FiniteRing, a: int) -> np.ndarray:
    """Indices of every inverse of the given kind of the element with index ``a``."""
    xs = ring.indices()
    ax = ring.mul_idx(a, xs)
    xa = ring.mul_idx(xs, a)
    mask = ring.mul_idx(ax, a) == a
    if kind is InverseKind.INNER:
        return np.flatnonzero(mask)
    if kind is InverseKind.GROUP:
        mask &= (ring.mul_idx(xa, xs) == xs) & (ax == xa)
        return np.flatnonzero(mask)
    if kind is InverseKind.ONE_THREE:
        return np.flatnonzero(mask & (ring.star_idx(ax) == ax))
    if kind is InverseKind.ONE_FOUR:
        return np.flatnonzero(mask & (ring.star_idx(xa) == xa))
    s = int(ring.star_idx(a))
    if kind is InverseKind.CORE:
        right, left = _right_ideal(ring, a), _left_ideal(ring, s)
    elif kind is InverseKind.DUAL_CORE:
        right, left = _right_ideal(ring, s), _left_ideal(ring, a)
    else:
        raise ValueError(kind)
    keep = [int(x) for x in np.flatnonzero(mask)
            if _right_ideal(ring, x) == right and _left_ideal(ring, x) == left]
    return np.array(keep, dtype=np.int64)


def find_all(kind: InverseKind, a: Element) -> list[Element]:
    """Every x satisfying the defining conditions of ``kind`` for ``a``, in canonical order.

    Core: ``axa = a, xR = aR, Rx = Ra*``.  Dual core: ``axa = a, xR = a*R,
    Rx = Ra``.  The other kinds use their defining equations.
    """
    ring = _finite(a.ring)
    return [ring.at(int(i)) for i in find_all_idx(InverseKind(kind), ring, ring.index(a))]


def find_all_equations(a: Element, equations: str) -> list[Element]:
    """Solutions of an equational characterization of the core inverse.

    ``equations`` is ``"five"`` (axa=a, xax=x, (ax)*=ax, xa^2=a, ax^2=x),
    ``"three"`` ((ax)*=ax, xa^2=a, ax^2=x) or ``"three-inner"``
    (axa=a, (ax)*=ax, ax^2=x).
    """
    ring = _finite(a.ring)
    ai, xs = ring.index(a), ring.indices()
    ax, xa = ring.mul_idx(ai, xs), ring.mul_idx(xs, ai)
    sym = ring.star_idx(ax) == ax
    inner = ring.mul_idx(ax, ai) == ai
    ax2 = ring.mul_idx(ax, xs) == xs
    xa2 = ring.mul_idx(xa, ai) == ai
    if equations == "five":
        mask = inner & (ring.mul_idx(xa, xs) == xs) & sym & xa2 & ax2
    elif equations == "three":
        mask = sym & xa2 & ax2
    elif equations == "three-inner":
        mask = inner & sym & ax2
    else:
        raise ValueError(equations)
    return [ring.at(int(i)) for i in np.flatnonzero(mask)]


def right_inverses(a: Element) -> list[Element]:
    ring = _finite(a.ring)
    hits = np.flatnonzero(ring.mul_idx(ring.index(a), ring.indices()) == ring.one_idx)
    return [ring.at(int(i)) for i in hits]


def left_inverses(a: Element) -> list[Element]:
    ring = _finite(a.ring)
    hits = np.flatnonzero(ring.mul_idx(ring.indices(), ring.index(a)) == ring.one_idx)
    return [ring.at(int(i)) for i in hits]


def is_unit(a: Element) -> bool:
    return bool(right_inverses(a)) and bool(left_inverses(a))


# classification -------------------------------------------------------------

_CLASSES = (
    ("in_R_sharp", InverseKind.GROUP),
    ("in_R_13", InverseKind.ONE_THREE),
    ("in_R_14", InverseKind.ONE_FOUR),
    ("in_R_core", InverseKind.CORE),
    ("in_R_dualcore", InverseKind.DUAL_CORE),
)


@dataclass(frozen=True)
class ClassificationRow:
    element: Element
    in_R_sharp: bool
    in_R_13: bool
    in_R_14: bool
    in_R_core: bool
    in_R_dualcore: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"element": self.element.to_json()}
        for flag, _ in _CLASSES:
            out[flag] = getattr(self, flag)
        out["witnesses"] = {k.value: w.to_json() for k, w in self.witnesses.items()}
        return out


@dataclass(frozen=True)
class ClassificationReport:
    ring: Ring
    rows: tuple[ClassificationRow, ...]

    def members(self, flag: str) -> list[Element]:
        return [r.element for r in self.rows if getattr(r, flag)]

    def row(self, e: Element) -> ClassificationRow:
        return self.rows[self.ring.index(e)]

    def to_json(self) -> dict:
        return {"ring": str(self.ring.descriptor), "size": len(self.rows),
                "rows": [r.to_json() for r in self.rows]}

    def to_table(self) -> str:
        """Plain-text table: element, five membership flags, witnesses."""
        header = ["element", "R#", "R13", "R14", "Rcore", "Rdual", "witnesses"]
        lines = []
        for r in self.rows:
            flags = ["1" if getattr(r, f) else "0" for f, _ in _CLASSES]
            wit = " ".join(f"{k.value}={render(w)}" for k, w in r.witnesses.items())
            lines.append([render(r.element)] + flags + [wit])
        widths = [max(len(row[i]) for row in lines + [header]) for i in range(len(header) - 1)]
        fmt = lambda row: "  ".join(c.ljust(w) for c, w in zip(row, widths)) + "  " + row[-1]  # noqa: E731
        body = [fmt(header).rstrip()] + [fmt(row).rstrip() for row in lines]
        return f"# {self.ring.descriptor}\n" + "\n".join(body) + "\n"


def _classify_row(ring: FiniteRing, i: int) -> ClassificationRow:
    flags, witnesses = {}, {}
    for flag, kind in _CLASSES:
        found = find_all_idx(kind, ring, i)
        flags[flag] = bool(found.size)
        if found.size:
            witnesses[kind] = ring.at(int(found[0]))
    if flags["in_R_core"] != (flags["in_R_sharp"] and flags["in_R_13"]):
        raise ConsistencyError(f"core membership of {render(ring.at(i))} disagrees "
                               "with group and {1,3} membership")
    if flags["in_R_dualcore"] != (flags["in_R_sharp"] and flags["in_R_14"]):
        raise ConsistencyError(f"dual core membership of {render(ring.at(i))} disagrees "
                               "with group and {1,4} membership")
    return ClassificationRow(ring.at(i), witnesses=witnesses, **flags)


def classify(ring: Ring, jobs: int = 1) -> ClassificationReport:
    """Membership of every element in R^#, R^{1,3}, R^{1,4}, R^core and R_core."""
    ring = _finite(ring)
    idx = range(ring.size)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            rows = list(pool.map(lambda i: _classify_row(ring, i), idx))
    else:
        rows = [_classify_row(ring, i) for i in idx]
    return ClassificationReport(ring, tuple(rows))


def report_json(report: ClassificationReport) -> str:
    return json.dumps(report.to_json(), sort_keys=False)


# decompositions ---------------------------------------------------------------

def _subset(ring, kind: str, i: int) -> np.ndarray:
    xs = ring.indices()
    if kind == "right-ideal":
        return np.unique(ring.mul_idx(i, xs))
    if kind == "left-ideal":
        return np.unique(ring.mul_idx(xs, i))
    if kind == "right-ann":
        return np.flatnonzero(ring.mul_idx(i, xs) == ring.zero_idx)
    if kind == "left-ann":
        return np.flatnonzero(ring.mul_idx(xs, i) == ring.zero_idx)
    raise ValueError(kind)


def _sum_covers(ring, s: np.ndarray, t: np.ndarray) -> bool:
    return np.unique(ring.add_idx(s[:, None], t[None, :])).size == ring.size


def _direct(ring, s, t) -> bool:
    return _sum_covers(ring, s, t) and np.intersect1d(s, t).tolist() == [ring.zero_idx]


def decomposition_holds(a: Element, variant: int, kind: str = "core") -> bool:
    """Evaluate one of the nine equivalent conditions for (dual) core invertibility.

    Variant 1 is membership itself.  Variants 2-9 pair one of four
    {1,3}-type (core) or {1,4}-type (dual) splittings of R with one of two
    group-type splittings ``R = aR (+) a°`` (2-5) or ``R = Ra (+) °a`` (6-9).
    """
    ring = _finite(a.ring)
    if kind not in ("core", "dual"):
        raise ValueError(f"kind must be 'core' or 'dual', got {kind!r}")
    if not 1 <= variant <= 9:
        raise ValueError("variant must be in 1..9")
    i, s = ring.index(a), int(ring.star_idx(ring.index(a)))
    if variant == 1:
        k = InverseKind.CORE if kind == "core" else InverseKind.DUAL_CORE
        return bool(find_all_idx(k, ring, i).size)
    sub = lambda what, j: _subset(ring, what, j)  # noqa: E731
    if kind == "core":
        first = [
            (_direct, sub("right-ideal", i), sub("right-ann", s)),   # aR (+) (a*)°
            (_sum_covers, sub("right-ideal", i), sub("right-ann", s)),
            (_direct, sub("left-ideal", s), sub("left-ann", i)),     # Ra* (+) °a
            (_sum_covers, sub("left-ideal", s), sub("left-ann", i)),
        ]
    else:
        first = [
            (_direct, sub("right-ideal", s), sub("right-ann", i)),   # a*R (+) a°
            (_sum_covers, sub("right-ideal", s), sub("right-ann", i)),
            (_direct, sub("left-ideal", i), sub("left-ann", s)),     # Ra (+) °(a*)
            (_sum_covers, sub("left-ideal", i), sub("left-ann", s)),
        ]
    second = [
        (_direct, sub("right-ideal", i), sub("right-ann", i)),
        (_direct, sub("left-ideal", i), sub("left-ann", i)),
    ]
    f, g = first[(variant - 2) % 4], second[(variant - 2) // 4]
    return bool(f[0](ring, f[1], f[2]) and g[0](ring, g[1], g[2]))


def is_direct_finite(ring: Ring) -> tuple[bool, tuple[Element, Element] | None]:
    """Does ``ab = 1`` imply ``ba = 1``?  Returns a counterexample pair on failure."""
    ring = _finite(ring)
    if ring.size ** 2 > PAIR_LIMIT:
        raise RingTooLarge(f"{ring.size}^2 pairs exceed the pair-scan limit")
    xs = ring.indices()
    one = ring.one_idx
    table = ring.mul_idx(xs[:, None], xs[None, :])
    rows, cols = np.nonzero(table == one)
    bad = table[cols, rows] != one
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        return False, (ring.at(int(rows[k])), ring.at(int(cols[k])))
    return True, None


def projections(a: Element) -> list[Element]:
    """All p with ``p^2 = p = p*`` and ``pR = aR``."""
    ring = _finite(a.ring)
    xs = ring.indices()
    target = _right_ideal(ring, ring.index(a))
    cand = np.flatnonzero((ring.mul_idx(xs, xs) == xs) & (ring.star_idx(xs) == xs))
    return [ring.at(int(p)) for p in cand if _right_ideal(ring, int(p)) == target]


def unique_projection(a: Element) -> Element:
    """The unique projection generating ``aR``; NoneExists when there is none."""
    found = projections(a)
    has13 = bool(find_all_idx(InverseKind.ONE_THREE, a.ring, a.ring.index(a)).size)
    if len(found) > 1 or has13 != bool(found):
        raise ConsistencyError(f"{render(a)}: {len(found)} projections, {{1,3}}: {has13}")
    if not found:
        raise NoneExists(f"no projection p with pR = {render(a)}R")
    return found[0]
