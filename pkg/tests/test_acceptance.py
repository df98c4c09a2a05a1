"""Acceptance gate: one test function (possibly parametrized) per criterion.

The oracle is ground truth throughout; the engine is never checked against itself.
"""

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from ginv import corpus, engine, oracle
from ginv.engine import Form, InverseKind, LeftEquations
from ginv.errors import NotInvertible, PreconditionViolated
from ginv.rings import make_ring

from .conftest import TEST_RINGS

KINDS = [InverseKind.GROUP, InverseKind.ONE_THREE, InverseKind.ONE_FOUR,
         InverseKind.CORE, InverseKind.DUAL_CORE]


def _attempt(fn, *args):
    try:
        return fn(*args)
    except NotInvertible:
        return None


# 1 -------------------------------------------------------------------------

ENGINE_SET = {
    InverseKind.GROUP: lambda a: [engine.group_inverse(a)],
    InverseKind.ONE_THREE: engine.one_three_set,
    InverseKind.ONE_FOUR: engine.one_four_set,
    InverseKind.CORE: lambda a: [engine.core_inverse(a)],
    InverseKind.DUAL_CORE: lambda a: [engine.dual_core_inverse(a)],
}


@pytest.mark.parametrize("spec", TEST_RINGS)
def test_criterion_1_oracle_equivalence(spec):
    ring = make_ring(spec)
    bad = []
    for a in ring.elements():
        for kind in KINDS:
            expected = oracle.find_all(kind, a)
            got = _attempt(ENGINE_SET[kind], a) or []
            if sorted(map(ring.index, got)) != [ring.index(x) for x in expected]:
                bad.append((kind.value, a, got, expected))
    assert not bad, bad[:5]


# 2 -------------------------------------------------------------------------

@pytest.mark.parametrize("spec", TEST_RINGS)
def test_criterion_2_characterizations_coincide(spec):
    ring = make_ring(spec)
    for a in ring.elements():
        definitional = oracle.find_all(InverseKind.CORE, a)
        five = oracle.find_all_equations(a, "five")
        three = oracle.find_all_equations(a, "three")
        assert definitional == five == three, a
        assert len(definitional) <= 1


# 3 -------------------------------------------------------------------------

@pytest.mark.parametrize("spec", TEST_RINGS)
def test_criterion_3_core_is_group_and_13(spec):
    ring = make_ring(spec)
    for a in ring.elements():
        core = oracle.find_all(InverseKind.CORE, a)
        group = oracle.find_all(InverseKind.GROUP, a)
        inner13 = oracle.find_all(InverseKind.ONE_THREE, a)
        assert bool(core) == (bool(group) and bool(inner13)), a
        assert bool(_attempt(engine.core_inverse, a) is not None) == bool(core)
        if core:
            (c,), (g,) = core, group
            assert g == c * c * a
            for x in inner13:
                assert c == g * a * x


# 4 -------------------------------------------------------------------------

def _table(ring):
    xs = ring.indices()
    return ring.mul_idx(xs[:, None], xs[None, :]), ring.add_idx(xs[:, None], xs[None, :])


def _oracle_map(ring, kind):
    return {i: (r[0] if (r := oracle.find_all_idx(kind, ring, i)).size else None)
            for i in range(ring.size)}


@pytest.mark.parametrize("spec", ["zmod:8", "zmod:12", "mat:zmod:2:2", "mat:gf:2:2",
                                  "mat:zmod:4:2"])
def test_criterion_4_additive_suite(spec):
    ring = make_ring(spec)
    assert ring.size ** 2 <= oracle.PAIR_LIMIT
    mul, add = _table(ring)
    star = ring.star_idx(ring.indices())
    zero, one = ring.zero_idx, ring.one_idx
    core = _oracle_map(ring, InverseKind.CORE)
    dual = _oracle_map(ring, InverseKind.DUAL_CORE)
    group = _oracle_map(ring, InverseKind.GROUP)
    minus = lambda i: int(ring.neg_idx(i))  # noqa: E731

    def formula_core(a, b):
        bpi = add[one, minus(mul[core[b], b])]
        return add[mul[bpi, core[a]], core[b]]

    def formula_dual(a, b):
        api = add[one, minus(mul[a, dual[a]])]
        return add[dual[a], mul[dual[b], api]]

    def formula_group(a, b):
        left = mul[add[one, minus(mul[b, group[b]])], group[a]]
        right = mul[group[b], add[one, minus(mul[a, group[a]])]]
        return add[left, right]

    counts = {"core": 0, "dual": 0, "group": 0}
    idx = range(ring.size)
    for a in idx:
        for b in idx:
            if mul[a, b] != zero:
                continue
            s = int(add[a, b])
            if core[a] is not None and core[b] is not None and mul[star[a], b] == zero:
                assert core[s] is not None
                assert formula_core(a, b) == core[s]
                assert engine.core_sum(ring.at(a), ring.at(b)) == ring.at(int(core[s]))
                counts["core"] += 1
            if dual[a] is not None and dual[b] is not None and mul[a, star[b]] == zero:
                assert dual[s] is not None
                assert formula_dual(a, b) == dual[s]
                assert engine.dual_core_sum(ring.at(a), ring.at(b)) == ring.at(int(dual[s]))
                counts["dual"] += 1
            if group[a] is not None and group[b] is not None:
                assert group[s] is not None
                assert formula_group(a, b) == group[s]
                assert engine.group_sum(ring.at(a), ring.at(b)) == ring.at(int(group[s]))
                counts["group"] += 1
    assert all(counts.values()), counts


# 5 -------------------------------------------------------------------------

@pytest.mark.parametrize("sid", corpus.SCENARIO_IDS)
def test_criterion_5_corpus(sid):
    first = corpus.run_scenario(sid)
    assert first.passed, first.to_text()
    engine.clear_caches()
    second = corpus.run_scenario(sid)
    assert first.to_text() == second.to_text()
    assert first.to_json() == second.to_json()


# 6 -------------------------------------------------------------------------

def _random_rational(rng, rank=None):
    def entry():
        return Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
    if rank is None:
        return [[entry() for _ in range(3)] for _ in range(3)]
    left = [[entry() for _ in range(rank)] for _ in range(3)]
    right = [[entry() for _ in range(3)] for _ in range(rank)]
    return [[sum((left[i][k] * right[k][j] for k in range(rank)), Fraction(0))
             for j in range(3)] for i in range(3)]


def _sympy_index_one(rows):
    m = sympy.Matrix(rows)
    return m.rank() == (m * m).rank()


def test_criterion_6_rational_matrices():
    ring = make_ring("mat:rat:3")
    rng = random.Random(20240611)
    conditioned = 0
    while conditioned < 500:
        rows = _random_rational(rng, rank=rng.choice([0, 1, 2, 2, 3]))
        if not _sympy_index_one(rows):
            continue
        conditioned += 1
        a = ring.element(rows)
        x = engine.core_inverse(a)
        assert engine.verify(InverseKind.CORE, a, x, Form.FIVE_EQ).valid
    for _ in range(500):
        rows = _random_rational(rng, rank=rng.choice([None, 1, 2]))
        a = ring.element(rows)
        g = _attempt(engine.group_inverse, a)
        t = _attempt(engine.one_three_inverse, a)
        c = _attempt(engine.core_inverse, a)
        assert (c is not None) == (g is not None and t is not None)
        assert (c is not None) == _sympy_index_one(rows)
        if c is not None:
            assert c == g * a * t
            assert engine.verify(InverseKind.CORE, a, c, Form.FIVE_EQ).valid


# 7 -------------------------------------------------------------------------

def _all_routes(a, c):
    w = engine.decomposition_witness(a)
    return [
        engine.core_via_unit(a, c),
        engine.core_from_left_equations(a, c, LeftEquations.OUTER),
        engine.core_from_left_equations(a, c, LeftEquations.INNER),
        engine.core_from_decomposition(a, w),
    ]


@pytest.mark.parametrize("spec", TEST_RINGS)
def test_criterion_7_cross_formula_finite(spec):
    ring = make_ring(spec)
    checked = 0
    for a in ring.elements():
        expected = oracle.find_all(InverseKind.CORE, a)
        if not expected:
            with pytest.raises(PreconditionViolated):
                engine.core_from_decomposition(a, engine.decomposition_witness(a))
            continue
        (c,) = expected
        assert _all_routes(a, c) == [c] * 4
        checked += 1
    assert checked


def test_criterion_7_cross_formula_rational():
    ring = make_ring("mat:rat:3")
    rng = random.Random(7)
    checked = 0
    while checked < 100:
        rows = _random_rational(rng, rank=rng.choice([1, 2, 3]))
        a = ring.element(rows)
        c = _attempt(engine.core_inverse, a)
        if c is None:
            continue
        assert engine.verify(InverseKind.CORE, a, c, Form.DEFINITIONAL).valid
        assert _all_routes(a, c) == [c] * 4
        checked += 1


# 8 -------------------------------------------------------------------------

@pytest.mark.parametrize("spec", ["zmod:8", "mat:zmod:2:2"])
def test_criterion_8_family_completeness(spec):
    ring = make_ring(spec)
    one = ring.one()
    decompositions = 0
    for a in ring.elements():
        exhaustive = oracle.find_all(InverseKind.ONE_THREE, a)
        if not exhaustive:
            continue
        for r in ring.elements():
            u = one - a * r
            if not (a.star() * u).is_zero():
                continue
            family = {engine.one_three_family(a, r, u, w) for w in ring.elements()}
            assert sorted(family, key=ring.index) == exhaustive
            decompositions += 1
    assert decompositions
