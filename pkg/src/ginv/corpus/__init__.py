"""Named, machine-checked scenarios (worked examples and counterexamples).

A scenario is a JSON file naming a ring, a few elements, elements derived
from them by ring operations, and a list of assertions.  Each assertion names
a check from :data:`CHECKS`, its arguments and the expected boolean.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .. import engine, oracle
from ..errors import NotInvertible, PreconditionViolated, UnknownScenario
from ..rings import Element, Side, in_principal_ideal, make_ring, render

SCENARIO_IDS = ("ex4.2", "ex4.4", "rem4.5", "rem4.6")


@dataclass(frozen=True)
class Assertion:
    description: str
    check: str
    args: tuple
    expected: bool

    def to_json(self):
        return {"description": self.description, "check": self.check,
                "args": list(self.args), "expected": self.expected}


@dataclass(frozen=True)
class Scenario:
    id: str
    title: str
    ring: str
    elements: tuple  # (name, raw json value) pairs
    derived: tuple   # (name, op, *operands)
    assertions: tuple[Assertion, ...]
    notes: str = ""

    @classmethod
    def from_json(cls, obj: dict) -> "Scenario":
        return cls(
            id=obj["id"],
            title=obj["title"],
            ring=obj["ring"],
            elements=tuple((k, _freeze(v)) for k, v in obj["elements"].items()),
            derived=tuple(tuple(d) for d in obj.get("derived", [])),
            assertions=tuple(Assertion(a["description"], a["check"], tuple(a["args"]),
                                       a["expected"]) for a in obj["assertions"]),
            notes=obj.get("notes", ""),
        )

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "title": self.title,
            "ring": self.ring,
            "elements": {k: _thaw(v) for k, v in self.elements},
            "derived": [list(d) for d in self.derived],
            "assertions": [a.to_json() for a in self.assertions],
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def bind(self) -> dict[str, Element]:
        """Evaluate the named and derived elements."""
        ring = make_ring(self.ring)
        env = {name: ring.element(_thaw(value)) for name, value in self.elements}
        for name, op, *operands in self.derived:
            vals = [env[o] for o in operands]
            env[name] = _OPS[op](*vals)
        return env


def _freeze(v):
    return tuple(_freeze(x) for x in v) if isinstance(v, list) else v


def _thaw(v):
    return [_thaw(x) for x in v] if isinstance(v, tuple) else v


_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "neg": lambda x: -x,
    "star": lambda x: x.star(),
}


def _exists(fn):
    def check(x):
        try:
            fn(x)
        except NotInvertible:
            return False
        return True
    return check


def _blocked(fn):
    def check(x, y, hypothesis):
        try:
            fn(x, y)
        except PreconditionViolated as exc:
            return hypothesis in exc.failed
        return False
    return check


def _oracle_has(kind):
    return lambda x: bool(oracle.find_all(kind, x))


CHECKS = {
    "equal": lambda x, y: x == y,
    "is_zero": lambda x: x.is_zero(),
    "in_left_ideal": lambda x, y: in_principal_ideal(x, y, Side.LEFT).holds,
    "in_right_ideal": lambda x, y: in_principal_ideal(x, y, Side.RIGHT).holds,
    "group_invertible": _exists(engine.group_inverse),
    "one_three_invertible": _exists(engine.one_three_inverse),
    "one_four_invertible": _exists(engine.one_four_inverse),
    "core_invertible": _exists(engine.core_inverse),
    "dual_core_invertible": _exists(engine.dual_core_inverse),
    "oracle_group_invertible": _oracle_has(engine.InverseKind.GROUP),
    "oracle_one_three_invertible": _oracle_has(engine.InverseKind.ONE_THREE),
    "oracle_core_invertible": _oracle_has(engine.InverseKind.CORE),
    "core_inverse_is": lambda x, y: _exists(engine.core_inverse)(x) and engine.core_inverse(x) == y,
    "group_sum_blocked_by": _blocked(engine.group_sum),
    "core_sum_blocked_by": _blocked(engine.core_sum),
    "dual_core_sum_blocked_by": _blocked(engine.dual_core_sum),
}


@dataclass(frozen=True)
class Outcome:
    assertion: Assertion
    observed: bool
    elements: tuple  # (name, rendered element) for element arguments

    @property
    def passed(self) -> bool:
        return self.observed == self.assertion.expected

    def to_json(self):
        return {
            "description": self.assertion.description,
            "check": self.assertion.check,
            "args": list(self.assertion.args),
            "expected": self.assertion.expected,
            "observed": self.observed,
            "passed": self.passed,
            "elements": {k: v for k, v in self.elements},
        }


@dataclass(frozen=True)
class ScenarioReport:
    scenario: Scenario
    outcomes: tuple[Outcome, ...]

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def to_json(self) -> dict:
        return {"id": self.scenario.id, "ring": self.scenario.ring,
                "title": self.scenario.title, "passed": self.passed,
                "outcomes": [o.to_json() for o in self.outcomes]}

    def to_text(self) -> str:
        lines = [f"scenario {self.scenario.id}: {self.scenario.title}",
                 f"ring {self.scenario.ring}"]
        for o in self.outcomes:
            mark = "pass" if o.passed else "FAIL"
            lines.append(f"  [{mark}] {o.assertion.description}")
            if not o.passed:
                lines.append(f"         expected {o.assertion.expected}, observed {o.observed}; "
                             + ", ".join(f"{k}={v}" for k, v in o.elements))
        n = sum(o.passed for o in self.outcomes)
        lines.append(f"{n}/{len(self.outcomes)} assertions passed")
        return "\n".join(lines) + "\n"


def load_scenario(scenario_id: str) -> Scenario:
    if scenario_id not in SCENARIO_IDS:
        raise UnknownScenario(f"unknown scenario {scenario_id!r}; known: {', '.join(SCENARIO_IDS)}")
    text = resources.files(__package__).joinpath("scenarios", f"{scenario_id}.json").read_text()
    return Scenario.from_json(json.loads(text))


def run(scenario: Scenario) -> ScenarioReport:
    env = scenario.bind()
    outcomes = []
    for a in scenario.assertions:
        args = [env[x] if isinstance(x, str) and x in env else x for x in a.args]
        observed = bool(CHECKS[a.check](*args))
        shown = tuple((x, render(env[x])) for x in a.args if isinstance(x, str) and x in env)
        outcomes.append(Outcome(a, observed, shown))
    return ScenarioReport(scenario, tuple(outcomes))


def run_scenario(scenario_id: str) -> ScenarioReport:
    return run(load_scenario(scenario_id))
