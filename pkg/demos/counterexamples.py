"""Replay the corpus: additive formulas fail once their hypotheses are dropped."""

from ginv import corpus, engine, make_ring
from ginv.errors import NotInvertible, PreconditionViolated

for sid in corpus.SCENARIO_IDS:
    report = corpus.run_scenario(sid)
    print(report.to_text())

# Z_8 with the identity involution: 1 and 3 are units but 1 + 3 = 4 is nilpotent
z8 = make_ring("zmod:8")
try:
    engine.core_inverse(z8.element(4))
except NotInvertible as exc:
    print("4 in Z_8:", type(exc).__name__, exc.failed)

# M_2(Z_4): a*b = 0 and ab* = 0, yet ab != 0 and the sum loses its {1,3}-inverse
m = make_ring("mat:zmod:4:2")
a, b = m.element([[3, 1], [0, 0]]), m.element([[0, 0], [1, 1]])
print("ab =", a * b, " a*b =", a.star() * b, " ab* =", a * b.star())
try:
    engine.core_sum(a, b)
except PreconditionViolated as exc:
    print("core_sum refused:", exc.failed)
try:
    engine.core_inverse(a + b)
except NotInvertible as exc:
    print("a+b =", a + b, "->", type(exc).__name__, exc.failed)
