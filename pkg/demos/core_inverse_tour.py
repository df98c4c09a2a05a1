"""A short tour: group, {1,3} and core inverses of one rational 2x2 matrix."""

from ginv import engine, make_ring
from ginv.engine import Form, InverseKind, LeftEquations

Q2 = make_ring("mat:rat:2")
a = Q2.element([[1, 0], [-1, 0]])
print("a =", a)

# a is idempotent, so it is its own group inverse
g = engine.group_inverse(a)
print("a^# =", g)

t = engine.one_three_inverse(a)
print("a^(1,3) =", t)

c = engine.core_inverse(a)
print("a^core = a^# a a^(1,3) =", c)

cert = engine.verify(InverseKind.CORE, a, c, Form.FIVE_EQ)
for eq in cert.equations:
    print(f"  {eq.label:10s} {'ok' if eq.holds else 'fails'}")

# three more roads to the same element
print("via unit      :", engine.core_via_unit(a, c))
print("left eqs      :", engine.core_from_left_equations(a, c, LeftEquations.OUTER))
w = engine.decomposition_witness(a)
print("decomposition :", engine.core_from_decomposition(a, w))

# every {1,3}-inverse gives the same core inverse
u = Q2.one() - a * t
other = engine.one_three_family(a, t, u, Q2.element([[0, 0], [1, 0]]))
print("another {1,3}-inverse:", other, "->", g * a * other)

# the dual core inverse of a* is the star of a^core
print("(a*)_core =", engine.dual_core_inverse(a.star()), " a^core* =", c.star())
