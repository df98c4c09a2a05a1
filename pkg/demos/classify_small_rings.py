"""Which elements of a few small *-rings have which inverses?"""

import time

from ginv import make_ring, oracle

for spec in ["zmod:8", "zmod:12", "mat:gf:2:2", "mat:zmod:4:2"]:
    ring = make_ring(spec)
    t0 = time.perf_counter()
    report = oracle.classify(ring)
    dt = time.perf_counter() - t0
    counts = {flag: len(report.members(flag))
              for flag in ("in_R_sharp", "in_R_13", "in_R_14", "in_R_core", "in_R_dualcore")}
    print(f"{spec:14s} |R|={ring.size:4d}  {counts}  ({dt:.2f}s)")

# the full table for Z_8
print()
print(oracle.classify(make_ring("zmod:8")).to_table())

# over GF(2) the transpose is degenerate: x = [[1,0],[1,0]] has x*x = 0
g = make_ring("mat:gf:2:2")
x = g.element([[1, 0], [1, 0]])
row = oracle.classify(g).row(x)
print(x, "group:", row.in_R_sharp, "{1,3}:", row.in_R_13, "core:", row.in_R_core)

print("direct finite:", oracle.is_direct_finite(make_ring("mat:zmod:4:2"))[0])
