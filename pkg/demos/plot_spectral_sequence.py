"""
The boundary spectral sequence
==============================

Assemble E1 from the faces, fix the signs of the first differential with
the d o d = 0 solver, and read off the cohomology of the boundary.
"""

from sp6boundary.linalg import rank
from sp6boundary.spectral import (
    assemble_E1,
    build_d1,
    d_squared_defect,
    gauge_equivalent,
    run_pipeline,
    solve_signs,
)


def show(page):
    top = page.max_q()
    for q in range(top, -1, -1):
        print(f"{q:2d} |", " ".join(f"{page.dim(p, q) or '.':>3}" for p in range(3)))
    print("   +" + "-" * 12)


e1 = assemble_E1()
show(e1)

# there is one sign assignment up to gauge, and it agrees with the
# explicit matrices shipped with the package
sols = solve_signs(e1)
print(len(sols), "solution(s)")
solved = build_d1(e1, "solved", signs=sols[0])
print("matches embedded matrices up to gauge:", gauge_equivalent(solved, build_d1(e1, "paper_fixture")))
print("d o d defects:", d_squared_defect(solved))
print({k: rank(m) for k, m in solved.items() if rank(m)})

pipe = run_pipeline()
show(pipe.e2)
for a in pipe.d2_analysis:
    print("d2 at q =", a.q, "sources", a.source_lines, "targets", a.target_lines, "support", a.e2_pairs)

print("H^q:", list(pipe.result.dims))
