"""
Cohomology of a boundary face
=============================

For the parabolic with Levi GL2 x Sp2 we follow a single Kostant
representative from its shifted weight, through the parity rules, to
the Kuenneth product of the known factor cohomologies.
"""

from sp6boundary.cohomdb import face_cohomology, levi_cohomology
from sp6boundary.leviweights import kostant_weight_table
from sp6boundary.parity import verdicts
from sp6boundary.weyl import from_word

# Levi coordinates of w . 0 for every representative
for w, m in kostant_weight_table("a2"):
    print(f"{w.name:>8}", [str(x) for x in m])

# which summands survive, and why the others vanish
for entry, m, v in verdicts("a2"):
    print(f"{entry.name:>8} {v.status:16s} {v.reason}")

# the representative s213 contributes a product of two H^1 groups
space = levi_cohomology("a2", from_word("213"))
for i in space.degrees():
    line = space[i][0]
    print("internal degree", i, ":", line.dim, "=", line.dim.evaluate())

# all faces at once, graded by total degree
face = face_cohomology("a2")
print(face.dim_vector(9))
