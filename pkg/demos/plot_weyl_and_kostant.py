"""
Weyl group and Kostant representatives
======================================

The Weyl group of type C3 acts on (e1, e2, e3) by signed permutations.
Each standard parabolic cuts it into cosets, and the Kostant
representatives pick the shortest element in each coset.
"""

from collections import Counter

from sp6boundary.parabolic import all_parabolics, kostant_reps, weyl_levi
from sp6boundary.weyl import enumerate_weyl, from_word, inverse, length

W = enumerate_weyl()
print(len(W), "elements")
print("lengths:", sorted(Counter(length(w) for w in W).items()))

# words multiply left to right and names are the smallest reduced word
w = from_word("12321")
print(w.name, "has length", length(w), "and inverse", inverse(w).name)

# every coset of the Levi Weyl group has exactly one Kostant representative
for P in all_parabolics():
    reps = kostant_reps(P)
    print(f"{P.name:>4}: |W^P| = {len(reps):2d}, |W_M| = {len(weyl_levi(P))}")
