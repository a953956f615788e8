"""
Wiretap leakage against observed coordinates
============================================

An eavesdropper reads a set of codeword coordinates.  With fewer than d_dual
of them she learns nothing; beyond the generalized weights d_i she can learn
up to i bits.  Here we print, for each number of observed bits, the best
and worst case over all coordinate sets.
"""

from itertools import combinations

import nmcoset as nc

code = nc.hamming(3)
print("generalized weights:", nc.generalized_weights(code))
print("observed  min leak  max leak")
for t in range(code.n + 1):
    leaks = [nc.wiretap_leakage(code, S) for S in combinations(range(code.n), t)]
    print(f"{t:8d}  {min(leaks):8.3f}  {max(leaks):8.3f}")

# %%
# Uniform projections explain the zero rows: every coset is an orthogonal
# array of strength d_dual - 1.
d = nc.dual_distance(code)
print("OA strength", d - 1, ":", nc.oa_strength_holds(code, d - 1))
print("OA strength", d, ":", nc.oa_strength_holds(code, d))
