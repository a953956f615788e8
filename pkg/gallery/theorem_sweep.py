"""
Which bit-wise tamperings does coset coding withstand?
======================================================

Sweep all 4^7 bit-wise functions against the [7,4] Hamming code and group
them by the number of coordinates they force to a constant.  Past
n - d_dual = 3 constants every function yields a message-independent
output, so the code is non-malleable for it.  Below that, some functions
still relate the output to the input.
"""

from collections import defaultdict

import nmcoset as nc

code = nc.hamming(3)
threshold = code.n - nc.dual_distance(code)

by_fixed = defaultdict(lambda: [0, 0])
worst = {}
for f in nc.enumerate_family(code.n, 0):
    report = nc.verify_theorem(code, f)
    bucket = by_fixed[f.fixed_count]
    bucket[0] += 1
    bucket[1] += report.max_sd == 0
    worst[f.fixed_count] = max(worst.get(f.fixed_count, 0), report.leakage_bits)

print(f"threshold n - d_dual = {threshold}")
print("constants  functions  message-independent  max leakage (bits)")
for fixed in sorted(by_fixed):
    total, ok = by_fixed[fixed]
    print(f"{fixed:9d}  {total:9d}  {ok:19d}  {worst[fixed]:.3f}")

# %%
# Keep/flip-only functions shift the message by a constant.
f = nc.parse_tamper("fkkfkkk")
offset = nc.error_only_offset(code, f)
print(f, "adds", offset, "to every message")

# %%
# One constant short of the threshold: a parity of the message survives.
f, lam = nc.tightness_witness(code)
print(f, "preserves lam . m for lam =", lam, "; leakage =", nc.leakage_bits(code, f))
