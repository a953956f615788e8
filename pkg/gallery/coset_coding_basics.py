"""
Coset coding in a few lines
===========================

A message is the syndrome of its codeword.  Encoding picks a random word
with that syndrome, decoding multiplies by the parity-check matrix.
"""

import numpy as np

import nmcoset as nc

code = nc.hamming(3)
print(code)
print(code.H)

# %%
# Every message has 2^k = 16 encodings; they partition F_2^7.
rng = np.random.default_rng(0)
m = nc.BitVector.from_str("101")
for _ in range(4):
    x = nc.encode(code, m, rng)
    print(x, "->", nc.decode(code, x))

coset = nc.encode_all(code, m)
print(len(coset), "words in the coset of", m)

# %%
# The parameters that matter for tampering and wiretapping.
print(nc.profile(code))
