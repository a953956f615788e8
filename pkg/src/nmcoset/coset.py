"""Coset encoding: a message is the syndrome of its codeword.

``encode`` picks a uniformly random ``x`` with ``H x = m``; ``decode`` is the
syndrome map and is total.
"""

from __future__ import annotations

import numpy as np

from .codes import LinearCode
from .errors import DEFAULT_CAP, ShapeError, check_cap
from .gf2 import BitVector, solve, span


def _check_message(code: LinearCode, m: BitVector) -> None:
    if m.length != code.r:
        raise ShapeError(f"message has length {m.length}, code expects r = {code.r}")


def particular_solution(code: LinearCode, m: BitVector) -> BitVector:
    _check_message(code, m)
    x = solve(code.H, m)
    assert x is not None, "full-row-rank H makes every syndrome reachable"
    return x


def encode(code: LinearCode, m: BitVector, rng: np.random.Generator) -> BitVector:
    """Random member of the coset of ``m``.

    Draws one fair bit per kernel basis vector (k bits in total) and adds the
    selected basis vectors to the canonical particular solution.
    """
    x = particular_solution(code, m).value
    coefficients = rng.integers(0, 2, size=code.k)
    for bit, v in zip(coefficients, code.kernel_basis):
        if bit:
            x ^= v.value
    return BitVector(code.n, x)


def coset_ints(code: LinearCode, m: BitVector, cap: int = DEFAULT_CAP) -> list[int]:
    """Packed coset elements in kernel-combination counter order."""
    check_cap("coset enumeration", 1 << code.k, cap)
    x0 = particular_solution(code, m).value
    return [x0 ^ c for c in span([v.value for v in code.kernel_basis])]


def encode_all(code: LinearCode, m: BitVector, cap: int = DEFAULT_CAP) -> list[BitVector]:
    return [BitVector(code.n, x) for x in coset_ints(code, m, cap)]


def decode(code: LinearCode, x: BitVector) -> BitVector:
    if x.length != code.n:
        raise ShapeError(f"word has length {x.length}, code expects n = {code.n}")
    return BitVector(code.r, code.syndrome_int(x.value))


def all_messages(code: LinearCode) -> list[BitVector]:
    return [BitVector(code.r, v) for v in range(1 << code.r)]
