"""Exhaustive code parameters: d, dual distance, generalized weights, OA strength."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb

import numpy as np

from .codes import LinearCode
from .coset import all_messages, coset_ints
from .errors import DEFAULT_CAP, EmptyCodeError, check_cap
from .gf2 import span


def codewords(code: LinearCode, cap: int = DEFAULT_CAP) -> list[int]:
    check_cap("codeword enumeration", 1 << code.k, cap)
    return span([v.value for v in code.kernel_basis])


def dual_codewords(code: LinearCode, cap: int = DEFAULT_CAP) -> list[int]:
    """Row-span of H indexed by the coefficient vector (bit i selects row i)."""
    check_cap("dual codeword enumeration", 1 << code.r, cap)
    return span(code.H.rows)


def min_distance(code: LinearCode, cap: int = DEFAULT_CAP) -> int:
    if code.k == 0:
        raise EmptyCodeError(f"code {code.name} has k = 0 and no nonzero codewords")
    return min(c.bit_count() for c in codewords(code, cap)[1:])


def dual_distance(code: LinearCode, cap: int = DEFAULT_CAP) -> int:
    return min(c.bit_count() for c in dual_codewords(code, cap)[1:])


def generalized_weights(code: LinearCode, cap: int = DEFAULT_CAP) -> list[int]:
    """Generalized Hamming weights d_1..d_r of the dual code.

    d_i is the smallest support of an i-dimensional subcode.  Subcodes are
    reached by growing tuples of independent dual codewords in increasing
    order; a branch is cut once its support can no longer beat the best.
    """
    words = sorted(dual_codewords(code, cap)[1:])
    r = code.r
    work = sum(comb(len(words), i) for i in range(1, r + 1))
    check_cap("subspace enumeration", work, cap)

    best = [code.n + 1] * (r + 1)

    def grow(start: int, spanned: set[int], support: int, dim: int) -> None:
        size = support.bit_count()
        if dim:
            best[dim] = min(best[dim], size)
        if dim == r:
            return
        for idx in range(start, len(words)):
            w = words[idx]
            if w in spanned:
                continue
            union = support | w
            # supports only grow, so nothing below can beat the current best
            if all(union.bit_count() >= best[j] for j in range(dim + 1, r + 1)):
                continue
            grow(idx + 1, spanned | {s ^ w for s in spanned}, union, dim + 1)

    grow(0, {0}, 0, 0)
    return best[1:]


def oa_strength_holds(code: LinearCode, t: int, cap: int = DEFAULT_CAP) -> bool:
    """True iff every coset projects uniformly onto every t coordinates."""
    if not 0 <= t <= code.n:
        raise ValueError(f"t must be in 0..{code.n}")
    if t == 0:
        return True
    check_cap("coordinate subsets", comb(code.n, t) << t, cap)
    if t > code.k:
        # 2^k elements cannot cover 2^t patterns
        return False
    expected = 1 << (code.k - t)
    subsets = np.array(list(combinations(range(code.n), t)), dtype=np.int64)
    # bound the (coset x subsets x t) intermediate to a few million entries
    chunk = max(1, (1 << 22) // ((1 << code.k) * t))
    for m in all_messages(code):
        coset = coset_ints(code, m, cap)
        bits = np.array([[(x >> j) & 1 for j in range(code.n)] for x in coset], dtype=np.int64)
        for start in range(0, len(subsets), chunk):
            block = subsets[start : start + chunk]
            patterns = np.zeros((len(coset), len(block)), dtype=np.int64)
            for pos in range(t):
                patterns |= bits[:, block[:, pos]] << pos
            keyed = patterns + (np.arange(len(block)) << t)
            counts = np.bincount(keyed.ravel(), minlength=len(block) << t)
            if (counts != expected).any():
                return False
    return True


@dataclass(frozen=True)
class CodeProfile:
    n: int
    k: int
    r: int
    d: int | None  # None when the code is {0}
    d_dual: int
    ghw: tuple[int, ...]
    nm_threshold: int

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ghw"] = list(self.ghw)
        return out


def profile(code: LinearCode, cap: int = DEFAULT_CAP) -> CodeProfile:
    d_dual = dual_distance(code, cap)
    return CodeProfile(
        n=code.n,
        k=code.k,
        r=code.r,
        d=min_distance(code, cap) if code.k else None,
        d_dual=d_dual,
        ghw=tuple(generalized_weights(code, cap)),
        nm_threshold=code.n - d_dual,
    )
