"""Tampering experiments on coset codes and non-malleability checks.

For a message ``s`` and a bit-wise function ``f``, the experiment encodes
``s`` into a uniformly random coset element, applies ``f`` and decodes.  The
exact routines enumerate the whole coset; the message-independent simulator
``df_exact`` enumerates fair coin flips on the coordinates ``f`` lets through.
A code is certified non-malleable for ``f`` when every message yields the
same distribution (statistical distance exactly 0).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .analysis import dual_codewords, dual_distance
from .codes import LinearCode
from .coset import all_messages, coset_ints, particular_solution
from .distributions import ExactDistribution, format_fraction, mutual_information, statistical_distance
from .errors import DEFAULT_CAP, NotErrorOnlyError, ShapeError, check_cap
from .gf2 import BitVector, span
from .tamper import BitAction, TamperFunction, enumerate_family, format_tamper

SAME_WITNESS = "same_witness"
CONSTANT_WITNESS = "constant_distribution_witness"
NOT_PROVEN = "not_proven"


def _check_lengths(code: LinearCode, f: TamperFunction, s: BitVector | None = None) -> None:
    if f.n != code.n:
        raise ShapeError(f"tamper function has length {f.n}, code has n = {code.n}")
    if s is not None and s.length != code.r:
        raise ShapeError(f"message has length {s.length}, code expects r = {code.r}")


def _tamper_counts(code: LinearCode, f: TamperFunction, s: BitVector, cap: int) -> Counter:
    counts: Counter = Counter()
    for x in coset_ints(code, s, cap):
        counts[code.syndrome_int(f.apply_int(x))] += 1
    return counts


def _as_distribution(code: LinearCode, counts: Counter) -> ExactDistribution:
    return ExactDistribution({BitVector(code.r, v): c for v, c in counts.items()})


def tamper_exact(code: LinearCode, f: TamperFunction, s: BitVector, cap: int = DEFAULT_CAP) -> ExactDistribution:
    """Exact law of decode(f(x)) for x uniform over the coset of s."""
    _check_lengths(code, f, s)
    return _as_distribution(code, _tamper_counts(code, f, s, cap))


def df_exact(code: LinearCode, f: TamperFunction, cap: int = DEFAULT_CAP) -> ExactDistribution:
    """Simulator: H eps + H e + sum of h_i K_i over keep/flip coordinates, K_i fair bits."""
    _check_lengths(code, f)
    free = [i for i, a in enumerate(f.actions) if not a.is_constant]
    check_cap("simulator assignments", 1 << len(free), cap)
    offset = code.syndrome_int(f.one_mask) ^ code.syndrome_int(f.flip_mask)
    counts = Counter(offset ^ v for v in span([code.columns[i] for i in free]))
    return _as_distribution(code, counts)


def tamper_sampled(
    code: LinearCode,
    f: TamperFunction,
    s: BitVector,
    rng: np.random.Generator | int,
    trials: int,
) -> ExactDistribution:
    """Monte-Carlo counts of encode -> tamper -> decode over ``trials`` runs."""
    _check_lengths(code, f, s)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(rng)
    x0 = particular_solution(code, s).to_array().astype(np.int64)
    if code.k:
        basis = np.array([v.to_array() for v in code.kernel_basis], dtype=np.int64)
        coeffs = rng.integers(0, 2, size=(trials, code.k), dtype=np.int64)
        words = (coeffs @ basis + x0) % 2
    else:
        words = np.tile(x0, (trials, 1))
    keep = np.array([a is not BitAction.ZERO and a is not BitAction.ONE for a in f.actions], dtype=np.int64)
    add = np.array([a in (BitAction.FLIP, BitAction.ONE) for a in f.actions], dtype=np.int64)
    tampered = (words * keep + add) % 2
    syndromes = (tampered @ code.H.to_array().astype(np.int64).T) % 2
    rows, counts = np.unique(syndromes, axis=0, return_counts=True)
    return ExactDistribution({BitVector.from_bits(row.tolist()): int(c) for row, c in zip(rows, counts)})


def _per_message(code: LinearCode, f: TamperFunction, cap: int) -> dict[int, Counter]:
    check_cap("tampering experiment (messages x coset)", 1 << code.n, cap)
    return {m.value: _tamper_counts(code, f, m, cap) for m in all_messages(code)}


def _leakage_from_counts(per_message: dict[int, Counter]) -> float:
    joint = {(m, out): c for m, counts in per_message.items() for out, c in counts.items()}
    return mutual_information(joint)


def _classify(code: LinearCode, dists: dict[int, ExactDistribution]) -> str:
    if all(d.is_point_mass(BitVector(code.r, m)) for m, d in dists.items()):
        return SAME_WITNESS
    first = next(iter(dists.values()))
    if all(d == first for d in dists.values()):
        return CONSTANT_WITNESS
    return NOT_PROVEN


@dataclass
class NmReport:
    code: str
    n: int
    k: int
    r: int
    d_dual: int
    tamper: str
    fixed_count: int
    condition_met: bool
    per_message: dict[BitVector, ExactDistribution]
    df: ExactDistribution
    max_sd: Fraction
    leakage_bits: float
    witness: str

    @property
    def nm_threshold(self) -> int:
        return self.n - self.d_dual

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "d_dual": self.d_dual,
            "nm_threshold": self.nm_threshold,
            "tamper": self.tamper,
            "fixed_count": self.fixed_count,
            "condition_met": self.condition_met,
            "max_sd": format_fraction(self.max_sd),
            "leakage_bits": self.leakage_bits,
            "witness": self.witness,
            "per_message": {str(m): d.to_dict() for m, d in sorted(self.per_message.items(), key=lambda t: str(t[0]))},
            "df": self.df.to_dict(),
        }


def verify_theorem(code: LinearCode, f: TamperFunction, cap: int = DEFAULT_CAP) -> NmReport:
    _check_lengths(code, f)
    d_dual = dual_distance(code, cap)
    counts = _per_message(code, f, cap)
    dists = {m: _as_distribution(code, c) for m, c in counts.items()}
    df = df_exact(code, f, cap)
    return NmReport(
        code=code.name,
        n=code.n,
        k=code.k,
        r=code.r,
        d_dual=d_dual,
        tamper=format_tamper(f),
        fixed_count=f.fixed_count,
        condition_met=f.fixed_count > code.n - d_dual,
        per_message={BitVector(code.r, m): d for m, d in dists.items()},
        df=df,
        max_sd=max(statistical_distance(d, df) for d in dists.values()),
        leakage_bits=_leakage_from_counts(counts),
        witness=_classify(code, dists),
    )


def error_only_offset(code: LinearCode, f: TamperFunction) -> BitVector:
    """Constant syndrome shift H e of a keep/flip-only function."""
    _check_lengths(code, f)
    if not f.is_error_only:
        raise NotErrorOnlyError(f"{format_tamper(f)} contains set-to-constant actions")
    return BitVector(code.r, code.syndrome_int(f.flip_mask))


def leakage_bits(code: LinearCode, f: TamperFunction, cap: int = DEFAULT_CAP) -> float:
    """I(M; M~) in bits for M uniform over all messages."""
    _check_lengths(code, f)
    return _leakage_from_counts(_per_message(code, f, cap))


def tightness_witness(code: LinearCode, cap: int = DEFAULT_CAP) -> tuple[TamperFunction, BitVector]:
    """Keep the support of a minimum-weight dual word, zero the rest.

    The function fixes exactly n - d_dual coordinates, one short of the
    non-malleability condition, and the parity ``lam . m`` survives it.
    Picks the first such word with the row-combination ``lam`` taken in
    counter order (bit i of ``lam`` selects row i of H).
    """
    words = dual_codewords(code, cap)
    d_dual = min(w.bit_count() for w in words[1:])
    lam = next(i for i in range(1, len(words)) if words[i].bit_count() == d_dual)
    support = words[lam]
    actions = tuple(BitAction.KEEP if (support >> i) & 1 else BitAction.ZERO for i in range(code.n))
    return TamperFunction(actions), BitVector(code.r, lam)


def wiretap_leakage(code: LinearCode, positions: Iterable[int], cap: int = DEFAULT_CAP) -> float:
    """I(M; X restricted to ``positions``) in bits; positions are 0-based."""
    positions = sorted(set(positions))
    if any(not 0 <= p < code.n for p in positions):
        raise ShapeError(f"positions must lie in 0..{code.n - 1}")
    check_cap("wiretap enumeration (messages x coset)", 1 << code.n, cap)
    joint: Counter = Counter()
    for m in all_messages(code):
        for x in coset_ints(code, m, cap):
            seen = tuple((x >> p) & 1 for p in positions)
            joint[(m.value, seen)] += 1
    return mutual_information(joint)


@dataclass
class SweepSummary:
    code: str
    n: int
    d_dual: int
    min_fixed: int
    total: int
    zero_sd_count: int
    condition_met_count: int
    max_sd: Fraction
    worst_tamper: str | None

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "n": self.n,
            "d_dual": self.d_dual,
            "nm_threshold": self.n - self.d_dual,
            "min_fixed": self.min_fixed,
            "total": self.total,
            "zero_sd_count": self.zero_sd_count,
            "condition_met_count": self.condition_met_count,
            "max_sd": format_fraction(self.max_sd),
            "worst_tamper": self.worst_tamper,
        }


def max_sd(code: LinearCode, f: TamperFunction, cap: int = DEFAULT_CAP) -> Fraction:
    """Largest distance between a message's tampering law and the simulator."""
    _check_lengths(code, f)
    df = df_exact(code, f, cap)
    return max(
        statistical_distance(_as_distribution(code, c), df) for c in _per_message(code, f, cap).values()
    )


def sweep(code: LinearCode, min_fixed: int, cap: int = DEFAULT_CAP) -> SweepSummary:
    """max_sd for every function with at least ``min_fixed`` constant actions.

    ``worst_tamper`` is the first function (in enumeration order) attaining
    the largest distance, or None when every distance is 0.
    """
    d_dual = dual_distance(code, cap)
    total = zero = met = 0
    worst, worst_f = Fraction(0), None
    for f in enumerate_family(code.n, min_fixed, cap):
        sd = max_sd(code, f, cap)
        total += 1
        zero += sd == 0
        met += f.fixed_count > code.n - d_dual
        if sd > worst:
            worst, worst_f = sd, format_tamper(f)
    return SweepSummary(code.name, code.n, d_dual, min_fixed, total, zero, met, worst, worst_f)
