"""Finite distributions with integer counts, so probabilities stay exact."""

from __future__ import annotations

import math
from collections import Counter
from enum import Enum
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Union

from .gf2 import BitVector


class Special(Enum):
    SAME = "_same_"
    BOTTOM = "_bottom_"


SAME = Special.SAME
BOTTOM = Special.BOTTOM

Outcome = Union[BitVector, Special]


def outcome_key(o: Outcome) -> str:
    return o.value if isinstance(o, Special) else str(o)


class ExactDistribution:
    """Probability mass ``mass[o] / total``; zero-count outcomes are dropped.

    Equality compares the probability measures, so distributions built from
    different totals can still be equal.
    """

    __slots__ = ("total", "mass")

    def __init__(self, mass: Mapping[Outcome, int], total: int | None = None):
        counts = {o: int(c) for o, c in mass.items() if c}
        if any(c < 0 for c in counts.values()):
            raise ValueError("counts must be nonnegative")
        s = sum(counts.values())
        if total is None:
            total = s
        if total <= 0 or s != total:
            raise ValueError(f"counts sum to {s}, expected positive total {total}")
        self.total = total
        self.mass = counts

    @classmethod
    def from_samples(cls, samples: Iterable[Outcome]) -> ExactDistribution:
        return cls(Counter(samples))

    @classmethod
    def point(cls, o: Outcome) -> ExactDistribution:
        return cls({o: 1})

    def probability(self, o: Outcome) -> Fraction:
        return Fraction(self.mass.get(o, 0), self.total)

    def support(self) -> set[Outcome]:
        return set(self.mass)

    def is_point_mass(self, o: Outcome | None = None) -> bool:
        if len(self.mass) != 1:
            return False
        return o is None or o in self.mass

    def items(self):
        """(outcome, probability) pairs sorted by serialized outcome."""
        return sorted(((o, self.probability(o)) for o in self.mass), key=lambda t: outcome_key(t[0]))

    def __eq__(self, other):
        if not isinstance(other, ExactDistribution):
            return NotImplemented
        if self.mass.keys() != other.mass.keys():
            return False
        return all(c * other.total == other.mass[o] * self.total for o, c in self.mass.items())

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{outcome_key(o)}: {p}" for o, p in self.items())
        return f"ExactDistribution({{{body}}})"

    def to_dict(self) -> dict[str, str]:
        return {outcome_key(o): format_fraction(p) for o, p in self.items()}


def format_fraction(p: Fraction) -> str:
    return f"{p.numerator}/{p.denominator}"


def statistical_distance(p: ExactDistribution, q: ExactDistribution) -> Fraction:
    """Total variation distance, exact: half the L1 distance of the mass functions."""
    outcomes = p.mass.keys() | q.mass.keys()
    # common denominator p.total * q.total keeps the sum in integers
    diff = sum(abs(p.mass.get(o, 0) * q.total - q.mass.get(o, 0) * p.total) for o in outcomes)
    return Fraction(diff, 2 * p.total * q.total)


def mutual_information(joint: Mapping[tuple[Hashable, Hashable], int]) -> float:
    """I(X; Y) in bits from a table of joint counts.

    Each term is ``p(x,y) * log2(p(x,y) / (p(x) p(y)))``; the ratio is formed
    from integer counts before taking the log, so power-of-two ratios are
    exact.  Zero cells contribute nothing.
    """
    total = sum(joint.values())
    if total <= 0:
        raise ValueError("empty joint table")
    px: Counter = Counter()
    py: Counter = Counter()
    for (x, y), c in joint.items():
        px[x] += c
        py[y] += c
    info = 0.0
    for (x, y), c in joint.items():
        if c:
            num, den = c * total, px[x] * py[y]
            info += c / total * (math.log2(num) - math.log2(den))
    return max(info, 0.0)
