"""Bit-wise independent tampering functions.

A function is a string over ``k`` (keep), ``f`` (flip), ``0`` and ``1``, one
action per codeword coordinate.  Applied to a packed word ``c`` it equals
``(c & mask) ^ e ^ eps`` where ``mask`` marks keep/flip coordinates, ``e``
marks flips and ``eps`` marks set-to-one coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Iterator

from .errors import DEFAULT_CAP, FormatError, ShapeError, check_cap
from .gf2 import BitVector


class BitAction(Enum):
    KEEP = "k"
    FLIP = "f"
    ZERO = "0"
    ONE = "1"

    @property
    def is_constant(self) -> bool:
        return self in (BitAction.ZERO, BitAction.ONE)


ACTIONS = tuple(BitAction)


@dataclass(frozen=True)
class TamperStructure:
    """Coordinate sets (0-based) and the flip / set-to-one indicator vectors."""

    s_keep: frozenset[int]
    s_flip: frozenset[int]
    s_01: frozenset[int]
    e: BitVector
    eps: BitVector

    @property
    def fixed_count(self) -> int:
        return len(self.s_01)

    @property
    def free(self) -> frozenset[int]:
        return self.s_keep | self.s_flip


@dataclass(frozen=True)
class TamperFunction:
    actions: tuple[BitAction, ...]

    def __post_init__(self):
        if not self.actions:
            raise ShapeError("a tampering function needs at least one coordinate")

    @property
    def n(self) -> int:
        return len(self.actions)

    def _mask(self, *kinds: BitAction) -> int:
        return sum(1 << i for i, a in enumerate(self.actions) if a in kinds)

    @cached_property
    def pass_mask(self) -> int:
        return self._mask(BitAction.KEEP, BitAction.FLIP)

    @cached_property
    def flip_mask(self) -> int:
        return self._mask(BitAction.FLIP)

    @cached_property
    def one_mask(self) -> int:
        return self._mask(BitAction.ONE)

    @property
    def fixed_count(self) -> int:
        return sum(a.is_constant for a in self.actions)

    @property
    def is_error_only(self) -> bool:
        return self.fixed_count == 0

    def apply_int(self, c: int) -> int:
        return (c & self.pass_mask) ^ self.flip_mask ^ self.one_mask

    def __str__(self) -> str:
        return format_tamper(self)

    def __repr__(self) -> str:
        return f"TamperFunction({format_tamper(self)!r})"

    @classmethod
    def parse(cls, text: str) -> TamperFunction:
        return parse_tamper(text)


def parse_tamper(text: str) -> TamperFunction:
    lookup = {a.value: a for a in BitAction}
    actions = []
    for pos, ch in enumerate(text, start=1):
        if ch not in lookup:
            raise FormatError(f"invalid tamper action {ch!r}; expected one of k, f, 0, 1", position=pos)
        actions.append(lookup[ch])
    if not actions:
        raise FormatError("empty tamper string", position=1)
    return TamperFunction(tuple(actions))


def format_tamper(f: TamperFunction) -> str:
    return "".join(a.value for a in f.actions)


def apply(f: TamperFunction, c: BitVector) -> BitVector:
    if c.length != f.n:
        raise ShapeError(f"tamper function has length {f.n}, word has length {c.length}")
    out = 0
    for i, action in enumerate(f.actions):
        bit = (c.value >> i) & 1
        if action is BitAction.FLIP:
            bit ^= 1
        elif action is BitAction.ZERO:
            bit = 0
        elif action is BitAction.ONE:
            bit = 1
        out |= bit << i
    return BitVector(c.length, out)


def structure(f: TamperFunction) -> TamperStructure:
    by_kind: dict[BitAction, set[int]] = {a: set() for a in BitAction}
    for i, a in enumerate(f.actions):
        by_kind[a].add(i)
    return TamperStructure(
        s_keep=frozenset(by_kind[BitAction.KEEP]),
        s_flip=frozenset(by_kind[BitAction.FLIP]),
        s_01=frozenset(by_kind[BitAction.ZERO] | by_kind[BitAction.ONE]),
        e=BitVector(f.n, f.flip_mask),
        eps=BitVector(f.n, f.one_mask),
    )


def enumerate_family(n: int, min_fixed: int = 0, cap: int = DEFAULT_CAP) -> Iterator[TamperFunction]:
    """Every length-n function with at least ``min_fixed`` constant actions.

    Filters the full 4^n sweep in lexicographic order over (keep, flip, 0, 1).
    """
    if not 0 <= min_fixed <= n:
        raise ValueError(f"min_fixed must be in 0..{n}")
    check_cap("tamper family sweep", 4**n, cap)
    for actions in product(ACTIONS, repeat=n):
        if sum(a.is_constant for a in actions) >= min_fixed:
            yield TamperFunction(actions)
