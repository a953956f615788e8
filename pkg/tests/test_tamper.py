from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nmcoset.errors import FormatError, TooLargeError
from nmcoset.gf2 import BitVector
from nmcoset.tamper import BitAction, apply, enumerate_family, format_tamper, parse_tamper, structure

from . import oracles

tamper_strings = st.integers(1, 8).flatmap(lambda n: st.text(alphabet="kf01", min_size=n, max_size=n))


@pytest.mark.parametrize(
    "f, c, expected",
    [("kkk", "101", "101"), ("000", "101", "000"), ("00k", "101", "001"), ("f1k0", "0011", "1110")],
)
def test_apply_examples(f, c, expected):
    assert str(apply(parse_tamper(f), BitVector.from_str(c))) == expected
    assert oracles.text(oracles.apply_tamper(f, oracles.bits(c))) == expected


def test_structure_examples():
    s = structure(parse_tamper("kkkk"))
    assert s.s_keep == {0, 1, 2, 3} and not s.s_flip and not s.s_01
    assert s.e.value == s.eps.value == 0 and s.fixed_count == 0

    s = structure(parse_tamper("00k"))
    assert s.s_01 == {0, 1} and s.s_keep == {2}
    assert str(s.e) == str(s.eps) == "000" and s.fixed_count == 2

    s = structure(parse_tamper("f1k"))
    assert s.s_flip == {0} and s.s_01 == {1} and s.s_keep == {2}
    assert str(s.e) == "100" and str(s.eps) == "010"


def test_parse_and_format():
    f = parse_tamper("kkkk")
    assert f.actions == (BitAction.KEEP,) * 4
    assert parse_tamper("00k").actions == (BitAction.ZERO, BitAction.ZERO, BitAction.KEEP)
    with pytest.raises(FormatError) as info:
        parse_tamper("x0k")
    assert info.value.position == 1
    with pytest.raises(FormatError):
        parse_tamper("")
    with pytest.raises(FormatError) as info:
        parse_tamper("k0K")
    assert info.value.position == 3


@given(tamper_strings)
def test_format_parse_round_trip(text):
    assert format_tamper(parse_tamper(text)) == text


def test_family_examples():
    assert [format_tamper(f) for f in enumerate_family(1, 1)] == ["0", "1"]
    assert sorted(format_tamper(f) for f in enumerate_family(2, 2)) == ["00", "01", "10", "11"]
    expected = sum(comb(7, j) * 2**j * 2 ** (7 - j) for j in range(4, 8))
    assert sum(1 for _ in enumerate_family(7, 4)) == expected == 8192


@pytest.mark.parametrize("n", range(1, 7))
def test_family_without_bound_is_everything(n):
    fs = [format_tamper(f) for f in enumerate_family(n, 0)]
    assert len(fs) == len(set(fs)) == 4**n


def test_family_order_is_lexicographic_in_action_order():
    order = {"k": 0, "f": 1, "0": 2, "1": 3}
    fs = [format_tamper(f) for f in enumerate_family(3, 1)]
    keys = [[order[c] for c in f] for f in fs]
    assert keys == sorted(keys)


def test_family_cap():
    with pytest.raises(TooLargeError):
        next(enumerate_family(11, 0))


@pytest.mark.parametrize("n", range(1, 6))
def test_idempotent_iff_no_flips(n):
    for f in enumerate_family(n, 0):
        idempotent = all(apply(f, apply(f, BitVector(n, c))) == apply(f, BitVector(n, c)) for c in range(1 << n))
        assert idempotent == (not structure(f).s_flip)


@settings(max_examples=200)
@given(tamper_strings)
def test_algebraic_normal_form(text):
    f = parse_tamper(text)
    s = structure(f)
    n = f.n
    mask = sum(1 << i for i in s.s_keep | s.s_flip)
    for c in range(1 << n):
        direct = apply(f, BitVector(n, c)).value
        assert direct == (c & mask) ^ s.e.value ^ s.eps.value == f.apply_int(c)
        assert oracles.text(oracles.apply_tamper(text, list(BitVector(n, c)))) == str(BitVector(n, direct))


@given(tamper_strings)
def test_structure_partitions_coordinates(text):
    s = structure(parse_tamper(text))
    assert s.s_keep | s.s_flip | s.s_01 == set(range(len(text)))
    assert len(s.s_keep) + len(s.s_flip) + len(s.s_01) == len(text)
    assert set(s.e.support()) == s.s_flip
    assert set(s.eps.support()) <= s.s_01
