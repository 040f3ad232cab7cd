import hypothesis.strategies as st
import pytest
from hypothesis import given

from cubeball.bits import BitVector, distance
from cubeball.chains import (
    ChainCode,
    chain_code,
    chain_member,
    chain_members,
    mark,
    mark_reference,
    mark_via_split,
    position,
)
from cubeball.errors import LevelRangeError

from strategies import bit_vectors


def test_mark_worked_example():
    ms = mark(BitVector.parse("01100110"))
    assert ms.marked_coordinates() == (2, 3, 4, 5, 7, 8)
    assert ms.bits == (0, 1, 1, 0, 0, 1, 1, 0)


def test_mark_nothing_to_mark():
    assert mark(BitVector.parse("0011")).marked_coordinates() == ()


def test_mark_everything_marked():
    # the inner pair goes first, then the outer bits become adjacent
    assert mark(BitVector.parse("1100")).marked_coordinates() == (1, 2, 3, 4)


@pytest.mark.parametrize(
    "text,code",
    [("01100110", "_1100_10"), ("0011", "____"), ("10", "10")],
)
def test_chain_code_examples(text, code):
    assert str(chain_code(BitVector.parse(text))) == code


@pytest.mark.parametrize(
    "text,k,j,ell",
    [("01100110", 3, 4, 1), ("1111", 0, 4, 0), ("0000", 0, 0, 4)],
)
def test_position_examples(text, k, j, ell):
    pos = position(BitVector.parse(text))
    assert (pos.k, pos.j, pos.ell) == (k, j, ell)


@pytest.mark.parametrize(
    "code,j,expected",
    [("_1100_10", 3, "01100010"), ("_1100_10", 5, "11100110"), ("____", 2, "0011")],
)
def test_chain_member_examples(code, j, expected):
    assert chain_member(ChainCode(code), j).render() == expected


def test_chain_member_level_out_of_range():
    with pytest.raises(LevelRangeError):
        chain_member(ChainCode("_1100_10"), 2)
    with pytest.raises(LevelRangeError):
        chain_member(ChainCode("_1100_10"), 6)


def test_chain_members_examples():
    code = ChainCode("_1100_10")
    members = chain_members(code)
    assert [m.render() for m in members] == ["01100010", "01100110", "11100110"]
    assert code.length() == len(members)
    assert [m.render() for m in chain_members(ChainCode("1010"))] == ["1010"]
    assert [m.render() for m in chain_members(ChainCode("____"))] == [
        "0000",
        "0001",
        "0011",
        "0111",
        "1111",
    ]


@pytest.mark.parametrize("bad", ["", "01x", "_0", "1___", "0110"])
def test_chain_code_rejects_invalid(bad):
    # wrong alphabet, blank-count parity, or unbalanced fixed symbols
    with pytest.raises(ValueError):
        ChainCode(bad)


@given(bit_vectors(max_n=48))
def test_unmarked_bits_read_zeros_then_ones(v):
    ms = mark(v)
    pattern = [b for b, m in zip(ms.bits, ms.marked) if not m]
    assert pattern == sorted(pattern)
    marked_bits = [b for b, m in zip(ms.bits, ms.marked) if m]
    assert marked_bits.count(0) == marked_bits.count(1)


@given(bit_vectors(max_n=24))
def test_mark_matches_both_reference_orders(v):
    base = mark(v)
    assert mark_reference(v) == base
    assert mark_reference(v, rightmost_first=True) == base


@pytest.mark.parametrize("n", range(1, 11))
def test_mark_matches_reference_exhaustive(n):
    for value in range(1 << n):
        v = BitVector(n, value)
        base = mark(v)
        assert mark_reference(v) == base
        assert mark_reference(v, rightmost_first=True) == base


@given(st.data())
def test_three_step_marking_matches_direct(data):
    v = data.draw(bit_vectors(max_n=40))
    i = data.draw(st.integers(1, v.n))
    assert mark_via_split(v, i) == mark(v)


@given(bit_vectors(max_n=48))
def test_position_chain_member_roundtrip(v):
    pos = position(v)
    assert pos.k == pos.code.k
    assert pos.ell == (v.n - pos.k) - pos.j
    assert chain_member(pos.code, v.weight()) == v


@given(bit_vectors(max_n=32))
def test_chains_are_monotone_symmetric(v):
    code = chain_code(v)
    members = chain_members(code)
    k = code.k
    assert [m.weight() for m in members] == list(range(k, v.n - k + 1))
    flipped = []
    for lower, upper in zip(members, members[1:]):
        assert distance(lower, upper) == 1
        flipped.append(v.n - (lower.value ^ upper.value).bit_length() + 1)
    # blanks fill left to right with 0, so climbing flips strictly
    # right-to-left: coordinate indices strictly decrease going up
    assert all(a > b for a, b in zip(flipped, flipped[1:]))


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12, 14])
def test_chains_partition_the_cube(n):
    by_code: dict[str, set[int]] = {}
    for value in range(1 << n):
        v = BitVector(n, value)
        by_code.setdefault(str(chain_code(v)), set()).add(value)
    total = 0
    for code_str, values in by_code.items():
        members = {m.value for m in chain_members(ChainCode(code_str))}
        assert members == values
        total += len(values)
    assert total == 1 << n
