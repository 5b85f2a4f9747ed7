import pytest
from hypothesis import given, strategies as st

from eulerparts.partition import EMPTY_TEXT, Partition

import oracles


part_lists = st.lists(st.integers(min_value=1, max_value=40), max_size=12)


def test_constructor_sorts_and_validates():
    assert Partition([1, 3, 2]).parts == (3, 2, 1)
    assert Partition([]).parts == ()
    assert Partition((5, 5, 5)).parts == (5, 5, 5)
    with pytest.raises(ValueError):
        Partition([0])
    with pytest.raises(ValueError):
        Partition([3, -1])
    with pytest.raises(ValueError):
        Partition([2.5])


@pytest.mark.parametrize(
    "text, parts",
    (
        ("7,2,1", (7, 2, 1)),
        ("1, 2, 3", (3, 2, 1)),
        ("2^5,4^4", (4, 4, 4, 4, 2, 2, 2, 2, 2)),
        ("(2^2,1^3)", (2, 2, 1, 1, 1)),
        ("", ()),
        ("∅", ()),
        ("  ∅  ", ()),
    ),
)
def test_parse(text, parts):
    assert Partition.parse(text).parts == parts


@pytest.mark.parametrize("bad", ("x", "3,0,1", "2^", "^3", "1,,2", "2^-1"))
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Partition.parse(bad)


def test_text_round_trip():
    p = Partition([7, 2, 1])
    assert str(p) == "7,2,1"
    assert repr(p) == "Partition([7, 2, 1])"
    assert str(Partition([])) == EMPTY_TEXT
    assert p.exponent_form() == "(7,2,1)"
    assert Partition([2, 2, 1, 1, 1]).exponent_form() == "(2^2,1^3)"
    assert Partition([]).exponent_form() == EMPTY_TEXT


@given(part_lists)
def test_parse_inverts_str(parts):
    p = Partition(parts)
    assert Partition.parse(str(p)) == p
    assert Partition.parse(p.exponent_form()) == p


def test_container_protocol():
    p = Partition([3, 1, 1])
    assert len(p) == 3
    assert list(p) == [3, 1, 1]
    assert p == Partition([1, 3, 1])
    assert p != Partition([3, 2])
    assert hash(p) == hash(Partition([1, 1, 3]))
    assert Partition([2, 1]) < Partition([3])
    assert sorted([Partition([3]), Partition([2, 1])]) == [
        Partition([2, 1]),
        Partition([3]),
    ]


# Statistics on a worked example: 7,4,4,3 has alternating sum
# 7-4+4-3 = 4, two odd parts, conjugate 4,4,4,3,1,1,1.
def test_statistics_worked_example():
    p = Partition([7, 4, 4, 3])
    assert p.weight() == 18
    assert p.alt_sum() == 4
    assert p.odd_count() == 2
    assert p.conjugate() == Partition([4, 4, 4, 3, 1, 1, 1])
    assert p.multiplicity(4) == 2
    assert p.multiplicity(5) == 0
    assert p.multiplicities() == {7: 1, 4: 2, 3: 1}
    assert p.largest_odd_part() == 7
    assert p.largest_odd_multiplicity_part() == 7


def test_statistics_edge_cases():
    empty = Partition([])
    assert empty.weight() == 0
    assert empty.alt_sum() == 0
    assert empty.odd_count() == 0
    assert empty.conjugate() == empty
    assert empty.largest_odd_part() == 0
    assert empty.largest_odd_multiplicity_part() == 0
    evens = Partition([4, 2, 2])
    assert evens.largest_odd_part() == 0
    assert evens.largest_odd_multiplicity_part() == 4
    assert Partition([4, 4, 2]).largest_odd_multiplicity_part() == 2
    assert Partition([4, 4, 2, 2]).largest_odd_multiplicity_part() == 0


@given(part_lists)
def test_statistics_match_oracle(parts):
    p = Partition(parts)
    assert p.weight() == sum(parts)
    assert p.alt_sum() == oracles.alternating_sum(p.parts)
    assert p.odd_count() == oracles.odd_part_count(p.parts)
    assert p.multiplicities() == dict(oracles.multiplicity_table(parts))


@given(part_lists)
def test_conjugate_involution(parts):
    p = Partition(parts)
    q = p.conjugate()
    assert q.conjugate() == p
    assert q.weight() == p.weight()
    if parts:
        assert len(q) == max(parts)
        assert q.parts[0] == len(p)


@given(part_lists)
def test_alt_sum_counts_odd_columns(parts):
    # Classical: the alternating sum equals the number of odd parts of the
    # conjugate (columns of odd height).
    p = Partition(parts)
    assert p.alt_sum() == p.conjugate().odd_count()
    assert p.alt_sum() >= 0


def test_multiplicities_ordered_descending():
    m = Partition([2, 5, 2, 9]).multiplicities()
    assert list(m) == [9, 5, 2]
