import pytest
from hypothesis import given, settings, strategies as st

from eulerparts.enumeration import CongruenceFilter, parse_bounds
from eulerparts.partition import Partition
from eulerparts.series import (
    ABCD,
    ALT_BY_WEIGHT,
    AB,
    FOUR_PARAM,
    HALF_CELLS,
    ODD_BY_WEIGHT,
    ROW_TOTALS,
    TO_ALT,
    TO_ODD,
    WEIGHTS,
    XQ,
    FactorSpec,
    Series,
    SeriesComparison,
    alt_weight,
    binary_gf,
    boulet_product,
    enumerated_series,
    finite_factors,
    four_param_weight,
    half_cells_product,
    half_cells_weight,
    odd_weight,
    pairing_gf,
    partition_gf,
    product_series,
    restricted_boulet_product,
    row_totals_product,
    row_totals_weight,
    series_equal,
    substitute,
)

import oracles


def naive_product(s1, s2):
    """Full convolution, then truncate — the reference for __mul__."""
    out = {}
    for e1, c1 in s1.terms.items():
        for e2, c2 in s2.terms.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return Series(s1.names, s1.trunc, out, s1.degree_index)


@st.composite
def series_tuples(draw, count):
    """Draw ``count`` series sharing one truncation metric; the q-only metric
    additionally allows negative x exponents."""
    by_q = draw(st.booleans())
    exps = st.tuples(st.integers(-4 if by_q else 0, 7), st.integers(0, 7))
    terms = st.dictionaries(exps, st.integers(-5, 5), max_size=8)
    index = 1 if by_q else None
    return tuple(Series(XQ, 6, draw(terms), index) for _ in range(count))


# -- core arithmetic -------------------------------------------------------

def test_construction_truncates_and_drops_zeros():
    s = Series(XQ, 3, {(1, 1): 2, (2, 2): 5, (0, 0): 0})
    assert s.terms == {(1, 1): 2}
    assert s.coefficient((2, 2)) == 0
    assert s.coefficient((1, 1)) == 2


def test_construction_validates():
    with pytest.raises(ValueError):
        Series(XQ, -1)
    with pytest.raises(ValueError):
        Series(XQ, 4, {(1,): 1})
    with pytest.raises(ValueError):
        Series(XQ, 4, {(-1, 0): 1})  # negative total degree
    with pytest.raises(ValueError):
        Series(XQ, 4, None, degree_index=2)
    # negative x is fine when only q is the truncation metric
    s = Series(XQ, 4, {(-3, 2): 1}, degree_index=1)
    assert s.coefficient((-3, 2)) == 1


def test_zero_one_and_scalars():
    one = Series.one(XQ, 5)
    zero = Series.zero(XQ, 5)
    assert one.coefficient((0, 0)) == 1
    assert zero.terms == {}
    s = Series(XQ, 5, {(1, 2): 3})
    assert s + 0 == s
    assert (s + 1).coefficient((0, 0)) == 1
    assert s * 1 == s
    assert (s * 0) == zero
    assert 2 * s == s + s


def test_incompatible_series_raise():
    with pytest.raises(ValueError):
        Series(XQ, 5) + Series(XQ, 6)
    with pytest.raises(ValueError):
        Series(XQ, 5) * Series(AB, 5)
    with pytest.raises(ValueError):
        Series(XQ, 5) + Series(XQ, 5, None, degree_index=1)


def test_items_sorted_by_total_degree_then_lex():
    s = Series(XQ, 9, {(3, 0): 1, (0, 2): 2, (1, 1): 3, (0, 0): 4})
    assert [e for e, _ in s.items()] == [(0, 0), (0, 2), (1, 1), (3, 0)]


def test_str_smoke():
    s = Series(XQ, 5, {(0, 0): 1, (1, 2): -2})
    text = str(s)
    assert "1" in text and "x^1*q^2" in text
    assert str(Series.zero(XQ, 5)) == "0"


@given(series_tuples(2))
def test_multiplication_matches_naive_convolution(pair):
    s1, s2 = pair
    assert s1 * s2 == naive_product(s1, s2)


@given(series_tuples(3))
def test_ring_axioms(triple):
    s1, s2, s3 = triple
    assert s1 + s2 == s2 + s1
    assert (s1 + s2) + s3 == s1 + (s2 + s3)
    assert s1 * s2 == s2 * s1
    assert (s1 * s2) * s3 == s1 * (s2 * s3)
    assert s1 * (s2 + s3) == s1 * s2 + s1 * s3
    assert s1 - s1 == Series.zero(s1.names, s1.trunc, s1.degree_index)
    assert -(-s1) == s1
    one = Series.one(s1.names, s1.trunc, s1.degree_index)
    assert s1 * one == s1


# -- comparison ------------------------------------------------------------

def test_series_equal_reports_first_difference():
    s1 = Series(XQ, 9, {(0, 0): 1, (1, 1): 2, (0, 3): 7})
    s2 = Series(XQ, 9, {(0, 0): 1, (1, 1): 5, (0, 3): 9})
    cmp = series_equal(s1, s2)
    assert not cmp
    assert cmp == SeriesComparison(False, (1, 1), 2, 5)
    assert bool(series_equal(s1, s1))
    assert series_equal(s1, s1).exponents is None


# -- weights ----------------------------------------------------------------

def test_weight_functions_worked_example():
    p = Partition([5, 4, 4, 3, 2])
    assert four_param_weight(p) == (6, 5, 4, 3)
    assert row_totals_weight(p) == (11, 7)
    assert half_cells_weight(p) == (10, 8)
    assert alt_weight(p) == (4, 18)
    assert odd_weight(p) == (2, 18)
    empty = Partition([])
    for w in WEIGHTS.values():
        assert w.fn(empty) == (0,) * len(w.names)


@given(st.lists(st.integers(min_value=1, max_value=25), max_size=10))
def test_weight_exponents_sum_to_weight(parts):
    p = Partition(parts)
    n = p.weight()
    assert sum(four_param_weight(p)) == n
    assert sum(row_totals_weight(p)) == n
    assert sum(half_cells_weight(p)) == n
    assert alt_weight(p)[1] == n
    assert odd_weight(p)[1] == n


# -- enumerated series -------------------------------------------------------

def test_enumerated_series_counts_partitions():
    counts = oracles.pentagonal_counts(12)
    s = enumerated_series(12, ALT_BY_WEIGHT)
    for n in range(13):
        assert sum(c for (x, q), c in s.terms.items() if q == n) == counts[n]
    assert s.coefficient((0, 0)) == 1
    assert enumerated_series(6, ALT_BY_WEIGHT, include_empty=False).coefficient((0, 0)) == 0


def test_enumerated_series_matches_independent_generator():
    bounds = parse_bounds("all:3")
    want = {}
    for n in range(11):
        for parts in oracles.descending_partitions(n):
            p = Partition(parts)
            if not bounds.admits(p):
                continue
            e = four_param_weight(p)
            want[e] = want.get(e, 0) + 1
    got = enumerated_series(10, FOUR_PARAM, bounds)
    assert got.terms == want


def test_substitution_connects_the_weights():
    # a=b -> xq, c=d -> q/x turns the four-parameter weight into
    # x^(alternating sum) q^weight; a=c -> xq, b=d -> q/x into
    # x^(odd parts) q^weight.
    for spec in (None, "all:3", "even:1"):
        bounds = parse_bounds(spec) if spec else None
        four = enumerated_series(9, FOUR_PARAM, bounds)
        assert substitute(four, TO_ALT, XQ, 1) == enumerated_series(9, ALT_BY_WEIGHT, bounds)
        assert substitute(four, TO_ODD, XQ, 1) == enumerated_series(9, ODD_BY_WEIGHT, bounds)


def test_substitution_validates_images():
    four = enumerated_series(4, FOUR_PARAM)
    with pytest.raises(ValueError, match="no image"):
        substitute(four, {"a": (1, 1)}, XQ, 1)
    with pytest.raises(ValueError, match="degree 1"):
        substitute(four, {v: (0, 2) for v in ABCD}, XQ, 1)
    with pytest.raises(ValueError, match="arity"):
        substitute(four, {v: (1, 1, 0) for v in ABCD}, XQ, 1)


# -- products ----------------------------------------------------------------

def test_partition_gf_matches_recurrence():
    counts = oracles.pentagonal_counts(20)
    s = partition_gf(20)
    for n in range(21):
        assert s.coefficient((0, n)) == counts[n], n


def test_euler_function_expansion():
    # (q; q)_inf = sum (-1)^k q^(k(3k+-1)/2): sparse pentagonal signs
    s = product_series([FactorSpec(-1, lambda j: (0, j))], XQ, 15, degree_index=1)
    want = {(0, 0): 1, (0, 1): -1, (0, 2): -1, (0, 5): 1, (0, 7): 1,
            (0, 12): -1, (0, 15): -1}
    assert s.terms == want


def test_distinct_parts_product():
    # (-q; q)_inf counts partitions into distinct parts
    s = product_series([FactorSpec(1, lambda j: (0, j))], XQ, 14, degree_index=1)
    bounds = parse_bounds("all:1")
    for n in range(15):
        assert s.coefficient((0, n)) == oracles.bounded_count_dp(
            n, lambda size: 1), n


def test_product_series_validation():
    with pytest.raises(ValueError, match="sign"):
        product_series([FactorSpec(2, lambda j: (0, j))], XQ, 5, degree_index=1)
    with pytest.raises(ValueError, match="positive degree"):
        product_series([FactorSpec(1, lambda j: (0, 0))], XQ, 5, degree_index=1)
    with pytest.raises(ValueError, match="decreased"):
        product_series([finite_factors(1, [(0, 3), (0, 2)])], XQ, 5, degree_index=1)
    # an empty finite family is just 1
    assert product_series([finite_factors(1, [])], XQ, 5, degree_index=1) == Series.one(XQ, 5, 1)


def test_boulet_product_matches_enumeration():
    N = 10
    assert boulet_product(N) == enumerated_series(N, FOUR_PARAM)


@pytest.mark.parametrize("spec", ("all:3", "even:1", "1:1,3:5"))
def test_row_totals_product_matches_enumeration(spec):
    N = 12
    bounds = parse_bounds(spec)
    assert row_totals_product(bounds, N) == enumerated_series(N, ROW_TOTALS, bounds)


def test_row_totals_product_needs_even_strict_caps():
    with pytest.raises(ValueError, match="even caps"):
        row_totals_product(parse_bounds("all:2"), 10)


@pytest.mark.parametrize("spec", ("even:1", "all:2", "2:0,5:3", "all:0"))
def test_half_cells_product_matches_enumeration(spec):
    N = 12
    bounds = parse_bounds(spec)
    assert half_cells_product(bounds, N) == enumerated_series(N, HALF_CELLS, bounds)


# -- the progression-restricted product --------------------------------------

def test_restricted_product_validates():
    with pytest.raises(ValueError):
        restricted_boulet_product(2, 2, parse_bounds("all:inf"), 8)
    with pytest.raises(ValueError, match="outside the progression"):
        restricted_boulet_product(1, 2, parse_bounds("2:1"), 8)
    with pytest.raises(ValueError, match="even caps"):
        restricted_boulet_product(0, 1, parse_bounds("1:2"), 8)


@pytest.mark.parametrize("k, spec", ((1, "1:1,2:3"), (1, "all:1"), (2, "2:1"), (3, "3:3")))
def test_restricted_product_exact_for_residue_zero(k, spec):
    N = 14
    bounds = parse_bounds(spec)
    filt = CongruenceFilter(k, 0)
    enum = enumerated_series(N, FOUR_PARAM, bounds, filt)
    assert series_equal(enum, restricted_boulet_product(0, k, bounds, N))


def test_restricted_product_reduces_to_unrestricted():
    N = 10
    assert restricted_boulet_product(0, 1, parse_bounds("all:inf"), N) == boulet_product(N)


@pytest.mark.parametrize(
    "i, k, spec, first_diff",
    (
        (1, 2, "3:1,5:3", (2, 2, 0, 0)),
        (2, 3, "5:1,8:1", (3, 3, 0, 0)),
    ),
)
def test_restricted_product_off_by_shift_factor_for_nonzero_residue(i, k, spec, first_diff):
    # The product side carries a spurious (ab)^k monomial that no partition
    # in the enumerated family can produce.
    N = 12
    bounds = parse_bounds(spec)
    filt = CongruenceFilter(k, i, even_length=True, first_part_once=True)
    enum = enumerated_series(N, FOUR_PARAM, bounds, filt)
    cmp = series_equal(enum, restricted_boulet_product(i, k, bounds, N))
    assert not cmp
    assert cmp.exponents == first_diff
    assert (cmp.left, cmp.right) == (0, 1)


def test_restricted_enumerated_side_matches_independent_generator():
    # the i != 0 family: parts = i (mod k), even length, part i at most once
    i, k = 1, 2
    bounds = parse_bounds("3:1,5:3")
    filt = CongruenceFilter(k, i, even_length=True, first_part_once=True)
    want = {}
    for n in range(11):
        for parts in oracles.descending_partitions(n):
            p = Partition(parts)
            if not (bounds.admits(p) and filt.admits(p)):
                continue
            e = four_param_weight(p)
            want[e] = want.get(e, 0) + 1
    assert enumerated_series(10, FOUR_PARAM, bounds, filt).terms == want


# -- closed forms for the two bound-trading families --------------------------

@pytest.mark.parametrize("m", (0, 1))
def test_pairing_gf_three_ways(m):
    N = 12
    closed = pairing_gf(m, N)
    alt = enumerated_series(N, ALT_BY_WEIGHT, parse_bounds("all:%d" % (2 * m + 1)))
    odd = enumerated_series(N, ODD_BY_WEIGHT, parse_bounds("even:%d" % m))
    assert series_equal(closed, alt)
    assert series_equal(closed, odd)


@pytest.mark.parametrize("m", (0, 1))
def test_binary_gf_three_ways(m):
    N = 12
    closed = binary_gf(m, N)
    family = parse_bounds("even:%d" % (2 * m + 1))
    assert series_equal(closed, enumerated_series(N, ALT_BY_WEIGHT, family))
    assert series_equal(closed, enumerated_series(N, ODD_BY_WEIGHT, family))


def test_pairing_gf_known_coefficients():
    s = pairing_gf(1, 8)
    assert s.coefficient((0, 0)) == 1
    assert [s.coefficient((x, 7)) for x in (1, 3, 5, 7)] == [5, 4, 2, 1]
    with pytest.raises(ValueError):
        pairing_gf(-1, 8)
    with pytest.raises(ValueError):
        binary_gf(-1, 8)
