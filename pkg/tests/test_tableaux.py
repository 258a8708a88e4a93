from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import central_cumulants
from qhook.errors import (
    DegenerateDistribution,
    EmptyPartition,
    InstanceTooLarge,
    LengthExceedsM,
    ParseError,
    SingleLevel,
)
from qhook.exactpoly import cgf_cumulant, check_symmetry, check_unimodal, expand_cgf
from qhook.tableaux import (
    Partition,
    aft,
    classify_ssyt,
    contents,
    distance_profile,
    enumerate_pp,
    enumerate_ssyt,
    enumerate_syt,
    exp_notation,
    first_column_reduction,
    hooks,
    parse_partition,
    pp_rank_offset,
    pp_size_cgf,
    rank_min,
    rectangle,
    ssyt_cumulant,
    ssyt_rank_cgf_hookcontent,
    ssyt_rank_cgf_weyl,
    staircase,
    syt_maj_cgf,
    weft,
)

partitions = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(lambda p: Partition(tuple(sorted(p, reverse=True))))


def test_partition_basics():
    lam = parse_partition("3,1,0,0")
    assert lam.parts == (3, 1) and lam.size == 4 and lam.length == 2
    assert lam.conjugate.parts == (2, 1, 1)
    assert lam.padded(4) == (3, 1, 0, 0)
    assert str(lam.scaled(10)) == "30,10"
    with pytest.raises(LengthExceedsM):
        lam.padded(1)


@pytest.mark.parametrize("text", ["3,a", "1,2", "3,-1"])
def test_parse_partition_errors(text):
    with pytest.raises(ParseError):
        parse_partition(text)


@given(partitions)
def test_conjugation_is_an_involution(lam):
    assert lam.conjugate.conjugate == lam
    assert lam.conjugate.size == lam.size


def test_hooks_and_contents():
    assert hooks((3, 1)) == (4, 2, 1, 1)
    assert contents((3, 1)) == (2, 1, 0, -1)
    assert rank_min((8, 4, 3, 1, 1)) == 4 + 6 + 3 + 4


def test_hook_content_polynomial_for_3_1():
    p = expand_cgf(ssyt_rank_cgf_hookcontent((3, 1), 4))
    assert p.offset == 1
    assert p.coeffs == (1, 2, 4, 5, 7, 7, 7, 5, 4, 2, 1)


def test_syt_counts():
    assert expand_cgf(syt_maj_cgf((3, 2))).mass == 5
    assert len(enumerate_syt(Partition((3, 2)))) == 5


def test_pp_222_has_20_elements():
    assert expand_cgf(pp_size_cgf(2, 2, 2)).mass == 20
    assert len(enumerate_pp(2, 2, 2)) == 20


def test_enumeration_guards():
    with pytest.raises(InstanceTooLarge):
        enumerate_syt(Partition((6, 5)))
    with pytest.raises(InstanceTooLarge):
        enumerate_pp(3, 3, 4)


def test_empty_partition_rejected():
    with pytest.raises(EmptyPartition):
        syt_maj_cgf(Partition())
    with pytest.raises(EmptyPartition):
        aft(Partition())


@settings(max_examples=40, deadline=None)
@given(partitions, st.integers(0, 2))
def test_weyl_and_hookcontent_agree(lam, extra):
    m = lam.length + extra
    assert expand_cgf(ssyt_rank_cgf_weyl(lam, m)) == expand_cgf(ssyt_rank_cgf_hookcontent(lam, m))


@settings(max_examples=40, deadline=None)
@given(partitions, st.integers(0, 3), st.integers(1, 6))
def test_fast_cumulant_matches_cgf(lam, extra, d):
    m = lam.length + extra
    g = ssyt_rank_cgf_weyl(lam, m)
    assert ssyt_cumulant(lam, m, d) == cgf_cumulant(g, d)
    assert ssyt_cumulant(lam, m, d, form="hookcontent") == cgf_cumulant(g, d)


@settings(max_examples=25, deadline=None)
@given(partitions)
def test_syt_cumulants_match_enumeration(lam):
    from qhook.exactpoly import DensePoly

    if lam.size > 9:
        return
    brute = DensePoly.from_exponents(v for _, v in enumerate_syt(lam))
    assert [cgf_cumulant(syt_maj_cgf(lam), d) for d in range(1, 5)] == central_cumulants(brute)


@settings(max_examples=25, deadline=None)
@given(partitions, st.integers(0, 2))
def test_ssyt_distribution_is_symmetric_unimodal(lam, extra):
    p = expand_cgf(ssyt_rank_cgf_weyl(lam, lam.length + extra))
    assert check_symmetry(p) and check_unimodal(p)


@pytest.mark.parametrize("a,b,c", [(1, 1, 1), (2, 2, 2), (2, 3, 1), (3, 2, 2), (3, 3, 2), (1, 4, 5)])
def test_pp_complement_bijection_constant(a, b, c):
    pp = expand_cgf(pp_size_cgf(a, b, c))
    ss = expand_cgf(ssyt_rank_cgf_weyl(rectangle(a, b), a + c))
    K = pp_rank_offset(a, b, c)
    assert pp.mass == ss.mass
    assert all(pp.coefficient(k) == ss.coefficient(K - k - a * b) for k in range(a * b * c + 1))


def test_first_column_reduction_only_shifts():
    lam, m = Partition((5, 4, 2)), 3
    red = first_column_reduction(lam, m)
    assert red.parts == (3, 2)
    a, b = expand_cgf(ssyt_rank_cgf_weyl(lam, m)), expand_cgf(ssyt_rank_cgf_weyl(red, m))
    assert a.coeffs == b.coeffs


def test_aft_and_exponential_notation():
    assert aft((3, 1)) == 1
    assert aft((2, 2)) == 2
    ex = exp_notation(rectangle(3, 3), 103)
    assert ex.levels == ((3, 3), (0, 100)) and ex.k == 2 and ex.e2 == 3
    single = exp_notation(rectangle(2, 2), 2)
    assert single.k == 1 and single.e2 == 0


@pytest.mark.parametrize("N", range(3, 11))
def test_weft_staircase_closed_form(N):
    assert weft(staircase(N), N) == Fraction(N * N * (N + 1), 24 * (N - 1))


def test_weft_needs_two_levels():
    with pytest.raises(SingleLevel):
        weft(rectangle(2, 3), 2)


def test_distance_profile_example():
    prof = distance_profile((8, 4, 3, 1, 1), 7)
    rows = (8, 4, 3, 1, 1, 0, 0)
    diffs = [a - b for a, b in combinations(rows, 2)]
    assert prof.power_sum(2) == sum(x**2 for x in diffs) == 348
    assert prof.power_sum(4) == sum(x**4 for x in diffs) == 14748
    assert Counter(prof.integer_delta.entries) == Counter(diffs)
    assert prof.standardized_cumulant(4) == Fraction(-6, 5) * Fraction(14748, 348**2) == Fraction(-1229, 8410)
    assert prof.standardized_cumulant(3) == 0


@settings(max_examples=40, deadline=None)
@given(partitions, st.integers(0, 3), st.integers(2, 12))
def test_distance_profile_is_scale_invariant(lam, extra, c):
    m = lam.length + extra
    if len(set(lam.padded(m))) < 2:
        return
    a, b = distance_profile(lam, m), distance_profile(lam.scaled(c), m)
    assert a.standardized_cumulant(4) == b.standardized_cumulant(4)
    assert a.standardized_cumulant(6) == b.standardized_cumulant(6)


def test_scaled_ssyt_cumulant_approaches_distance_limit():
    lam = Partition((8, 4, 3, 1, 1))
    limit = float(distance_profile(lam, 7).standardized_cumulant(4))
    errors = []
    for c in (1, 10, 100, 1000):
        big = lam.scaled(c)
        k2, k4 = ssyt_cumulant(big, 7, 2), ssyt_cumulant(big, 7, 4)
        errors.append(abs(float(k4 / k2**2) - limit))
    assert errors == sorted(errors, reverse=True)


def test_degenerate_distance_profile():
    with pytest.raises(DegenerateDistribution):
        distance_profile(rectangle(2, 2), 2).standardized_cumulant(4)


def test_classify_rectangle_reports_median():
    rep = classify_ssyt(rectangle(3, 3), 103).to_json()
    assert rep["rectangle"]["median"] == 3 and rep["rectangle"]["ab"] == 9
    rep = classify_ssyt(Partition((2, 1)), 3)
    assert rep.weft == weft((2, 1), 3) and rep.k == 3


def test_enumerate_ssyt_rank_definition():
    # shape (1) with m = 3: entries 1, 2, 3 have ranks 0, 1, 2
    assert sorted(r for _, r in enumerate_ssyt(Partition((1,)), 3)) == [0, 1, 2]
