import itertools
import random
from fractions import Fraction

import pytest

from fsingular.exceptions import ValidationError
from fsingular.fppoly import reduce_mod_bracket
from fsingular.p1pairs import (
    INFINITY,
    ZERO,
    finite_point,
    format_pair,
    is_globally_f_regular,
    is_globally_f_split,
    pair_product,
    parse_pair,
    parse_point,
)
from fsingular.p1pairs.pairs import permuted
from fsingular.types import INCONCLUSIVE_GFR_UP_TO, NOT_SPLIT_UP_TO, PROVEN_F_SPLIT, PROVEN_GFR, P1Pair

THREE_HALVES = "1/2@0,1/2@inf,1/2@1"


def three_point_pair(c):
    return P1Pair(points=[ZERO, INFINITY, finite_point(1)], coeffs=[Fraction(1, 2), Fraction(1, 2), Fraction(c)])


def test_parse_point():
    assert parse_point("0") == ZERO
    assert parse_point(" Inf ") == INFINITY
    assert parse_point("oo") == INFINITY
    assert parse_point("3") == finite_point(3)
    with pytest.raises(ValidationError):
        parse_point("north")


def test_parse_pair():
    pair = parse_pair(THREE_HALVES)
    assert pair.points == [ZERO, INFINITY, finite_point(1)]
    assert pair.coeffs == [Fraction(1, 2)] * 3
    assert format_pair(pair) == THREE_HALVES


@pytest.mark.parametrize("text", ["1/2@0,1/2@0", "1/2", "3/2@0", "1/2@north", "1/2@0@1"])
def test_parse_pair_errors(text):
    with pytest.raises(ValidationError):
        parse_pair(text)


def test_points_colliding_modulo_p():
    with pytest.raises(ValidationError):
        pair_product(parse_pair("1/2@1,1/2@4"), 1, 3)
    with pytest.raises(ValidationError):
        pair_product(parse_pair("1/2@0,1/2@3"), 1, 3)


def test_pair_product_example():
    g = pair_product(parse_pair(THREE_HALVES), 1, 3)
    assert g.terms == {(2, 1): 1, (1, 2): 2}


def test_pair_product_truncation():
    pair = parse_pair(THREE_HALVES)
    g = pair_product(pair, 2, 3, bound=8)
    assert not g.is_zero
    assert all(max(m) < 8 for m in g.monomials())
    assert g == reduce_mod_bracket(pair_product(pair, 2, 3), 8)
    assert pair_product(pair, 1, 3, bound=2).is_zero


def test_three_halves_at_three():
    pair = parse_pair(THREE_HALVES)
    split = is_globally_f_split(pair, 3, 4)
    assert split.status == PROVEN_F_SPLIT
    assert split.e == 1
    assert split.proven
    regular = is_globally_f_regular(pair, 3, 4)
    assert regular.status == PROVEN_GFR
    assert regular.e == 2
    assert regular.witness == (7, 5)


def test_three_halves_at_two():
    pair = parse_pair(THREE_HALVES)
    split = is_globally_f_split(pair, 2, 5)
    assert split.status == NOT_SPLIT_UP_TO
    assert split.e == 5
    assert not split.proven
    assert is_globally_f_regular(pair, 2, 5).status == INCONCLUSIVE_GFR_UP_TO


def test_two_points():
    regular = is_globally_f_regular(parse_pair("1/2@0,1/2@inf"), 2, 4)
    assert regular.status == PROVEN_GFR
    assert regular.e == 2


def test_mixed_coefficients():
    regular = is_globally_f_regular(parse_pair("1/2@0,2/3@inf,4/5@1"), 7, 4)
    assert regular.status == PROVEN_GFR
    assert regular.e == 3


@pytest.mark.parametrize("n", [2, 3, 5])
@pytest.mark.parametrize("p", [3, 5, 7])
def test_dichotomy_regular_away_from_two(n, p):
    assert is_globally_f_regular(three_point_pair(Fraction(n - 1, n)), p, 4).status == PROVEN_GFR


@pytest.mark.parametrize("n", [2, 3, 5])
def test_dichotomy_inconclusive_at_two(n):
    verdict = is_globally_f_regular(three_point_pair(Fraction(n - 1, n)), 2, 6)
    assert verdict.status == INCONCLUSIVE_GFR_UP_TO
    assert verdict.e == 6


def test_verdicts_ignore_point_order():
    rng = random.Random(19)
    for _ in range(20):
        p = rng.choice([3, 5, 7])
        coeffs = [Fraction(rng.randint(0, 6), 6) for _ in range(3)]
        pair = P1Pair(points=[ZERO, INFINITY, finite_point(1)], coeffs=coeffs)
        expected = is_globally_f_regular(pair, p, 3)
        for order in itertools.permutations(range(3)):
            verdict = is_globally_f_regular(permuted(pair, list(order)), p, 3)
            assert (verdict.status, verdict.e) == (expected.status, expected.e)


def test_regular_implies_split():
    rng = random.Random(23)
    for _ in range(40):
        p = rng.choice([2, 3, 5])
        coeffs = [Fraction(rng.randint(0, 4), 4) for _ in range(3)]
        pair = P1Pair(points=[ZERO, INFINITY, finite_point(1)], coeffs=coeffs)
        regular = is_globally_f_regular(pair, p, 3)
        if regular.proven:
            split = is_globally_f_split(pair, p, 3)
            assert split.proven
            assert split.e <= regular.e


def test_smaller_coefficients_stay_regular():
    rng = random.Random(29)
    for _ in range(40):
        p = rng.choice([3, 5])
        coeffs = [Fraction(rng.randint(0, 5), 5) for _ in range(3)]
        pair = P1Pair(points=[ZERO, INFINITY, finite_point(2)], coeffs=coeffs)
        regular = is_globally_f_regular(pair, p, 3)
        if not regular.proven:
            continue
        smaller = P1Pair(points=pair.points, coeffs=[a * Fraction(rng.randint(0, 4), 4) for a in coeffs])
        lowered = is_globally_f_regular(smaller, p, 3)
        assert lowered.proven
        assert lowered.e <= regular.e
