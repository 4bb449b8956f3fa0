import random
from fractions import Fraction
from math import ceil

import pytest

from fsingular import fpt
from fsingular.exceptions import BudgetExceededError, ValidationError, ZeroPolynomialError
from fsingular.fppoly import parse
from fsingular.frobcore import nu_full_scan
from fsingular.groebner import buchberger, ideal_contains, ideal_equals
from fsingular.types import JumpScan

XY = ["x", "y"]
CUSP = "y^2-x^3"


def cusp_threshold(p):
    if p == 2:
        return Fraction(1, 2)
    if p == 3:
        return Fraction(2, 3)
    if p % 6 == 1:
        return Fraction(5, 6)
    return Fraction(5, 6) - Fraction(1, 6 * p)


def smallest_denominator(lower, upper):
    d = 1
    while True:
        n = ceil(lower * d)
        if Fraction(n, d) <= upper:
            return Fraction(n, d)
        d += 1


def test_simplest_rational_examples():
    assert fpt.simplest_rational(Fraction(1, 3), Fraction(1, 2)) == Fraction(1, 2)
    assert fpt.simplest_rational(Fraction(3, 5), Fraction(2, 3)) == Fraction(2, 3)
    assert fpt.simplest_rational(Fraction(0), Fraction(1, 10)) == 0
    assert fpt.simplest_rational(Fraction(7, 10), Fraction(7, 10)) == Fraction(7, 10)
    assert fpt.simplest_rational(Fraction(24, 125), Fraction(25, 125)) == Fraction(1, 5)
    assert fpt.simplest_rational(Fraction(3, 2), Fraction(5, 2)) == 2


def test_simplest_rational_rejects_bad_interval():
    with pytest.raises(ValueError):
        fpt.simplest_rational(Fraction(1, 2), Fraction(1, 3))
    with pytest.raises(ValueError):
        fpt.simplest_rational(Fraction(-1, 2), Fraction(1, 3))


def test_simplest_rational_against_brute_force():
    rng = random.Random(31)
    for _ in range(300):
        q = rng.choice([4, 9, 25, 49, 121, 343, 2401])
        nu = rng.randint(0, q - 1)
        lower, upper = Fraction(nu, q), Fraction(nu + 1, q)
        assert fpt.simplest_rational(lower, upper) == smallest_denominator(lower, upper)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23])
def test_cusp_threshold(p):
    e_max = 4 if p < 13 else 3
    report = fpt.fpt_estimate(parse(CUSP, p, XY), e_max)
    expected = cusp_threshold(p)
    assert report.lower <= expected <= report.upper
    assert report.upper - report.lower == Fraction(1, p ** e_max)
    assert report.candidate == expected
    assert report.candidate_stable
    assert [level.e for level in report.history] == list(range(1, e_max + 1))


def test_cusp_candidate_history_at_seven():
    report = fpt.fpt_estimate(parse(CUSP, 7, XY), 3)
    assert [level.candidate for level in report.history] == [Fraction(3, 4), Fraction(5, 6), Fraction(5, 6)]
    assert report.history[0].nu == 5


def test_single_level_is_never_stable():
    report = fpt.fpt_estimate(parse(CUSP, 5, XY), 1)
    assert not report.candidate_stable
    assert report.candidate == Fraction(2, 3)


def test_threshold_of_a_variable():
    report = fpt.fpt_estimate(parse("x", 3, XY), 3)
    assert report.candidate == 1
    assert report.upper == 1


def test_three_lines_against_full_scan():
    f = parse("x*y*(x+y)", 7, XY)
    report = fpt.fpt_estimate(f, 3)
    for level in report.history:
        assert level.nu == nu_full_scan(f, level.e)
    assert report.candidate == Fraction(2, 3)


def test_sharp_f_purity():
    assert fpt.is_sharply_f_pure(parse("x", 5, XY), 1, 2)
    cusp = parse(CUSP, 7, XY)
    assert fpt.is_sharply_f_pure(cusp, Fraction(5, 6), 1)
    assert not fpt.is_sharply_f_pure(cusp, 1, 1)


def test_frobenius_period():
    assert fpt.frobenius_period(Fraction(5, 12), 2) == (2, 2, 5)
    assert fpt.frobenius_period(Fraction(5, 6), 7) == (0, 1, 5)
    assert fpt.frobenius_period(Fraction(4, 5), 5) == (1, 1, 16)
    assert fpt.frobenius_period(Fraction(0), 3) == (0, 1, 0)
    assert fpt.frobenius_period(Fraction(247, 300), 7) == (0, 4, 1976)


def test_tau_of_a_variable():
    f = parse("x", 5, XY)
    half = fpt.test_ideal_principal(f, Fraction(1, 2), 3)
    assert half.basis.is_unit_ideal
    assert half.stabilized
    assert half.e == 1
    one = fpt.test_ideal_principal(f, 1, 3)
    assert ideal_equals(one.basis, buchberger([f]))


def test_tau_of_cusp_at_threshold():
    f = parse(CUSP, 7, XY)
    result = fpt.test_ideal_principal(f, Fraction(5, 6), 3)
    assert result.stabilized
    assert result.e == 1
    assert ideal_equals(result.basis, buchberger([parse("x", 7, XY), parse("y", 7, XY)]))


def test_tau_below_threshold_needs_depth():
    f = parse(CUSP, 7, XY)
    t = Fraction(5, 6) - Fraction(1, 100)
    result = fpt.test_ideal_principal(f, t, 4)
    assert result.basis.is_unit_ideal
    assert result.stabilized
    assert result.e == 3
    with pytest.raises(BudgetExceededError):
        fpt.test_ideal_principal(f, t, 2)


def test_tau_when_the_chain_lags():
    f = parse(CUSP, 2, XY)
    t = Fraction(5, 12)
    shallow = fpt.test_ideal_principal(f, t, 2)
    assert shallow.basis.is_unit_ideal
    assert not shallow.stabilized
    assert shallow.e == 2
    assert not fpt.root_ideal(f, t, 3).is_unit_ideal
    deep = fpt.test_ideal_principal(f, t, 4)
    assert deep.basis.is_unit_ideal
    assert deep.stabilized
    assert deep.e == 4


def test_tau_closure_of_cusp_at_two():
    f = parse(CUSP, 2, XY)
    maximal = buchberger([parse("x", 2, XY), parse("y", 2, XY)])
    assert fpt.tau_closure(f, Fraction(5, 12), 2).is_unit_ideal
    assert ideal_equals(fpt.tau_closure(f, Fraction(1, 2), 1), maximal)
    assert ideal_equals(fpt.tau_closure(f, Fraction(11, 12), 2), maximal)
    assert ideal_equals(fpt.tau_closure(f, 1, 1), buchberger([f]))


def test_tau_errors():
    with pytest.raises(ZeroPolynomialError):
        fpt.test_ideal_principal(parse("0", 5, XY), Fraction(1, 2), 2)
    with pytest.raises(ValidationError):
        fpt.test_ideal_principal(parse("x", 5, XY), Fraction(-1, 2), 2)


def test_tau_is_unit_exactly_below_threshold():
    f = parse(CUSP, 5, XY)
    assert fpt.test_ideal_principal(f, Fraction(1, 2), 3).basis.is_unit_ideal
    assert not fpt.test_ideal_principal(f, Fraction(4, 5), 3).basis.is_unit_ideal


@pytest.mark.parametrize("p", [5, 7])
def test_tau_decreases_on_the_grid(p):
    f = parse(CUSP, p, XY)
    ideals = [fpt.test_ideal_principal(f, Fraction(k, 12), 2).basis for k in range(1, 13)]
    for larger, smaller in zip(ideals, ideals[1:]):
        assert ideal_contains(larger, smaller)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_tau_agrees_with_threshold_bounds(p):
    f = parse(CUSP, p, XY)
    report = fpt.fpt_estimate(f, 3)
    for k in range(1, 13):
        t = Fraction(k, 12)
        if report.lower <= t <= report.upper:
            continue
        unit = fpt.test_ideal_principal(f, t, 3).basis.is_unit_ideal
        assert unit == (t < report.lower)


@pytest.mark.parametrize("p", [5, 7])
def test_root_ideals_decrease_in_t(p):
    f = parse(CUSP, p, XY)
    grid = [Fraction(k, 12) for k in range(1, 13)]
    for e in (1, 2):
        ideals = [fpt.root_ideal(f, t, e) for t in grid]
        for larger, smaller in zip(ideals, ideals[1:]):
            assert ideal_contains(larger, smaller)


def test_root_ideals_ascend_in_e():
    f = parse(CUSP, 3, XY)
    for t in (Fraction(1, 3), Fraction(2, 3), Fraction(5, 6)):
        chain = [fpt.root_ideal(f, t, e) for e in (1, 2, 3)]
        for lower, upper in zip(chain, chain[1:]):
            assert ideal_contains(upper, lower)


def test_jumps_of_a_variable():
    scan = fpt.jump_scan(parse("x", 5, XY), 4, 3)
    assert scan.jumps == [1]
    assert scan.certified == [False]


def test_jumps_of_normal_crossing():
    scan = fpt.jump_scan(parse("x*y", 3, XY), 4, 3)
    assert 1 in scan.jumps


def test_jump_grid_needs_two_points():
    with pytest.raises(ValidationError):
        fpt.jump_scan(parse("x", 5, XY), 1, 3)


def test_cusp_jumps_at_two():
    scan = fpt.jump_scan(parse(CUSP, 2, XY), 12, 4)
    assert scan.jumps == [Fraction(1, 2), 1]
    assert fpt.check_jump_scaling(scan, 2) == []
    assert fpt.jump_scan(parse(CUSP, 2, XY), 4, 4).jumps == [Fraction(1, 2), 1]


def test_cusp_jumps_at_three():
    scan = fpt.jump_scan(parse(CUSP, 3, XY), 18, 3)
    assert scan.jumps[0] == Fraction(2, 3)
    assert scan.jumps[-1] == 1
    assert fpt.check_jump_scaling(scan, 3) == []


def test_first_jump_is_the_threshold():
    for p in (2, 3, 5):
        scan = fpt.jump_scan(parse(CUSP, p, XY), 6 * p, 3)
        assert scan.jumps[0] == cusp_threshold(p)


def test_jump_scaling_reports_missing_multiples():
    scan = JumpScan(n=4, e_max=1, jumps=[Fraction(1, 4)], certified=[False])
    assert fpt.check_jump_scaling(scan, 2) == [Fraction(1, 4)]
