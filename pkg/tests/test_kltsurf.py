import random
from fractions import Fraction

import pytest
import sympy

from fsingular.exceptions import InvalidSelfIntersectionError, ValidationError
from fsingular.kltsurf import boundary_coefficients, classify_sfr
from fsingular.kltsurf.graphs import (
    adjunction_residuals,
    arm_determinant,
    boundary_pair,
    graph_type,
    parse_star_graph,
    solve_arm,
)
from fsingular.types import INCONCLUSIVE_UP_TO, NOT_KLT_BOUNDARY, PROVEN_SFR, StarGraph

D5 = "center=-2; arm=-2; arm=-2; arm=-2,-2"
PLATONIC = {
    (2, 2, 2): "center=-2; arm=-2; arm=-2; arm=-2",
    (2, 3, 3): "center=-2; arm=-2; arm=-2,-2; arm=-2,-2",
    (2, 3, 4): "center=-2; arm=-2; arm=-2,-2; arm=-2,-2,-2",
    (2, 3, 5): "center=-2; arm=-2; arm=-2,-2; arm=-2,-2,-2,-2",
}


def cramer_arm(chain):
    k = len(chain)
    M = sympy.zeros(k, k)
    for i, e in enumerate(chain):
        M[i, i] = e
        if i + 1 < k:
            M[i, i + 1] = M[i + 1, i] = 1
    rhs = sympy.Matrix([2 + e for e in chain])
    rhs[0] -= 1
    det = M.det()
    solution = []
    for i in range(k):
        Mi = M.copy()
        Mi[:, i] = rhs
        value = sympy.Rational(Mi.det(), det)
        solution.append(Fraction(int(value.p), int(value.q)))
    return solution


def test_arm_determinants():
    assert arm_determinant([-2]) == 2
    assert arm_determinant([-2, -2]) == 3
    assert arm_determinant([-2, -3]) == 5
    assert arm_determinant([-2] * 4) == 5
    assert arm_determinant([-3]) == 3
    with pytest.raises(InvalidSelfIntersectionError):
        arm_determinant([-2, -1])


def test_solve_arm_examples():
    assert solve_arm([-2]) == [Fraction(1, 2)]
    assert solve_arm([-2, -2]) == [Fraction(2, 3), Fraction(1, 3)]
    assert solve_arm([-2, -3]) == [Fraction(4, 5), Fraction(3, 5)]
    assert solve_arm([-3, -2]) == [Fraction(4, 5), Fraction(2, 5)]


def test_d5_boundary():
    data = boundary_coefficients(parse_star_graph(D5))
    assert data.arm_coefficients == [[Fraction(1, 2)], [Fraction(1, 2)], [Fraction(2, 3), Fraction(1, 3)]]
    assert data.arm_determinants == [2, 2, 3]
    assert data.center_excess == Fraction(-1, 3)


def test_two_arm_graph():
    graph = parse_star_graph("center=-3; arm=-2; arm=-2")
    data = boundary_coefficients(graph)
    assert data.center_excess == -1
    assert graph_type(graph) == ((2, 2), True)
    pair = boundary_pair(data)
    assert len(pair.points) == 2
    verdict = classify_sfr(graph, 2, 4)
    assert verdict.status == PROVEN_SFR
    assert verdict.e == 2


def test_e8_arm_against_cramer():
    graph = parse_star_graph(PLATONIC[(2, 3, 5)])
    data = boundary_coefficients(graph)
    for chain, coefficients in zip(graph.arms, data.arm_coefficients):
        assert coefficients == cramer_arm(chain)
    assert data.center_excess == Fraction(-1, 30)


@pytest.mark.parametrize("dets", sorted(PLATONIC))
def test_platonic_types_at_seven(dets):
    graph = parse_star_graph(PLATONIC[dets])
    verdict = classify_sfr(graph, 7, 4)
    assert verdict.status == PROVEN_SFR
    assert verdict.graph_type == dets
    assert verdict.in_klt_list
    assert verdict.pair_verdict.proven


@pytest.mark.parametrize("p", [3, 5, 7])
def test_d5_is_strongly_regular(p):
    assert classify_sfr(parse_star_graph(D5), p, 4).status == PROVEN_SFR


def test_d5_at_two_is_inconclusive():
    verdict = classify_sfr(parse_star_graph(D5), 2, 6)
    assert verdict.status == INCONCLUSIVE_UP_TO
    assert verdict.e == 6
    assert not verdict.pair_verdict.proven


def test_non_klt_boundary():
    graph = parse_star_graph("center=-2; arm=-2; arm=-2,-2; arm=-2,-2,-2,-2,-2")
    verdict = classify_sfr(graph, 7, 4)
    assert verdict.status == NOT_KLT_BOUNDARY
    assert verdict.graph_type == (2, 3, 6)
    assert not verdict.in_klt_list
    assert verdict.pair_verdict is None


def test_random_chains_satisfy_adjunction():
    rng = random.Random(37)
    for _ in range(50):
        arms = [[rng.randint(-5, -2) for _ in range(rng.randint(1, 4))] for _ in range(rng.randint(2, 3))]
        graph = StarGraph(center=rng.randint(-4, -2), arms=arms)
        data = boundary_coefficients(graph)
        residuals = adjunction_residuals(graph, data)
        assert residuals[0] == data.center_excess
        assert not any(residuals[1:])
        for chain, coefficients in zip(arms, data.arm_coefficients):
            assert all(0 < c < 1 for c in coefficients)
            assert coefficients == cramer_arm(chain)


def test_parse_star_graph():
    graph = parse_star_graph("center=-2\narm=-2\n# comment\narm = -3, -2")
    assert graph.center == -2
    assert graph.arms == [[-2], [-3, -2]]


@pytest.mark.parametrize(
    "text",
    [
        "arm=-2; arm=-2",
        "center=-2; center=-3; arm=-2; arm=-2",
        "center=-2; leg=-2; arm=-2",
        "center=-2; arm=-2; arm=x",
        "center=-2; arm=-2",
        "center=-2; arm=; arm=-2",
        "center=-2; arm=-2; arm=-2; arm=-2; arm=-2",
        "center -2; arm=-2; arm=-2",
    ],
)
def test_parse_star_graph_errors(text):
    with pytest.raises(ValidationError):
        parse_star_graph(text)


def test_self_intersection_above_minus_two():
    with pytest.raises(InvalidSelfIntersectionError):
        parse_star_graph("center=-1; arm=-2; arm=-2")
