"""
Star-shaped resolution graphs of surface singularities.

Along each arm E_1, ..., E_k (E_1 next to the center E_0) the boundary
D = E_0 + sum c_i E_i is fixed by (K + D).E_i = -2 - E_i^2 + D.E_i = 0,
i.e. e_i c_i + c_(i-1) + c_(i+1) = 2 + e_i with c_0 = 1 and c_(k+1) = 0.
"""

import logging
import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..exceptions import InvalidSelfIntersectionError, SingularSystemError, ValidationError
from ..p1pairs.pairs import INFINITY, ZERO, finite_point, is_globally_f_regular
from ..types import (
    INCONCLUSIVE_UP_TO,
    NOT_KLT_BOUNDARY,
    PROVEN_GFR,
    PROVEN_SFR,
    BoundaryData,
    KltVerdict,
    P1Pair,
    StarGraph,
)

logger = logging.getLogger(__name__)

ARM_POINTS = (ZERO, INFINITY, finite_point(1))


def parse_star_graph(text: str) -> StarGraph:
    """Reads "center=-2; arm=-2; arm=-2,-2" (';' or newlines between entries)."""
    center = None
    arms = []
    for entry in re.split(r"[;\n]", text):
        entry = entry.strip()
        if not entry or entry.startswith("#"):
            continue
        if "=" not in entry:
            raise ValidationError(f"Expected 'center=...' or 'arm=...', got {entry!r}")
        key, value = (part.strip() for part in entry.split("=", 1))
        try:
            numbers = [int(v) for v in value.split(",") if v.strip()]
        except ValueError:
            raise ValidationError(f"Self-intersections must be integers: {entry!r}")
        if key == "center":
            if center is not None or len(numbers) != 1:
                raise ValidationError(f"Exactly one center value is allowed: {entry!r}")
            center = numbers[0]
        elif key == "arm":
            arms.append(numbers)
        else:
            raise ValidationError(f"Unknown graph entry {key!r}")

    if center is None:
        raise ValidationError("The graph has no center")
    return StarGraph(center=center, arms=arms)


def arm_determinant(chain: Sequence[int]) -> int:
    """|det| of the chain's intersection matrix (diagonal e_i, off-diagonal 1)."""
    for value in chain:
        if value > -2:
            raise InvalidSelfIntersectionError(f"Self-intersection {value} is above -2")
    previous, current = 1, 1
    for i, value in enumerate(chain):
        if i == 0:
            current = value
        else:
            previous, current = current, value * current - previous
    return abs(current)


def solve_arm(chain: Sequence[int]) -> List[Fraction]:
    """Arm coefficients c_1..c_k by forward elimination and back substitution."""
    k = len(chain)
    rhs = [Fraction(2 + e) for e in chain]
    rhs[0] -= 1  # c_0 = 1

    diagonal: List[Fraction] = []
    reduced: List[Fraction] = []
    for i, e in enumerate(chain):
        d = Fraction(e)
        r = rhs[i]
        if i > 0:
            factor = 1 / diagonal[i - 1]
            d -= factor
            r -= factor * reduced[i - 1]
        if d == 0:
            raise SingularSystemError(f"Zero pivot in the arm system for {list(chain)}")
        diagonal.append(d)
        reduced.append(r)

    c = [Fraction(0)] * k
    for i in reversed(range(k)):
        upper = c[i + 1] if i + 1 < k else 0
        c[i] = (reduced[i] - upper) / diagonal[i]
    return c


def adjunction_residuals(graph: StarGraph, data: BoundaryData) -> List[Fraction]:
    """(K + D).E over every curve, the center first, then each arm outward."""
    center_residual = -2 + sum(coefficients[0] for coefficients in data.arm_coefficients)
    residuals = [center_residual]
    for chain, coefficients in zip(graph.arms, data.arm_coefficients):
        padded = [Fraction(1)] + list(coefficients) + [Fraction(0)]
        for i, e in enumerate(chain, start=1):
            intersection = e * padded[i] + padded[i - 1] + padded[i + 1]
            residuals.append(-2 - e + intersection)
    return residuals


def boundary_coefficients(graph: StarGraph) -> BoundaryData:
    arm_coefficients = [solve_arm(chain) for chain in graph.arms]
    determinants = [arm_determinant(chain) for chain in graph.arms]
    data = BoundaryData(
        arm_coefficients=arm_coefficients,
        arm_determinants=determinants,
        center_excess=-2 + sum(c[0] for c in arm_coefficients),
    )

    residuals = adjunction_residuals(graph, data)
    if any(residuals[1:]):
        raise SingularSystemError(f"Arm coefficients fail the adjunction equations: {residuals}")
    for d, coefficients in zip(determinants, arm_coefficients):
        if coefficients[0] != Fraction(d - 1, d):
            raise SingularSystemError(f"Adjacent coefficient {coefficients[0]} differs from {d - 1}/{d}")
    return data


def graph_type(graph: StarGraph) -> Tuple[Tuple[int, ...], bool]:
    """Sorted arm determinants, and whether they form a klt type."""
    dets = tuple(sorted(arm_determinant(chain) for chain in graph.arms))
    if len(dets) == 2:
        return dets, True
    in_list = dets[:2] == (2, 2) or dets in ((2, 3, 3), (2, 3, 4), (2, 3, 5))
    return dets, in_list


def boundary_pair(data: BoundaryData) -> P1Pair:
    coefficients = [Fraction(d - 1, d) for d in data.arm_determinants]
    return P1Pair(points=list(ARM_POINTS[: len(coefficients)]), coeffs=coefficients)


def classify_sfr(graph: StarGraph, p: int, e_max: int) -> KltVerdict:
    """
    Strong F-regularity through the boundary pair on the central curve.
    ProvenSFR is definitive; failure to find a witness is inconclusive.
    """
    data = boundary_coefficients(graph)
    dets, in_list = graph_type(graph)
    if not in_list:
        logger.warning("Graph type %s is not a klt type", dets)

    if data.center_excess >= 0:
        return KltVerdict(status=NOT_KLT_BOUNDARY, e=0, graph_type=dets, in_klt_list=in_list, pair_verdict=None)

    verdict = is_globally_f_regular(boundary_pair(data), p, e_max)
    status = PROVEN_SFR if verdict.status == PROVEN_GFR else INCONCLUSIVE_UP_TO
    return KltVerdict(status=status, e=verdict.e, graph_type=dets, in_klt_list=in_list, pair_verdict=verdict)
