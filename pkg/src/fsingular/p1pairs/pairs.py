"""
Global F-splitting and F-regularity of pairs (P^1, sum a_i P_i).

The pair is globally F-split (resp. F-regular) as soon as, for some e,
the product of g_i^ceil((p^e - 1) a_i) over the marked points has a
monomial x^i y^j with i, j <= p^e - 1 (resp. i, j < p^e - 1).
"""

import logging
from fractions import Fraction
from math import ceil
from typing import List, Optional

from ..exceptions import ValidationError
from ..fppoly.polynomial import Polynomial, grevlex_key, mul_mod_bracket, power, power_mod_bracket
from ..types import (
    INCONCLUSIVE_GFR_UP_TO,
    NOT_SPLIT_UP_TO,
    PROVEN_F_SPLIT,
    PROVEN_GFR,
    P1Pair,
    P1Point,
    PairVerdict,
)
from ..utils import check_prime, parse_rational

logger = logging.getLogger(__name__)

VARIABLES = ("x", "y")

ZERO = P1Point("zero")
INFINITY = P1Point("infinity")


def finite_point(c: int) -> P1Point:
    return P1Point("finite", c)


def parse_point(text: str) -> P1Point:
    text = text.strip().lower()
    if text in ("inf", "infinity", "oo"):
        return INFINITY
    try:
        c = int(text)
    except ValueError:
        raise ValidationError(f"Unknown point {text!r}; expected 0, inf or an integer")
    return ZERO if c == 0 else finite_point(c)


def parse_pair(text: str) -> P1Pair:
    """Reads "1/2@0,1/2@inf,1/2@1" into a P1Pair."""
    points, coeffs = [], []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if item.count("@") != 1:
            raise ValidationError(f"Expected 'coefficient@point', got {item!r}")
        coefficient, point = item.split("@")
        coeffs.append(parse_rational(coefficient))
        points.append(parse_point(point))
    return P1Pair(points=points, coeffs=coeffs)


def _point_form(point: P1Point, p: int) -> Polynomial:
    if point.kind == "zero":
        return Polynomial(p, VARIABLES, {(1, 0): 1})
    if point.kind == "infinity":
        return Polynomial(p, VARIABLES, {(0, 1): 1})
    return Polynomial(p, VARIABLES, {(1, 0): 1, (0, 1): -point.value})


def _check_points(pair: P1Pair, p: int):
    seen = set()
    for point in pair.points:
        if point.kind == "finite" and point.value % p == 0:
            raise ValidationError(f"Point {point.value} coincides with 0 modulo {p}")
        label = (point.kind, point.value % p)
        if label in seen:
            raise ValidationError(f"Points coincide modulo {p}: {point}")
        seen.add(label)


def exponent(a: Fraction, q: int) -> int:
    return ceil(Fraction(a) * (q - 1))


def pair_product(pair: P1Pair, e: int, p: int, bound: Optional[int] = None) -> Polynomial:
    """
    Product of g_i^ceil((p^e - 1) a_i), with 0 -> x, inf -> y, c -> x - c*y.
    With bound, every term having an exponent >= bound is dropped along the way.
    """
    check_prime(p)
    _check_points(pair, p)
    q = p ** e
    result = Polynomial.constant(p, VARIABLES, 1)
    for point, a in zip(pair.points, pair.coeffs):
        g = _point_form(point, p)
        r = exponent(a, q)
        if bound is None:
            result = result * power(g, r)
        else:
            result = mul_mod_bracket(result, power_mod_bracket(g, r, bound), bound)
    return result


def _scan(pair: P1Pair, p: int, e_max: int, strict: bool) -> Optional[PairVerdict]:
    for e in range(1, e_max + 1):
        q = p ** e
        bound = q - 1 if strict else q
        g = pair_product(pair, e, p, bound)
        if not g.is_zero:
            witness = g.leading_monomial(grevlex_key)
            logger.debug("pair witness at p=%d e=%d: %s", p, e, witness)
            return PairVerdict(status=PROVEN_GFR if strict else PROVEN_F_SPLIT, e=e, witness=witness)
    return None


def is_globally_f_split(pair: P1Pair, p: int, e_max: int) -> PairVerdict:
    verdict = _scan(pair, p, e_max, strict=False)
    return verdict or PairVerdict(status=NOT_SPLIT_UP_TO, e=e_max)


def is_globally_f_regular(pair: P1Pair, p: int, e_max: int) -> PairVerdict:
    """
    A witness is definitive; when none turns up by e_max the verdict is
    inconclusive, never negative.
    """
    verdict = _scan(pair, p, e_max, strict=True)
    return verdict or PairVerdict(status=INCONCLUSIVE_GFR_UP_TO, e=e_max)


def format_pair(pair: P1Pair) -> str:
    return ",".join(f"{a.numerator}/{a.denominator}@{point}" for point, a in zip(pair.points, pair.coeffs))


def permuted(pair: P1Pair, order: List[int]) -> P1Pair:
    return P1Pair(points=[pair.points[i] for i in order], coeffs=[pair.coeffs[i] for i in order])
