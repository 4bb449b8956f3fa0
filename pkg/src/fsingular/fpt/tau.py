"""
Test ideals of principal pairs on affine space.

Write t = t0 / p^s with the denominator of t0 prime to p, and let k be the
order of p modulo that denominator, so t0 = a / (p^k - 1). Then tau(f^t0)
is the smallest ideal J containing f^ceil(t0) with (f^a J)^[1/p^k] in J,
and tau(f^t) = tau(f^t0)^[1/p^s].

The ascending chain I_e = (f^ceil(t*p^e))^[1/p^e] converges to the same
ideal and is walked alongside to report the level at which it gets there.
"""

import logging
from fractions import Fraction
from math import ceil
from typing import List, Optional, Sequence, Tuple

from sympy.ntheory import n_order

from ..exceptions import BudgetExceededError, ValidationError, ZeroPolynomialError
from ..fppoly.polynomial import Polynomial, power
from ..frobcore.frobenius import root_ideal_generators
from ..groebner.buchberger import GroebnerBasis, TermOrder, buchberger, ideal_contains, ideal_equals, ideal_membership
from ..types import JumpScan, TestIdealResult

logger = logging.getLogger(__name__)


def root_ideal(f: Polynomial, t: Fraction, e: int, budget: Optional[int] = None) -> GroebnerBasis:
    """I_e for the pair (f, t)."""
    r = ceil(Fraction(t) * f.p ** e)
    return buchberger(root_ideal_generators(power(f, r), e), TermOrder.GREVLEX, budget)


def frobenius_period(t: Fraction, p: int) -> Tuple[int, int, int]:
    """
    (s, k, a) with t = a / (p^s (p^k - 1)), k the order of p modulo the
    p-free part of the denominator of t.
    """
    t = Fraction(t)
    s, denominator = 0, t.denominator
    while denominator % p == 0:
        s, denominator = s + 1, denominator // p
    k = 1 if denominator == 1 else int(n_order(p, denominator))
    a = t * p ** s * (p ** k - 1)
    return s, k, a.numerator


def _ideal_root(generators: Sequence[Polynomial], e: int) -> List[Polynomial]:
    return [g for h in generators for g in root_ideal_generators(h, e)]


def tau_closure(f: Polynomial, t: Fraction, max_period: int, budget: Optional[int] = None) -> GroebnerBasis:
    """tau(f^t) as the closure of (f^ceil(t0)) under J -> (f^a J)^[1/p^k]."""
    t = Fraction(t)
    s, k, a = frobenius_period(t, f.p)
    if k > max_period:
        raise BudgetExceededError(f"t = {t} needs Frobenius level {k} at p = {f.p}, above e_max = {max_period}")

    t0 = t * f.p ** s
    J = buchberger([power(f, ceil(t0))], TermOrder.GREVLEX, budget)
    fa = power(f, a)
    rounds = 0
    while not J.is_unit_ideal:
        images = [g for g in _ideal_root([fa * h for h in J.generators], k) if not ideal_membership(g, J)]
        if not images:
            break
        J = buchberger(list(J.generators) + images, TermOrder.GREVLEX, budget)
        rounds += 1
    logger.debug("tau closure t=%s: s=%d k=%d a=%d, %d rounds", t, s, k, a, rounds)

    if s:
        J = buchberger(_ideal_root(J.generators, s), TermOrder.GREVLEX, budget)
    return J


def test_ideal_principal(
    f: Polynomial,
    t: Fraction,
    e_max: int,
    budget: Optional[int] = None,
) -> TestIdealResult:
    """
    tau(f^t) by closure, together with the first level e <= e_max at which
    the root-ideal chain reaches it. `stabilized` is false when I_(e_max) is
    still strictly smaller.
    """
    if f.is_zero:
        raise ZeroPolynomialError("Test ideals of the zero polynomial are not defined")
    t = Fraction(t)
    if t < 0:
        raise ValidationError(f"t must be nonnegative, got {t}")
    if e_max < 1:
        raise ValueError(f"e_max must be positive, got {e_max}")

    tau = tau_closure(f, t, e_max, budget)

    previous = None
    for e in range(1, e_max + 1):
        current = root_ideal(f, t, e, budget)
        if previous is not None and not ideal_contains(current, previous):
            logger.warning("Root ideal chain not ascending at e=%d for t=%s", e, t)
        if ideal_equals(current, tau):
            return TestIdealResult(t=t, e=e, basis=tau, stabilized=True)
        previous = current

    logger.debug("Root ideal chain below tau(f^%s) at e_max=%d", t, e_max)
    return TestIdealResult(t=t, e=e_max, basis=tau, stabilized=False)


def jump_scan(f: Polynomial, n: int, e_max: int, budget: Optional[int] = None) -> JumpScan:
    """
    Evaluates tau(f^(k/n)) for k = 1..n and reports every grid point where
    it differs from the previous one (tau(f^0) is the unit ideal). Jumps lying
    strictly between grid points are attributed to the next grid point.
    """
    if n < 2:
        raise ValidationError(f"The grid needs N >= 2, got {n}")

    previous = buchberger([f.one()])
    jumps: List[Fraction] = []
    for k in range(1, n + 1):
        t = Fraction(k, n)
        current = test_ideal_principal(f, t, e_max, budget).basis
        if not ideal_equals(previous, current):
            jumps.append(t)
            logger.debug("jump at %s: %s", t, current)
        previous = current

    return JumpScan(n=n, e_max=e_max, jumps=jumps, certified=[False] * len(jumps))


def check_jump_scaling(scan: JumpScan, p: int) -> List[Fraction]:
    """Reported jumps xi with p*xi <= 1 on the grid whose p*xi is not reported."""
    reported = set(scan.jumps)
    violations = []
    for xi in scan.jumps:
        scaled = p * xi
        if scaled <= 1 and (scaled * scan.n).denominator == 1 and scaled not in reported:
            violations.append(xi)
    return violations


test_ideal_principal.__test__ = False
