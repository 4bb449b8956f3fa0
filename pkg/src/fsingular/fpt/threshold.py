import logging
from fractions import Fraction
from math import ceil

from ..fppoly.polynomial import Polynomial, power_mod_bracket
from ..frobcore.frobenius import nu_chain
from ..types import FptLevel, FptReport

logger = logging.getLogger(__name__)


def simplest_rational(lower: Fraction, upper: Fraction) -> Fraction:
    """
    The rational of smallest denominator in the closed interval [lower, upper],
    0 <= lower <= upper, by Stern-Brocot descent with runs of equal moves
    taken in one step.
    """
    lower, upper = Fraction(lower), Fraction(upper)
    if lower < 0 or upper < lower:
        raise ValueError(f"Need 0 <= lower <= upper, got [{lower}, {upper}]")

    integer = ceil(lower)
    if integer <= upper:
        return Fraction(integer)

    # left = ln/ld < lower and right = rn/rd > upper throughout
    ln, ld, rn, rd = 0, 1, 1, 0
    while True:
        mn, md = ln + rn, ld + rd
        if mn < lower * md:
            # largest k with (ln + k*rn) / (ld + k*rd) < lower
            k = ceil((lower * ld - ln) / (rn - lower * rd)) - 1
            ln, ld = ln + k * rn, ld + k * rd
        elif mn > upper * md:
            k = ceil((rn - upper * rd) / (upper * ld - ln)) - 1
            rn, rd = rn + k * ln, rd + k * ld
        else:
            return Fraction(mn, md)


def fpt_estimate(f: Polynomial, e_max: int) -> FptReport:
    """
    Brackets the F-pure threshold of f at the origin:
    nu_E / p^E <= fpt(f) <= (nu_E + 1) / p^E.

    Example:
    ```python
    fpt_estimate(parse("y^2-x^3", 5, ["x", "y"]), 4).candidate  # Fraction(4, 5)
    ```
    """
    chain = nu_chain(f, e_max)
    p = chain.p
    history = []
    for e, nu in chain.entries:
        q = p ** e
        lower, upper = Fraction(nu, q), Fraction(nu + 1, q)
        history.append(FptLevel(e=e, nu=nu, lower=lower, upper=upper, candidate=simplest_rational(lower, upper)))

    last = history[-1]
    stable = len(history) >= 2 and history[-2].candidate == last.candidate
    logger.debug("fpt p=%d: [%s, %s] candidate %s stable=%s", p, last.lower, last.upper, last.candidate, stable)
    return FptReport(
        chain=chain,
        lower=last.lower,
        upper=last.upper,
        candidate=last.candidate,
        candidate_stable=stable,
        history=history,
    )


def is_sharply_f_pure(f: Polynomial, t: Fraction, e: int) -> bool:
    """Level-e sharp F-purity of the pair (A^n, t*div f) at the origin: f^ceil(t(q-1)) not in m^[q]."""
    q = f.p ** e
    t = Fraction(t)
    r = ceil(t * (q - 1))
    return not power_mod_bracket(f, r, q).is_zero
