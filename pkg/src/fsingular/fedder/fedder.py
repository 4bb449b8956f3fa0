import logging
from typing import Iterable, List, Sequence

from ..exceptions import (
    ConstantInputError,
    ImproperIdealError,
    NotDegreeThreeError,
    NotThreeVariablesError,
    ZeroPolynomialError,
)
from ..fppoly.parser import parse
from ..fppoly.polynomial import Polynomial, grevlex_key, power_mod_bracket
from ..groebner.monomial_ideal import MonomialIdeal, bracket_power, colon
from ..types import FedderVerdict
from ..utils import check_prime

logger = logging.getLogger(__name__)


def fedder_hypersurface(f: Polynomial, e: int = 1) -> FedderVerdict:
    """
    Fedder's criterion for S/(f) at the origin: F-split iff
    f^(q-1) is not in (x_1^q, ..., x_n^q), q = p^e.

    The witness is the grevlex-largest monomial of f^(q-1) with every exponent below q.
    """
    if f.is_zero:
        raise ZeroPolynomialError("Fedder's criterion needs a nonzero polynomial")
    if f.is_constant:
        raise ConstantInputError(f"{f} is constant")
    if e < 1:
        raise ValueError(f"Level e must be positive, got {e}")

    q = f.p ** e
    g = power_mod_bracket(f, q - 1, q)
    witness = None if g.is_zero else g.leading_monomial(grevlex_key)
    logger.debug("fedder p=%d e=%d: %d surviving terms", f.p, e, g.num_terms)
    return FedderVerdict(f_split=witness is not None, e=e, p=f.p, witness=witness)


def fedder_monomial_ideal(ideal: MonomialIdeal, p: int, e: int = 1) -> FedderVerdict:
    """Fedder's criterion (I^[q] : I) not in m^[q] for a monomial ideal I."""
    check_prime(p)
    if ideal.is_zero:
        raise ImproperIdealError("The zero ideal is not allowed")
    if ideal.is_unit:
        raise ImproperIdealError("The unit ideal is not contained in the maximal ideal")

    q = p ** e
    quotient = colon(bracket_power(ideal, q, p), ideal)
    survivors = [g for g in quotient.generators if max(g, default=0) < q]
    witness = max(survivors, key=grevlex_key) if survivors else None
    return FedderVerdict(f_split=witness is not None, e=e, p=p, witness=witness)


def is_ordinary_plane_cubic(f: Polynomial) -> bool:
    """
    Whether (xyz)^(p-1) occurs in f^(p-1). f must be a smooth plane cubic;
    smoothness is not checked.
    """
    if f.nvars != 3:
        raise NotThreeVariablesError(f"A plane cubic has 3 variables, got {f.nvars}")
    if f.is_zero or not f.is_homogeneous or f.total_degree != 3:
        raise NotDegreeThreeError(f"{f} is not homogeneous of degree 3")

    p = f.p
    g = power_mod_bracket(f, p - 1, p)
    return g.coefficient((p - 1,) * 3) != 0


def fedder_sweep(text: str, variables: Sequence[str], primes: Iterable[int], e: int = 1) -> List[FedderVerdict]:
    """fedder_hypersurface on the same polynomial text read over each prime, in prime order."""
    return [fedder_hypersurface(parse(text, p, variables), e) for p in sorted(primes)]
