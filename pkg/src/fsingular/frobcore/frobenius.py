"""
Frobenius operators on polynomials over F_p.

With q = p^e, every polynomial decomposes uniquely as
f = sum over a in [0, q)^n of g_a^q * x^a; the root operator phi_root
picks out the part at a = (q-1, ..., q-1).
"""

import logging
from typing import Dict, List

from ..exceptions import ConstantTermNonzeroError, ZeroPolynomialError
from ..fppoly.polynomial import (
    Monomial,
    Polynomial,
    frobenius_power,
    grevlex_key,
    mul_mod_bracket,
    reduce_mod_bracket,
)
from ..types import NuChain, RootDecomposition, SplittingType

logger = logging.getLogger(__name__)


def _check_level(e: int):
    if e < 1:
        raise ValueError(f"Level e must be positive, got {e}")


def phi_root(g: Polynomial, e: int) -> Polynomial:
    _check_level(e)
    q = g.p ** e
    terms: Dict[Monomial, int] = {}
    for monomial, c in g.items():
        if all((j + 1) % q == 0 for j in monomial):
            terms[tuple((j + 1) // q - 1 for j in monomial)] = c
    return Polynomial(g.modulus, g.variables, terms)


def root_decompose(f: Polynomial, e: int) -> RootDecomposition:
    _check_level(e)
    q = f.p ** e
    parts: Dict[Monomial, Dict[Monomial, int]] = {}
    for monomial, c in f.items():
        a = tuple(b % q for b in monomial)
        parts.setdefault(a, {})[tuple(b // q for b in monomial)] = c
    return RootDecomposition(
        e=e,
        q=q,
        parts={a: Polynomial(f.modulus, f.variables, terms) for a, terms in parts.items()},
    )


def reconstruct(decomposition: RootDecomposition, like: Polynomial) -> Polynomial:
    """sum of g_a^q * x^a; `like` supplies the ambient ring."""
    total = like.zero()
    for a, g in decomposition.parts.items():
        total = total + frobenius_power(g, decomposition.q).shift(a)
    return total


def root_ideal_generators(f: Polynomial, e: int) -> List[Polynomial]:
    """Generators of the ideal (f)^[1/p^e]: the nonzero parts of the root decomposition."""
    parts = root_decompose(f, e).parts
    return [parts[a] for a in sorted(parts, key=grevlex_key)]


def phi_root_shifts(g: Polynomial, e: int) -> Dict[Monomial, Polynomial]:
    """
    Maps each residue c in [0, q)^n to phi_root(g * x^c, e), keeping the
    nonzero values only. phi_root(g * x^(c + q*s), e) = x^s * phi_root(g * x^c, e).
    """
    _check_level(e)
    q = g.p ** e
    shifts: Dict[Monomial, Dict[Monomial, int]] = {}
    for monomial, coefficient in g.items():
        c = tuple((q - 1 - a) % q for a in monomial)
        image = tuple((a + ci - q + 1) // q for a, ci in zip(monomial, c))
        shifts.setdefault(c, {})[image] = coefficient
    return {c: Polynomial(g.modulus, g.variables, terms) for c, terms in shifts.items()}


def _check_nu_input(f: Polynomial):
    if f.is_zero:
        raise ZeroPolynomialError("nu is undefined for the zero polynomial")
    if f.constant_term:
        raise ConstantTermNonzeroError(
            f"{f} does not vanish at the origin (constant term {f.constant_term})"
        )


def nu_chain(f: Polynomial, e_max: int) -> NuChain:
    """
    nu_e(f) = max{r : f^r not in (x_1^(p^e), ..., x_n^(p^e))} for e = 1..e_max.

    Level e+1 only scans the window [p*nu_e, p*nu_e + p - 1], starting
    from the Frobenius image of the truncated power f^(nu_e).
    """
    _check_nu_input(f)
    _check_level(e_max)
    p = f.p

    # level 1 by an upward scan
    q = p
    current = reduce_mod_bracket(f.one(), q)
    r = 0
    while True:
        nxt = mul_mod_bracket(current, f, q)
        if nxt.is_zero:
            break
        current, r = nxt, r + 1
    entries = [(1, r)]
    logger.debug("nu_1 = %d (p=%d)", r, p)

    for e in range(2, e_max + 1):
        q *= p
        nu_previous = entries[-1][1]
        current = frobenius_power(current, p)
        r = p * nu_previous
        while r < p * nu_previous + p - 1:
            nxt = mul_mod_bracket(current, f, q)
            if nxt.is_zero:
                break
            current, r = nxt, r + 1
        entries.append((e, r))
        logger.debug("nu_%d = %d (p=%d)", e, r, p)

    return NuChain(f=f, p=p, entries=entries)


def nu_full_scan(f: Polynomial, e: int) -> int:
    """nu_e(f) by scanning r = 0, 1, 2, ... with no window shortcut."""
    _check_nu_input(f)
    _check_level(e)
    q = f.p ** e
    current = reduce_mod_bracket(f.one(), q)
    r = 0
    while True:
        current = mul_mod_bracket(current, f, q)
        if current.is_zero:
            return r
        r += 1


def p1_splitting_type(a: int, e: int, p: int) -> SplittingType:
    """
    Degrees of the line bundles in the decomposition of the e-th Frobenius
    pushforward of O(a) on the projective line: {floor((a - i) / p^e) : 0 <= i < p^e}.
    """
    _check_level(e)
    q = p ** e
    return SplittingType(a=a, e=e, p=p, summands=sorted(((a - i) // q for i in range(q)), reverse=True))


def section_count_mismatches(splitting: SplittingType, window: int = None) -> List[int]:
    """
    The twists k for which sum_i h0(O(b_i + k)) differs from h0(O(a + k*p^e)).
    An empty list means the splitting type is consistent on the window.
    """
    q = splitting.p ** splitting.e
    if window is None:
        window = abs(splitting.a) + q
    mismatches = []
    for k in range(-window, window + 1):
        pushed = sum(max(0, b + k + 1) for b in splitting.summands)
        direct = max(0, splitting.a + k * q + 1)
        if pushed != direct:
            mismatches.append(k)
    return mismatches
