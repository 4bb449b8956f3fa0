"""
Reduced Groebner bases by Buchberger's algorithm.

Pairs are selected by the normal strategy (smallest lcm of leading
monomials first, ties broken by index) and pairs with coprime leading
monomials are skipped.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from operator import add
from typing import List, Optional, Sequence, Tuple

from ..exceptions import BudgetExceededError, OrderMismatchError
from ..fppoly.polynomial import (
    Polynomial,
    check_compatible,
    grevlex_key,
    lex_key,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)

logger = logging.getLogger(__name__)


class TermOrder(Enum):
    GREVLEX = "grevlex"
    LEX = "lex"

    @property
    def key(self):
        return grevlex_key if self is TermOrder.GREVLEX else lex_key


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    generators: Tuple[Polynomial, ...]
    p: int
    nvars: int

    @property
    def is_zero_ideal(self) -> bool:
        return not self.generators

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant

    def leading_monomials(self) -> List[tuple]:
        return [g.leading_monomial(self.order.key) for g in self.generators]

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


class _StepBudget:
    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.steps = 0

    def spend(self):
        self.steps += 1
        if self.limit is not None and self.steps > self.limit:
            raise BudgetExceededError(f"Groebner step budget of {self.limit} exhausted")


def _divide(f: Polynomial, basis: Sequence[Polynomial], key, budget: Optional[_StepBudget] = None) -> Polynomial:
    """Full remainder of f on division by basis (multivariate division algorithm)."""
    p = f.p
    leads = []
    for g in basis:
        lm = g.leading_monomial(key)
        leads.append((lm, g, pow(g.coefficient(lm), -1, p)))

    terms = f.terms
    remainder = {}
    while terms:
        m = max(terms, key=key)
        c = terms[m]
        for lm, g, lc_inverse in leads:
            if monomial_divides(lm, m):
                if budget is not None:
                    budget.spend()
                factor = c * lc_inverse % p
                shift = monomial_quotient(m, lm)
                for gm, gc in g.items():
                    t = tuple(map(add, gm, shift))
                    v = (terms.get(t, 0) - factor * gc) % p
                    if v:
                        terms[t] = v
                    else:
                        terms.pop(t, None)
                break
        else:
            remainder[m] = c
            del terms[m]

    return Polynomial(f.modulus, f.variables, remainder)


def normal_form(f: Polynomial, B: "GroebnerBasis") -> Polynomial:
    return _divide(f, B.generators, B.order.key)


def _s_polynomial(f: Polynomial, g: Polynomial, key) -> Polynomial:
    # both arguments are monic
    lf = f.leading_monomial(key)
    lg = g.leading_monomial(key)
    lcm = monomial_lcm(lf, lg)
    return f.shift(monomial_quotient(lcm, lf)) - g.shift(monomial_quotient(lcm, lg))


def _minimal_monomials(monomials, key) -> List[tuple]:
    out = []
    for m in sorted(set(monomials), key=key):
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def _reduce_basis(basis: List[Polynomial], key) -> List[Polynomial]:
    basis = sorted(basis, key=lambda g: key(g.leading_monomial(key)))
    minimal: List[Polynomial] = []
    for g in basis:
        lm = g.leading_monomial(key)
        if not any(monomial_divides(h.leading_monomial(key), lm) for h in minimal):
            minimal.append(g)

    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(_divide(g, others, key).monic(key))
    return sorted(reduced, key=lambda g: key(g.leading_monomial(key)))


def buchberger(
    gens: Sequence[Polynomial],
    order: TermOrder = TermOrder.GREVLEX,
    budget: Optional[int] = None,
) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by gens.

    Args:
        gens: nonempty list of polynomials over one ambient ring.
        order: the term order.
        budget: optional bound on reduction steps; BudgetExceededError when exhausted.

    Returns:
        GroebnerBasis: monic, inter-reduced, sorted by ascending leading monomial.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    for g in gens[1:]:
        check_compatible(gens[0], g)

    first = gens[0]
    key = order.key

    def result(generators):
        return GroebnerBasis(order, tuple(generators), first.p, first.nvars)

    nonzero = [g for g in gens if not g.is_zero]
    if not nonzero:
        return result([])
    if any(g.is_constant for g in nonzero):
        return result([first.one()])
    if all(g.num_terms == 1 for g in nonzero):
        monomials = _minimal_monomials([g.leading_monomial(key) for g in nonzero], key)
        return result([Polynomial.monomial(first.modulus, first.variables, m) for m in monomials])

    steps = _StepBudget(budget)

    # autoreduce the input; leading monomials come out pairwise non-divisible
    basis: List[Polynomial] = []
    for g in sorted(nonzero, key=lambda h: key(h.leading_monomial(key))):
        r = _divide(g, basis, key, steps)
        if r.is_zero:
            continue
        if r.is_constant:
            return result([first.one()])
        basis.append(r.monic(key))

    leads = [g.leading_monomial(key) for g in basis]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(monomial_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.remove((i, j))
        steps.spend()

        if all(min(a, b) == 0 for a, b in zip(leads[i], leads[j])):
            continue

        r = _divide(_s_polynomial(basis[i], basis[j], key), basis, key, steps)
        if r.is_zero:
            continue
        if r.is_constant:
            return result([first.one()])

        basis.append(r.monic(key))
        leads.append(r.leading_monomial(key))
        k = len(basis) - 1
        pairs.extend((i, k) for i in range(k))

    logger.debug("Buchberger: %d generators before reduction, %d steps", len(basis), steps.steps)
    return result(_reduce_basis(basis, key))


def ideal_membership(f: Polynomial, B: GroebnerBasis) -> bool:
    if B.generators:
        check_compatible(f, B.generators[0])
    if f.is_zero:
        return True
    if B.is_zero_ideal:
        return False
    return normal_form(f, B).is_zero


def ideal_contains(A: GroebnerBasis, B: GroebnerBasis) -> bool:
    """True iff the ideal of B is contained in the ideal of A."""
    return all(ideal_membership(g, A) for g in B.generators)


def ideal_equals(A: GroebnerBasis, B: GroebnerBasis) -> bool:
    if A.order is not B.order:
        raise OrderMismatchError(f"Cannot compare a {A.order.value} basis with a {B.order.value} basis")
    if A.generators and B.generators:
        check_compatible(A.generators[0], B.generators[0])
    return A.generators == B.generators
