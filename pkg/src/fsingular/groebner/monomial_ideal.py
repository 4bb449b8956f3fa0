from typing import Iterable, List, Tuple

from ..exceptions import ArityMismatchError, NotAPrimePowerError
from ..fppoly.polynomial import Monomial, Polynomial, grevlex_key, monomial_divides, monomial_lcm


class MonomialIdeal:
    """An ideal generated by monomials, stored by its minimal generators."""

    __slots__ = ("generators", "nvars")

    def __init__(self, generators: Iterable[Monomial], nvars: int = None):
        generators = [tuple(int(e) for e in g) for g in generators]
        if nvars is None:
            if not generators:
                raise ArityMismatchError("The zero monomial ideal needs an explicit variable count")
            nvars = len(generators[0])
        for g in generators:
            if len(g) != nvars:
                raise ArityMismatchError(f"Monomial {g} does not have {nvars} exponents")

        minimal: List[Monomial] = []
        for g in sorted(set(generators), key=grevlex_key):
            if not any(monomial_divides(h, g) for h in minimal):
                minimal.append(g)
        self.generators: Tuple[Monomial, ...] = tuple(minimal)
        self.nvars = nvars

    @classmethod
    def bracket_of_maximal(cls, nvars: int, q: int) -> "MonomialIdeal":
        """(x_1^q, ..., x_n^q)"""
        return cls([tuple(q if i == j else 0 for j in range(nvars)) for i in range(nvars)], nvars)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def contains_monomial(self, monomial: Monomial) -> bool:
        return any(monomial_divides(g, monomial) for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        return all(self.contains_monomial(m) for m in f.monomials())

    def __contains__(self, item) -> bool:
        if isinstance(item, Polynomial):
            return self.contains(item)
        return self.contains_monomial(tuple(item))

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.generators == other.generators

    def __hash__(self):
        return hash((self.nvars, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({list(self.generators)})"


def is_power_of(q: int, p: int) -> bool:
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def bracket_power(ideal: MonomialIdeal, q: int, p: int) -> MonomialIdeal:
    """I^[q]: every generator exponent multiplied by q, for q a power of p."""
    if not is_power_of(q, p):
        raise NotAPrimePowerError(f"{q} is not a positive power of {p}")
    return MonomialIdeal([tuple(e * q for e in g) for g in ideal.generators], ideal.nvars)


def colon_by_monomial(ideal: MonomialIdeal, monomial: Monomial) -> MonomialIdeal:
    return MonomialIdeal(
        [tuple(max(a - b, 0) for a, b in zip(g, monomial)) for g in ideal.generators],
        ideal.nvars,
    )


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal([monomial_lcm(g, h) for g in a.generators for h in b.generators], a.nvars)


def colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """(a : b) as the intersection of (a : mu) over the generators mu of b."""
    if b.is_zero:
        return MonomialIdeal([(0,) * a.nvars], a.nvars)
    result = None
    for mu in b.generators:
        part = colon_by_monomial(a, mu)
        result = part if result is None else intersect(result, part)
    return result
