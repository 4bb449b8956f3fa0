"""
Sparse multivariate polynomials over a prime field.

A `Polynomial` is an immutable map from exponent tuples (monomials) to
nonzero residues in [0, p-1]. Variables are positional; their names are
only used for parsing and printing. The canonical term order is graded
reverse lexicographic.
"""

import logging
from dataclasses import dataclass
from math import comb
from operator import add
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import (
    ArityMismatchError,
    ModulusMismatchError,
    UnknownVariableError,
)
from ..utils import check_prime

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]

# multinomial expansion is used for small powers while the number of
# compositions stays below this bound
MULTINOMIAL_LIMIT = 250_000
MULTINOMIAL_MAX_TERMS = 64


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        check_prime(self.p)

    def __int__(self):
        return self.p

    def __str__(self):
        return str(self.p)


def as_modulus(p) -> PrimeModulus:
    if isinstance(p, PrimeModulus):
        return p
    return PrimeModulus(p)


def grevlex_key(monomial: Monomial):
    return (sum(monomial), tuple(-e for e in reversed(monomial)))


def lex_key(monomial: Monomial):
    return tuple(monomial)


def monomial_degree(monomial: Monomial) -> int:
    return sum(monomial)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomials_up_to_degree(nvars: int, degree: int) -> List[Monomial]:
    """All monomials of total degree <= degree, in ascending grevlex order."""
    if degree < 0:
        return []
    if nvars == 0:
        return [()]

    out = []

    def fill(prefix, remaining, left):
        if left == 1:
            for k in range(remaining + 1):
                out.append(tuple(prefix) + (k,))
            return
        for k in range(remaining + 1):
            fill(prefix + [k], remaining - k, left - 1)

    fill([], degree, nvars)
    return sorted(out, key=grevlex_key)


class Polynomial:
    __slots__ = ("_modulus", "_variables", "_terms", "_hash")

    def __init__(
        self,
        modulus,
        variables: Sequence[str],
        terms: Optional[Mapping[Monomial, int]] = None,
    ):
        self._modulus = as_modulus(modulus)
        self._variables = tuple(variables)
        p = self._modulus.p
        n = len(self._variables)
        clean: Dict[Monomial, int] = {}

        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != n:
                raise ArityMismatchError(
                    f"Monomial {monomial} does not have {n} exponents"
                )
            coefficient %= p
            if coefficient:
                clean[monomial] = coefficient

        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, modulus: PrimeModulus, variables: Tuple[str, ...], terms: Dict[Monomial, int]):
        # terms must already be reduced and free of zeros
        poly = cls.__new__(cls)
        poly._modulus = modulus
        poly._variables = variables
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, modulus, variables: Sequence[str], value: int) -> "Polynomial":
        return cls(modulus, variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(cls, modulus, variables: Sequence[str], exponents: Monomial, coefficient: int = 1) -> "Polynomial":
        return cls(modulus, variables, {tuple(exponents): coefficient})

    @classmethod
    def variable(cls, modulus, variables: Sequence[str], name: str) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariableError(f"Unknown variable {name!r}; declared: {', '.join(variables)}")
        exponents = tuple(1 if v == name else 0 for v in variables)
        return cls(modulus, variables, {exponents: 1})

    # -- accessors ---------------------------------------------------------

    @property
    def modulus(self) -> PrimeModulus:
        return self._modulus

    @property
    def p(self) -> int:
        return self._modulus.p

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def nvars(self) -> int:
        return len(self._variables)

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    @property
    def constant_term(self) -> int:
        return self._terms.get((0,) * self.nvars, 0)

    @property
    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def coefficient(self, monomial: Monomial) -> int:
        return self._terms.get(tuple(monomial), 0)

    def monomials(self) -> Iterable[Monomial]:
        return self._terms.keys()

    def items(self):
        return self._terms.items()

    def sorted_terms(self, key=grevlex_key, descending: bool = True) -> List[Tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=descending)

    def leading_monomial(self, key=grevlex_key) -> Monomial:
        return max(self._terms, key=key)

    def leading_coefficient(self, key=grevlex_key) -> int:
        return self._terms[self.leading_monomial(key)]

    def monic(self, key=grevlex_key) -> "Polynomial":
        if self.is_zero:
            return self
        inverse = pow(self.leading_coefficient(key), -1, self.p)
        return self.scale(inverse)

    def scale(self, c: int) -> "Polynomial":
        p = self.p
        c %= p
        if c == 0:
            return self.zero()
        return Polynomial._raw(
            self._modulus, self._variables, {m: v * c % p for m, v in self._terms.items()}
        )

    def shift(self, exponents: Monomial) -> "Polynomial":
        """Multiplication by the monomial x^exponents."""
        return Polynomial._raw(
            self._modulus,
            self._variables,
            {tuple(map(add, m, exponents)): v for m, v in self._terms.items()},
        )

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self._modulus, self._variables, {})

    def one(self) -> "Polynomial":
        return Polynomial._raw(self._modulus, self._variables, {(0,) * self.nvars: 1})

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            check_compatible(self, other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self._modulus, self._variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        terms = dict(self._terms)
        for m, v in other._terms.items():
            c = (terms.get(m, 0) + v) % p
            if c:
                terms[m] = c
            else:
                terms.pop(m, None)
        return Polynomial._raw(self._modulus, self._variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, r: int):
        return power(self, r)

    # -- comparison and printing ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.p == other.p
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Polynomial(p={self.p}, vars={','.join(self._variables)}, {to_text(self)!r})"


def check_compatible(f: Polynomial, g: Polynomial):
    if f.p != g.p:
        raise ModulusMismatchError(f"Characteristics differ: {f.p} vs {g.p}")
    if f.nvars != g.nvars:
        raise ArityMismatchError(f"Variable counts differ: {f.nvars} vs {g.nvars}")


def format_monomial(monomial: Monomial, variables: Sequence[str]) -> str:
    factors = []
    for name, e in zip(variables, monomial):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def to_text(f: Polynomial) -> str:
    """Canonical printer: descending grevlex, explicit '*' and '^'."""
    if f.is_zero:
        return "0"

    parts = []
    for monomial, coefficient in f.sorted_terms():
        if not any(monomial):
            parts.append(str(coefficient))
        elif coefficient == 1:
            parts.append(format_monomial(monomial, f.variables))
        else:
            parts.append(f"{coefficient}*{format_monomial(monomial, f.variables)}")
    return " + ".join(parts)


def _multiply_terms(a: Mapping, b: Mapping, p: int, bound: Optional[int] = None) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    get = out.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(map(add, ma, mb))
            if bound is not None and m and max(m) >= bound:
                continue
            out[m] = get(m, 0) + ca * cb
    return {m: c % p for m, c in out.items() if c % p}


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    check_compatible(f, g)
    if f.num_terms > g.num_terms:
        f, g = g, f
    return Polynomial._raw(f.modulus, f.variables, _multiply_terms(f._terms, g._terms, f.p))


def mul_mod_bracket(f: Polynomial, g: Polynomial, q: int) -> Polynomial:
    """reduce_mod_bracket(f * g, q) without materializing the dropped terms."""
    check_compatible(f, g)
    if f.num_terms > g.num_terms:
        f, g = g, f
    return Polynomial._raw(f.modulus, f.variables, _multiply_terms(f._terms, g._terms, f.p, q))


def reduce_mod_bracket(f: Polynomial, q: int) -> Polynomial:
    """Drops every term with some exponent >= q, i.e. reduces modulo (x_1^q, ..., x_n^q)."""
    if q < 1:
        raise ValueError(f"Bracket exponent must be positive, got {q}")
    return Polynomial._raw(
        f.modulus,
        f.variables,
        {m: c for m, c in f._terms.items() if not m or max(m) < q},
    )


def frobenius_power(f: Polynomial, q: int) -> Polynomial:
    """
    f^q for q a power of p: every exponent is multiplied by q and the
    coefficients stay fixed, since c^p = c on the prime field.
    """
    return Polynomial._raw(
        f.modulus,
        f.variables,
        {tuple(e * q for e in m): c for m, c in f._terms.items()},
    )


def _multinomial_power(f: Polynomial, r: int, bound: Optional[int]) -> Dict[Monomial, int]:
    # r < p here, so every factorial up to r is invertible mod p
    p = f.p
    factorial = [1] * (r + 1)
    for i in range(1, r + 1):
        factorial[i] = factorial[i - 1] * i % p
    inverse_factorial = [pow(v, -1, p) for v in factorial]

    items = list(f._terms.items())
    out: Dict[Monomial, int] = {}
    last = len(items) - 1

    def expand(index, remaining, exponents, coefficient):
        monomial, c = items[index]
        if index == last:
            m = tuple(e + remaining * x for e, x in zip(exponents, monomial))
            if bound is not None and m and max(m) >= bound:
                return
            value = coefficient * pow(c, remaining, p) * inverse_factorial[remaining]
            out[m] = out.get(m, 0) + value
            return

        c_power = 1
        for k in range(remaining + 1):
            m = tuple(e + k * x for e, x in zip(exponents, monomial))
            if bound is not None and m and max(m) >= bound:
                break
            expand(index + 1, remaining - k, m, coefficient * c_power * inverse_factorial[k] % p)
            c_power = c_power * c % p

    expand(0, r, (0,) * f.nvars, factorial[r])
    return {m: v % p for m, v in out.items() if v % p}


def _small_power(f: Polynomial, r: int, bound: Optional[int] = None) -> Polynomial:
    """f^r for 0 <= r < p, optionally dropping terms with an exponent >= bound."""
    if r == 0:
        result = f.one()
    elif r == 1 or f.is_zero:
        result = f
    elif (
        f.num_terms <= MULTINOMIAL_MAX_TERMS
        and comb(r + f.num_terms - 1, f.num_terms - 1) <= MULTINOMIAL_LIMIT
    ):
        return Polynomial._raw(f.modulus, f.variables, _multinomial_power(f, r, bound))
    else:
        base = f if bound is None else reduce_mod_bracket(f, bound)
        result = base
        for _ in range(r - 1):
            if bound is None:
                result = mul(result, base)
            else:
                result = mul_mod_bracket(result, base, bound)
        return result

    return result if bound is None else reduce_mod_bracket(result, bound)


def base_p_digits(r: int, p: int) -> List[int]:
    digits = []
    while r:
        r, d = divmod(r, p)
        digits.append(d)
    return digits


def power(f: Polynomial, r: int) -> Polynomial:
    """
    f^r via the base-p expansion r = sum r_i p^i, as the product of the
    Frobenius powers (f^{r_i})^{p^i}.
    """
    if r < 0:
        raise ValueError(f"Exponent must be nonnegative, got {r}")

    p = f.p
    result = f.one()
    for i, digit in enumerate(base_p_digits(r, p)):
        if digit == 0:
            continue
        factor = frobenius_power(_small_power(f, digit), p ** i)
        result = mul(result, factor)
    return result


def power_mod_bracket(f: Polynomial, r: int, q: int) -> Polynomial:
    """reduce_mod_bracket(f^r, q), truncating after every multiplication."""
    if r < 0:
        raise ValueError(f"Exponent must be nonnegative, got {r}")

    p = f.p
    result = reduce_mod_bracket(f.one(), q)
    for i, digit in enumerate(base_p_digits(r, p)):
        if digit == 0:
            continue
        scale = p ** i
        # a term x^b survives scaling by p^i iff every p^i * b_j < q
        bound = -(-q // scale)
        factor = frobenius_power(_small_power(f, digit, bound), scale)
        result = mul_mod_bracket(result, factor, q)
        if result.is_zero:
            break
    return result


def dehomogenize(f: Polynomial, variable: str) -> Polynomial:
    """Sets the named variable to 1 and removes it from the ambient ring."""
    if variable not in f.variables:
        raise UnknownVariableError(
            f"Unknown variable {variable!r}; declared: {', '.join(f.variables)}"
        )

    index = f.variables.index(variable)
    variables = f.variables[:index] + f.variables[index + 1:]
    terms: Dict[Monomial, int] = {}
    for monomial, c in f.items():
        reduced = monomial[:index] + monomial[index + 1:]
        terms[reduced] = terms.get(reduced, 0) + c
    return Polynomial(f.modulus, variables, terms)
