from .parser import PolynomialParser, parse, parse_variables
from .polynomial import (
    Monomial,
    Polynomial,
    PrimeModulus,
    dehomogenize,
    frobenius_power,
    grevlex_key,
    lex_key,
    monomial_divides,
    monomial_lcm,
    monomials_up_to_degree,
    mul,
    mul_mod_bracket,
    power,
    power_mod_bracket,
    reduce_mod_bracket,
    to_text,
)
