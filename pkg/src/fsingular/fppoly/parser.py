"""
Polynomial text grammar.

    expr     :: term [ ('+' | '-') term ]*
    term     :: unary [ '*' unary ]*
    unary    :: ('+' | '-') unary | power
    power    :: atom [ '^' exponent ]
    exponent :: ['-'] '0'..'9'+
    atom     :: integer | name | '(' expr ')'

Juxtaposition is not multiplication: "2x" and "x y" are syntax errors.
"""

from typing import Sequence

from pyparsing import (
    Forward,
    Literal,
    Optional,
    ParseBaseException,
    Regex,
    Word,
    ZeroOrMore,
    alphanums,
    alphas,
    nums,
    one_of,
)

from ..exceptions import NegativeExponentError, PolynomialSyntaxError, ValidationError
from .polynomial import Polynomial, as_modulus, power


class PolynomialParser:
    def __init__(self, p, variables: Sequence[str]):
        self.modulus = as_modulus(p)
        self.variables = tuple(variables)

        if not self.variables:
            raise ValidationError("At least one variable must be declared")
        if len(set(self.variables)) != len(self.variables):
            raise ValidationError(f"Variable names must be distinct: {', '.join(self.variables)}")

        lpar = Literal("(").suppress()
        rpar = Literal(")").suppress()
        integer = Word(nums).set_parse_action(self.push_integer)
        name = Word(alphas + "_", alphanums + "_").set_parse_action(self.push_variable)
        exponent = Regex(r"-?\d+")

        expr = Forward()
        atom = integer | name | (lpar + expr + rpar)
        factor = (atom + Optional(Literal("^").suppress() + exponent)).set_parse_action(self.push_power)
        unary = Forward()
        unary <<= (one_of("+ -") + unary).set_parse_action(self.push_sign) | factor
        term = (unary + ZeroOrMore(Literal("*").suppress() + unary)).set_parse_action(self.push_product)
        expr <<= (term + ZeroOrMore(one_of("+ -") + term)).set_parse_action(self.push_sum)
        self.bnf = expr

    def push_integer(self, tokens):
        return Polynomial.constant(self.modulus, self.variables, int(tokens[0]))

    def push_variable(self, tokens):
        return Polynomial.variable(self.modulus, self.variables, tokens[0])

    def push_power(self, tokens):
        base = tokens[0]
        if len(tokens) == 1:
            return base
        r = int(tokens[1])
        if r < 0:
            raise NegativeExponentError(f"Negative exponent {r} in polynomial text")
        return power(base, r)

    def push_sign(self, tokens):
        return -tokens[1] if tokens[0] == "-" else tokens[1]

    def push_product(self, tokens):
        result = tokens[0]
        for factor in list(tokens)[1:]:
            result = result * factor
        return result

    def push_sum(self, tokens):
        tokens = list(tokens)
        result = tokens[0]
        for op, term in zip(tokens[1::2], tokens[2::2]):
            result = result + term if op == "+" else result - term
        return result

    def parse(self, text: str) -> Polynomial:
        try:
            result = self.bnf.parse_string(text, parse_all=True)
        except ParseBaseException as e:
            raise PolynomialSyntaxError(f"Cannot parse {text!r}: {e.msg}", position=e.loc)
        return result[0]


def parse(text: str, p, variables: Sequence[str]) -> Polynomial:
    return PolynomialParser(p, variables).parse(text)


def parse_variables(text: str) -> list:
    """Splits a "x,y,z" variable list."""
    return [v.strip() for v in text.split(",") if v.strip()]
