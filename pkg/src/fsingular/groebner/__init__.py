from .buchberger import (
    GroebnerBasis,
    TermOrder,
    buchberger,
    ideal_contains,
    ideal_equals,
    ideal_membership,
    normal_form,
)
from .monomial_ideal import MonomialIdeal, bracket_power, colon, colon_by_monomial, intersect, is_power_of
