from .pairs import (
    INFINITY,
    ZERO,
    finite_point,
    format_pair,
    is_globally_f_regular,
    is_globally_f_split,
    pair_product,
    parse_pair,
    parse_point,
)
