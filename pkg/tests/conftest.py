import random

import pytest

from fsingular.fppoly import Polynomial


def make_random_polynomial(rng: random.Random, p: int, variables, max_terms: int = 4, max_degree: int = 4,
                           homogeneous_degree: int = None, constant_term: bool = True) -> Polynomial:
    n = len(variables)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        if homogeneous_degree is not None:
            cuts = sorted(rng.randint(0, homogeneous_degree) for _ in range(n - 1))
            bounds = [0] + cuts + [homogeneous_degree]
            monomial = tuple(bounds[i + 1] - bounds[i] for i in range(n))
        else:
            monomial = tuple(rng.randint(0, max_degree) for _ in range(n))
            while sum(monomial) > max_degree:
                monomial = tuple(rng.randint(0, max_degree) for _ in range(n))
        if not constant_term and not any(monomial):
            continue
        terms[monomial] = rng.randint(1, p - 1)
    return Polynomial(p, variables, terms)


@pytest.fixture
def random_polynomial():
    return make_random_polynomial
