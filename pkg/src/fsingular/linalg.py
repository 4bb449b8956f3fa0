"""
Row reduction over the prime field.

Entries are kept as int64 residues in [0, p-1]; with p < 2^31 every
product of two residues fits before reduction.
"""

import logging
from typing import Dict, Iterable, List, Sequence

import numpy as np

logger = logging.getLogger(__name__)


def rank_modp(matrix, p: int) -> int:
    """Exact rank over F_p."""
    A = np.array(matrix, dtype=np.int64, copy=True)
    if A.size == 0:
        return 0
    A %= p
    m, n = A.shape
    r = 0
    for c in range(n):
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        inv = pow(int(A[r, c]), -1, p)
        A[r, :] = (A[r, :] * inv) % p

        below = A[r + 1:]
        factors = below[:, c].copy()
        mask = factors != 0
        if mask.any():
            below[mask] = (below[mask] - np.outer(factors[mask], A[r, :])) % p
        r += 1
        if r == m:
            break
    return r


def coordinate_matrix(polys: Iterable, index: Dict[tuple, int]) -> np.ndarray:
    """One row per polynomial, one column per monomial of `index`."""
    polys = list(polys)
    A = np.zeros((len(polys), len(index)), dtype=np.int64)
    for i, f in enumerate(polys):
        for monomial, c in f.items():
            A[i, index[monomial]] = c
    return A


def span_rank(polys: Sequence, monomials: List[tuple], p: int) -> int:
    index = {m: i for i, m in enumerate(monomials)}
    return rank_modp(coordinate_matrix(polys, index), p)
