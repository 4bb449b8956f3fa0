"""
Frobenius-stable sections S^0(X, w_X^m) of a hypersurface X = V(f) in P^n.

With w = d - n - 1, T = m*w and l = w*(1 + (m-1)*q), q = p^e, and f~ the
dehomogenization of f:

    V_e = phi_root(f~^(q-1) * P_l, e)  inside P_T,
    W_e = V_e intersected with f~ * P_(T - deg f~),

and dim S^0 is read off as dim V_e / W_e for e large.
"""

import logging
from math import comb
from typing import Dict, List, Optional, Tuple

from ..exceptions import (
    BudgetExceededError,
    DegenerateDehomogenizationError,
    NotHomogeneousError,
    ZeroPolynomialError,
)
from ..fppoly.polynomial import Monomial, Polynomial, dehomogenize, monomials_up_to_degree, power
from ..frobcore.frobenius import phi_root, phi_root_shifts
from ..linalg import coordinate_matrix, rank_modp
from ..types import S0Job, S0Report

logger = logging.getLogger(__name__)

DEFAULT_MATRIX_BUDGET = 5_000_000


def working_degrees(d: int, n: int, m: int, q: int) -> Tuple[int, int]:
    """(T, l) = (m(d-n-1), (d-n-1)(1 + (m-1)q))"""
    w = d - n - 1
    return m * w, w * (1 + (m - 1) * q)


def dehomogenized(job: S0Job) -> Polynomial:
    f = job.f
    if f.is_zero:
        raise ZeroPolynomialError("The hypersurface equation is zero")
    if not f.is_homogeneous:
        raise NotHomogeneousError(f"{f} is not homogeneous")
    variable = job.dehom_variable or f.variables[0]
    ft = dehomogenize(f, variable)
    if ft.is_constant:
        raise DegenerateDehomogenizationError(f"Setting {variable} = 1 in {f} leaves a constant")
    return ft


class _ShiftTable:
    """phi_root(f~^(q-1) * x^c, e) for residues c in [0, q)^n, computed once per level."""

    def __init__(self, ft: Polynomial, e: int):
        self.ft = ft
        self.e = e
        self.q = ft.p ** e
        self._all: Optional[Dict[Monomial, Polynomial]] = None
        self._one_step = None
        self._cache: Dict[Monomial, Polynomial] = {}

    def _direct_cost(self) -> int:
        k = self.ft.num_terms
        return comb(self.q - 1 + k - 1, k - 1)

    def shifts(self, l: int) -> Dict[Monomial, Polynomial]:
        n = self.ft.nvars
        residues = comb(l + n, n) if l >= 0 else 0
        if self._all is not None or self._direct_cost() <= residues:
            if self._all is None:
                self._all = phi_root_shifts(power(self.ft, self.q - 1), self.e)
            return {c: h for c, h in self._all.items() if sum(c) <= l}

        out = {}
        for c in monomials_up_to_degree(n, l):
            if max(c, default=0) >= self.q:
                continue
            h = self._iterated(c)
            if not h.is_zero:
                out[c] = h
        return out

    def _iterated(self, c: Monomial) -> Polynomial:
        # phi_e(F^(q-1) g) = phi_(e-1)(F^(p^(e-1)-1) phi_1(F^(p-1) g))
        if c not in self._cache:
            if self._one_step is None:
                self._one_step = power(self.ft, self.ft.p - 1)
            h = Polynomial.monomial(self.ft.modulus, self.ft.variables, c)
            for _ in range(self.e):
                h = phi_root(self._one_step * h, 1)
                if h.is_zero:
                    break
            self._cache[c] = h
        return self._cache[c]


def image_generators(table: _ShiftTable, l: int) -> List[Polynomial]:
    """Spanning set of V_e: x^s * h_c over all c + q*s of degree <= l."""
    q = table.q
    n = table.ft.nvars
    rows = []
    for c, h in table.shifts(l).items():
        slack = (l - sum(c)) // q
        for s in monomials_up_to_degree(n, slack):
            rows.append(h.shift(s))
    return rows


def _dimension(ft: Polynomial, table: _ShiftTable, m: int, d: int, budget: int) -> int:
    n = ft.nvars
    T, l = working_degrees(d, n, m, table.q)
    if T < 0 or l < 0:
        return 0

    columns = monomials_up_to_degree(n, T)
    index = {mono: i for i, mono in enumerate(columns)}
    images = image_generators(table, l)
    multiples = [ft.shift(s) for s in monomials_up_to_degree(n, T - ft.total_degree)]

    size = (len(images) + len(multiples)) * len(columns)
    if size > budget:
        raise BudgetExceededError(
            f"s0 matrix for m={m}, e={table.e} has {size} entries, budget {budget}"
        )
    logger.debug(
        "s0 m=%d e=%d: %d image rows, %d multiples, %d columns", m, table.e, len(images), len(multiples), len(columns)
    )

    if not images:
        return 0
    # distinct monomial shifts of f~ are linearly independent
    combined = rank_modp(coordinate_matrix(images + multiples, index), ft.p)
    return combined - len(multiples)


def s0_dimension(job: S0Job, matrix_budget: int = DEFAULT_MATRIX_BUDGET) -> S0Report:
    """
    dim V_e / W_e for every m in job.m_values and e = 1..job.e_max.

    Irreducibility of f is assumed, not checked.
    """
    ft = dehomogenized(job)
    f = job.f
    d = f.total_degree
    n = f.nvars - 1

    dims: Dict[int, List[int]] = {m: [] for m in job.m_values}
    budgets = {m: m * (d - n - 1) for m in job.m_values}

    for e in range(1, job.e_max + 1):
        table = _ShiftTable(ft, e)
        for m in job.m_values:
            dims[m].append(_dimension(ft, table, m, d, matrix_budget))

    stable = {}
    for m, values in dims.items():
        stable[m] = values[-1] if len(values) >= 2 and values[-1] == values[-2] else None
        if stable[m] is None:
            logger.info("s0 dimension for m=%d did not stabilize by e=%d", m, job.e_max)

    return S0Report(job=job, dims=dims, stable_dims=stable, degree_budgets=budgets)


def s0_table(report: S0Report) -> List[dict]:
    """One flat record per (m, e) cell."""
    records = []
    for m, values in report.dims.items():
        stable = report.stable_dims[m]
        for e, dim in enumerate(values, start=1):
            records.append({
                "m": m,
                "e": e,
                "dim": dim,
                "degree_budget": report.degree_budgets[m],
                "stable_dim": "unstabilized" if stable is None else stable,
            })
    return records
