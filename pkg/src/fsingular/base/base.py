r"""

# Nomenclature

| Method | Computes | Module |
| --- | --- | --- |
| `fs.fedder` | Fedder's criterion for a hypersurface | `fsingular.fedder` |
| `fs.is_ordinary` | ordinarity of a plane cubic | `fsingular.fedder` |
| `fs.nu` | the chain nu_e(f) | `fsingular.frobcore` |
| `fs.fpt` | F-pure threshold interval and candidate | `fsingular.fpt` |
| `fs.tau` | test ideal of a principal pair | `fsingular.fpt` |
| `fs.jumps` | F-jumping numbers on a grid | `fsingular.fpt` |
| `fs.p1_pair` | global F-splitting and F-regularity of a pair on P^1 | `fsingular.p1pairs` |
| `fs.klt_surface` | strong F-regularity of a star-shaped surface singularity | `fsingular.kltsurf` |
| `fs.s0_dimension` | Frobenius-stable sections of a hypersurface | `fsingular.s0dim` |
| `fs.splitting_type` | Frobenius pushforward of O(a) on P^1 | `fsingular.frobcore` |

Every key of the config dict is optional:

```python
fs = FSingularBase(config={"e_max": 5, "workers": 4})
f = fs.polynomial("y^2-x^3", 7, ["x", "y"])
fs.fpt(f).candidate  # Fraction(5, 6)
```

"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from ..fedder.fedder import fedder_hypersurface, is_ordinary_plane_cubic
from ..fppoly.parser import parse
from ..fppoly.polynomial import Polynomial
from ..fpt.tau import jump_scan, test_ideal_principal
from ..fpt.threshold import fpt_estimate
from ..frobcore.frobenius import nu_chain, nu_full_scan, p1_splitting_type
from ..kltsurf.graphs import classify_sfr
from ..p1pairs.pairs import is_globally_f_regular, is_globally_f_split
from ..s0dim.stable_sections import s0_dimension
from ..types import (
    FedderVerdict,
    FptReport,
    JumpScan,
    KltVerdict,
    NuChain,
    P1Pair,
    PairVerdict,
    S0Job,
    S0Report,
    SplittingType,
    StarGraph,
    TestIdealResult,
)
from ..utils import check_prime

DEFAULTS = {
    "e_max": 4,
    "pair_e_max": 6,
    "s0_e_max": 3,
    "groebner_budget": 200_000,
    "matrix_budget": 5_000_000,
    "workers": 1,
    "log_level": "WARNING",
}


class FSingularBase:
    def __init__(self, config=None):
        self.config = config if config is not None else {}
        self.logger = logging.getLogger("fsingular")

    def get(self, key: str):
        return self.config.get(key, DEFAULTS[key])

    def log(self, message: str):
        self.logger.info(message)

    def _level(self, e_max: Optional[int], key: str = "e_max") -> int:
        return self.get(key) if e_max is None else e_max

    def polynomial(self, text: str, p: int, variables: Sequence[str]) -> Polynomial:
        check_prime(p)
        return parse(text, p, variables)

    def fedder(self, f: Polynomial, e: int = 1) -> FedderVerdict:
        self.log(f"fedder p={f.p} e={e}: {f}")
        return fedder_hypersurface(f, e)

    def is_ordinary(self, f: Polynomial) -> bool:
        self.log(f"ordinary p={f.p}: {f}")
        return is_ordinary_plane_cubic(f)

    def nu(self, f: Polynomial, e_max: Optional[int] = None, full_scan: bool = False) -> NuChain:
        e_max = self._level(e_max)
        self.log(f"nu p={f.p} e_max={e_max} full_scan={full_scan}: {f}")
        if full_scan:
            return NuChain(f=f, p=f.p, entries=[(e, nu_full_scan(f, e)) for e in range(1, e_max + 1)])
        return nu_chain(f, e_max)

    def fpt(self, f: Polynomial, e_max: Optional[int] = None) -> FptReport:
        e_max = self._level(e_max)
        self.log(f"fpt p={f.p} e_max={e_max}: {f}")
        return fpt_estimate(f, e_max)

    def tau(self, f: Polynomial, t: Fraction, e_max: Optional[int] = None) -> TestIdealResult:
        e_max = self._level(e_max)
        self.log(f"tau p={f.p} t={t} e_max={e_max}: {f}")
        return test_ideal_principal(f, t, e_max, self.get("groebner_budget"))

    def jumps(self, f: Polynomial, n: int, e_max: Optional[int] = None) -> JumpScan:
        e_max = self._level(e_max)
        self.log(f"jumps p={f.p} N={n} e_max={e_max}: {f}")
        return jump_scan(f, n, e_max, self.get("groebner_budget"))

    def p1_pair(self, pair: P1Pair, p: int, e_max: Optional[int] = None) -> Tuple[PairVerdict, PairVerdict]:
        """(globally F-split verdict, globally F-regular verdict)"""
        check_prime(p)
        e_max = self._level(e_max, "pair_e_max")
        self.log(f"p1 pair p={p} e_max={e_max}")
        return is_globally_f_split(pair, p, e_max), is_globally_f_regular(pair, p, e_max)

    def klt_surface(self, graph: StarGraph, p: int, e_max: Optional[int] = None) -> KltVerdict:
        check_prime(p)
        e_max = self._level(e_max, "pair_e_max")
        self.log(f"klt surface p={p} e_max={e_max}: {graph}")
        return classify_sfr(graph, p, e_max)

    def s0_dimension(
        self,
        f: Polynomial,
        m_values: Sequence[int],
        e_max: Optional[int] = None,
        dehom_variable: Optional[str] = None,
    ) -> S0Report:
        e_max = self._level(e_max, "s0_e_max")
        self.log(f"s0 p={f.p} m={list(m_values)} e_max={e_max}: {f}")
        job = S0Job(f=f, dehom_variable=dehom_variable, m_values=list(m_values), e_max=e_max)
        return s0_dimension(job, self.get("matrix_budget"))

    def splitting_type(self, a: int, e: int, p: int) -> SplittingType:
        check_prime(p)
        return p1_splitting_type(a, e, p)

    def map_primes(self, fn: Callable[[int], list], primes: Iterable[int]) -> List:
        """fn over the primes, in prime order; fn must be picklable when workers > 1."""
        primes = sorted(primes)
        workers = self.get("workers")
        if workers > 1 and len(primes) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                return list(pool.map(fn, primes))
        return [fn(p) for p in primes]
