from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..exceptions import InvalidSelfIntersectionError, ValidationError

# pair and klt verdict statuses
PROVEN_GFR = "ProvenGFR"
PROVEN_F_SPLIT = "ProvenFSplit"
NOT_SPLIT_UP_TO = "NotSplitUpTo"
INCONCLUSIVE_GFR_UP_TO = "InconclusiveGFRUpTo"
PROVEN_SFR = "ProvenSFR"
INCONCLUSIVE_UP_TO = "InconclusiveUpTo"
NOT_KLT_BOUNDARY = "NotKltBoundary"


@dataclass
class RootDecomposition:
    e: int
    q: int
    parts: Dict[Tuple[int, ...], "Polynomial"]


@dataclass
class NuChain:
    f: "Polynomial"
    p: int
    entries: List[Tuple[int, int]]

    def nu(self, e: int) -> int:
        return dict(self.entries)[e]

    @property
    def e_max(self) -> int:
        return self.entries[-1][0]


@dataclass
class SplittingType:
    a: int
    e: int
    p: int
    summands: List[int]


@dataclass
class FedderVerdict:
    f_split: bool
    e: int
    p: int
    witness: Optional[Tuple[int, ...]]


@dataclass
class FptLevel:
    e: int
    nu: int
    lower: Fraction
    upper: Fraction
    candidate: Fraction


@dataclass
class FptReport:
    chain: NuChain
    lower: Fraction
    upper: Fraction
    candidate: Fraction
    candidate_stable: bool
    history: List[FptLevel] = field(default_factory=list)


@dataclass
class TestIdealResult:
    __test__ = False

    t: Fraction
    e: int
    basis: "GroebnerBasis"
    stabilized: bool


@dataclass
class JumpScan:
    n: int
    e_max: int
    jumps: List[Fraction]
    certified: List[bool]


@dataclass(frozen=True)
class P1Point:
    kind: str  # "zero", "infinity" or "finite"
    value: int = 0

    def __str__(self):
        if self.kind == "zero":
            return "0"
        if self.kind == "infinity":
            return "inf"
        return str(self.value)


@dataclass
class P1Pair:
    points: List[P1Point]
    coeffs: List[Fraction]

    def __post_init__(self):
        if len(self.points) != len(self.coeffs):
            raise ValidationError("A pair needs one coefficient per marked point")
        if len(set(self.points)) != len(self.points):
            raise ValidationError("Marked points must be distinct")
        for a in self.coeffs:
            if not 0 <= a <= 1:
                raise ValidationError(f"Coefficient {a} is outside [0, 1]")


@dataclass
class PairVerdict:
    status: str
    e: int
    witness: Optional[Tuple[int, int]] = None

    @property
    def proven(self) -> bool:
        return self.status in (PROVEN_GFR, PROVEN_F_SPLIT)


@dataclass
class StarGraph:
    center: int
    arms: List[List[int]]

    def __post_init__(self):
        if not 2 <= len(self.arms) <= 3:
            raise ValidationError(f"A star graph has 2 or 3 arms, got {len(self.arms)}")
        for value in [self.center] + [v for arm in self.arms for v in arm]:
            if value > -2:
                raise InvalidSelfIntersectionError(f"Self-intersection {value} is above -2")
        if any(not arm for arm in self.arms):
            raise ValidationError("Arms must be nonempty chains")


@dataclass
class BoundaryData:
    arm_coefficients: List[List[Fraction]]
    arm_determinants: List[int]
    center_excess: Fraction


@dataclass
class KltVerdict:
    status: str
    e: int
    graph_type: Tuple[int, ...]
    in_klt_list: bool
    pair_verdict: Optional[PairVerdict]


@dataclass
class S0Job:
    f: "Polynomial"
    dehom_variable: Optional[str]
    m_values: List[int]
    e_max: int


@dataclass
class S0Report:
    job: S0Job
    dims: Dict[int, List[int]]
    stable_dims: Dict[int, Optional[int]]
    degree_budgets: Dict[int, int]


@dataclass
class SweepSpec:
    """Primes to sweep in ascending order; e_max None defers to the per-command config default."""

    primes: List[int]
    e_max: Optional[int]
    output_format: str = "text"
