from .frobenius import (
    nu_chain,
    nu_full_scan,
    p1_splitting_type,
    phi_root,
    phi_root_shifts,
    reconstruct,
    root_decompose,
    root_ideal_generators,
    section_count_mismatches,
)
from ..fppoly.polynomial import frobenius_power
