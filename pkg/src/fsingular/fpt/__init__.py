from .tau import check_jump_scaling, frobenius_period, jump_scan, root_ideal, tau_closure, test_ideal_principal
from .threshold import fpt_estimate, is_sharply_f_pure, simplest_rational
