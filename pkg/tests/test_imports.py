

def test_regular_imports():
    from fsingular.base.base import FSingularBase
    from fsingular.cli.main import run
    from fsingular.fedder.fedder import fedder_hypersurface
    from fsingular.fppoly.parser import parse
    from fsingular.fppoly.polynomial import Polynomial
    from fsingular.fpt.tau import jump_scan
    from fsingular.fpt.threshold import fpt_estimate
    from fsingular.frobcore.frobenius import nu_chain
    from fsingular.groebner.buchberger import buchberger
    from fsingular.groebner.monomial_ideal import MonomialIdeal
    from fsingular.kltsurf.graphs import classify_sfr
    from fsingular.p1pairs.pairs import is_globally_f_regular
    from fsingular.s0dim.stable_sections import s0_dimension

def test_shortcut_imports():
    from fsingular import FSingularBase, Polynomial, parse
    from fsingular.base import FSingularBase
    from fsingular.cli import main, run
    from fsingular.fedder import fedder_hypersurface, fedder_monomial_ideal, is_ordinary_plane_cubic
    from fsingular.fppoly import mul, power, reduce_mod_bracket
    from fsingular.fpt import fpt_estimate, jump_scan, test_ideal_principal
    from fsingular.frobcore import nu_chain, phi_root, root_decompose
    from fsingular.groebner import GroebnerBasis, MonomialIdeal, buchberger
    from fsingular.kltsurf import boundary_coefficients, classify_sfr
    from fsingular.p1pairs import is_globally_f_split, parse_pair
    from fsingular.s0dim import s0_dimension
