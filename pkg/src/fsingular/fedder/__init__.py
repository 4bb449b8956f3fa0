from .fedder import fedder_hypersurface, fedder_monomial_ideal, fedder_sweep, is_ordinary_plane_cubic
