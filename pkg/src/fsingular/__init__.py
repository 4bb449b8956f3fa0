from .base import FSingularBase
from .fppoly import Polynomial, PrimeModulus, parse

__version__ = "0.1.0"
