from .base import DEFAULTS, FSingularBase
