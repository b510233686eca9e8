"""Tools for generalized graph saturation numbers ``sat(n, H, F)``."""

from .graph import Graph, GraphError, from_graph6, to_graph6
from .patterns import Pattern, PatternError, parse_pattern
from .counting import count_copies, copies
from .saturation import SaturationCertificate, is_free, is_saturated, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "Pattern",
    "PatternError",
    "SaturationCertificate",
    "copies",
    "count_copies",
    "from_graph6",
    "is_free",
    "is_saturated",
    "parse_pattern",
    "to_graph6",
    "verify_certificate",
]
