"""Power domination, domination and zero forcing numbers with Nordhaus-Gaddum bound checks."""

__version__ = "0.1.0"

from .graph import Graph, build, complement
from .g6 import emit_graph6, parse_graph6
from .solvers import gamma, gamma_p, zero_forcing
from .ng import NGReport, ng_report

__all__ = [
    "Graph",
    "build",
    "complement",
    "parse_graph6",
    "emit_graph6",
    "gamma_p",
    "gamma",
    "zero_forcing",
    "ng_report",
    "NGReport",
]
