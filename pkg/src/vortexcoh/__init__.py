"""Exact LG/HG connection coefficients, coherence and entropy of optical vortex fields."""

from vortexcoh.exactnum import FSeries, PiRadical, Rat, SqrtRat, rat_str
from vortexcoh.modecoeff import CoeffDist, ModeIndex, distribution
from vortexcoh.reports import SuiteResult, VerifyReport

__version__ = "0.1.0"

__all__ = [
    "CoeffDist",
    "FSeries",
    "ModeIndex",
    "PiRadical",
    "Rat",
    "SqrtRat",
    "SuiteResult",
    "VerifyReport",
    "distribution",
    "rat_str",
]
