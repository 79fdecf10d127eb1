"""Integrity uncertainty of basic probability assignments.

A BPA is turned into a star-shaped logical network whose node degrees are
the focal masses; the approximate entropy of the descending degree sequence
measures how plausible undiscovered elements are.
"""

__version__ = "0.1.0"

from .apen import (
    DegenerateTolerance,
    SequenceTooShort,
    apen,
    apen_components,
    chebyshev,
    correlation_count,
    embed,
    phi,
    population_std,
)
from .evidence import (
    BPAParseError,
    FocalElement,
    FrameOfDiscernment,
    MassFunction,
    UnknownHypothesisError,
    ValidationReport,
    dump_bpa,
    load_bpa,
    mass_of,
    parse_bpa,
    validate,
)
from .logical_graph import LogicalDegreeMap, TooFewNodes, logical_degrees, slide, slide_apen
from .measure import InvalidBPA, UIResult, ui
from .sweep import SimplexGrid, SweepRecord, read_sweep, sweep_family, sweep_simplex, write_sweep, x_test
