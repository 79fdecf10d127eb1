"""Integrity uncertainty UI(X) of a basic probability assignment.

UI is the approximate entropy of the BPA's slide degree sequence with
embedding dimension 2 and tolerance 0.2 times the sequence's population
standard deviation. Larger values mean undiscovered elements are more
plausible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apen import apen_components, population_std
from .evidence import DEFAULT_EPSILON_SUM, MassFunction, ValidationReport, validate
from .logical_graph import MIN_NODES, TooFewNodes, slide

DEFAULT_M = 2
DEFAULT_R_FACTOR = 0.2


class InvalidBPA(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("invalid BPA: " + "; ".join(report.violations))


@dataclass(frozen=True)
class UIResult:
    ui: float
    signed_apen: float
    phi_m: float
    phi_m_plus_1: float
    r: float
    std: float
    n_nodes: int
    slide: tuple[float, ...]
    m: int = DEFAULT_M
    # Constant slide sequence: no window spread at all, UI is 0 by definition.
    degenerate: bool = False

    @property
    def flags(self) -> tuple[str, ...]:
        return ("constant_slide",) if self.degenerate else ()


def ui(
    bpa: MassFunction,
    m: int = DEFAULT_M,
    r_factor: float = DEFAULT_R_FACTOR,
    epsilon_sum: float = DEFAULT_EPSILON_SUM,
) -> UIResult:
    """Compute UI(bpa) together with the intermediate quantities.

    Raises :class:`InvalidBPA` when the mass axioms fail and
    :class:`TooFewNodes` when the network has fewer than three nodes (or
    fewer than ``m + 1`` under a non-default ``m``).
    """
    report = validate(bpa, epsilon_sum)
    if not report.ok:
        raise InvalidBPA(report)
    seq = slide(bpa)
    needed = max(MIN_NODES, m + 1)
    if len(seq) < needed:
        raise TooFewNodes(len(seq), needed)

    std = population_std(seq)
    r = r_factor * std
    if std == 0.0:
        return UIResult(0.0, 0.0, 0.0, 0.0, r, std, len(seq), seq, m, degenerate=True)

    phi_m, phi_next = apen_components(seq, m, r)
    signed = phi_m - phi_next
    return UIResult(abs(signed), signed, phi_m, phi_next, r, std, len(seq), seq, m)
