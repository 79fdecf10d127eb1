"""UI over parameterized BPA families on the (x, y) simplex.

The reference family is ``X_test(x, y) = {A: x, B: y, AB: 1 - x - y, ∅: 0}``.
Results are written as CSV with header ``x,y,ui,signed_apen,flag``, floats
at 17 significant digits and rows sorted by (x, y).
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .apen import DegenerateTolerance
from .evidence import MassFunction
from .logical_graph import TooFewNodes
from .measure import DEFAULT_M, DEFAULT_R_FACTOR, InvalidBPA, ui

HEADER = ("x", "y", "ui", "signed_apen", "flag")

_ERROR_TAGS = (
    (TooFewNodes, "too_few_nodes"),
    (InvalidBPA, "invalid_bpa"),
    (DegenerateTolerance, "degenerate_tolerance"),
)


@dataclass(frozen=True)
class SimplexGrid:
    """Grid points (i/k, j/k) with i + j <= k."""

    resolution: int

    def __post_init__(self):
        k = self.resolution
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise ValueError(f"resolution must be a positive integer, got {k!r}")

    def indices(self):
        k = self.resolution
        for i in range(k + 1):
            for j in range(k + 1 - i):
                yield i, j

    @property
    def points(self) -> list[tuple[float, float]]:
        k = self.resolution
        return [(i / k, j / k) for i, j in self.indices()]

    def __len__(self):
        k = self.resolution
        return (k + 1) * (k + 2) // 2


@dataclass(frozen=True)
class SweepRecord:
    x: float
    y: float
    ui: Optional[float]
    signed_apen: Optional[float]
    flag: str = ""

    @property
    def error_tag(self) -> Optional[str]:
        return self.flag if self.ui is None else None


def x_test(x: float, y: float, rest: Optional[float] = None) -> MassFunction:
    """``{A: x, B: y, AB: rest, ∅: 0}``; ``rest`` defaults to ``1 - x - y``."""
    if rest is None:
        rest = 1.0 - x - y
    return MassFunction.from_pairs(
        ("A", "B"),
        [(("A",), x), (("B",), y), (("A", "B"), rest), ((), 0.0)],
    )


def evaluate(bpa: MassFunction, x: float, y: float, m=DEFAULT_M, r_factor=DEFAULT_R_FACTOR) -> SweepRecord:
    try:
        res = ui(bpa, m=m, r_factor=r_factor)
    except tuple(cls for cls, _ in _ERROR_TAGS) as exc:
        tag = next(t for cls, t in _ERROR_TAGS if isinstance(exc, cls))
        return SweepRecord(x, y, None, None, tag)
    return SweepRecord(x, y, res.ui, res.signed_apen, ",".join(res.flags))


def sweep_family(
    family: Callable[[int, int, int], MassFunction],
    resolution: int,
    m: int = DEFAULT_M,
    r_factor: float = DEFAULT_R_FACTOR,
) -> list[SweepRecord]:
    """Evaluate ``family(i, j, k)`` at every simplex grid point.

    The family receives integer grid indices so it can form exact
    complements such as ``(k - i - j) / k``. Failures are recorded per point.
    """
    grid = SimplexGrid(resolution)
    k = grid.resolution
    return [
        evaluate(family(i, j, k), i / k, j / k, m, r_factor)
        for i, j in grid.indices()
    ]


def _x_test_on_grid(i, j, k):
    return x_test(i / k, j / k, (k - i - j) / k)


def sweep_simplex(resolution: int, m: int = DEFAULT_M, r_factor: float = DEFAULT_R_FACTOR) -> list[SweepRecord]:
    """UI of ``X_test`` over the simplex grid of step ``1/resolution``."""
    return sweep_family(_x_test_on_grid, resolution, m, r_factor)


def _fmt(v: Optional[float]) -> str:
    return "" if v is None else format(v, ".17g")


def _parse(s: str) -> Optional[float]:
    return None if s == "" else float(s)


def write_sweep(records: Iterable[SweepRecord], destination) -> None:
    """Write records as CSV to a path or a text stream."""
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "w", newline="", encoding="utf-8") as fh:
            write_sweep(records, fh)
        return
    writer = csv.writer(destination, lineterminator="\n")
    writer.writerow(HEADER)
    for rec in sorted(records, key=lambda r: (r.x, r.y)):
        writer.writerow([_fmt(rec.x), _fmt(rec.y), _fmt(rec.ui), _fmt(rec.signed_apen), rec.flag])


def read_sweep(source) -> list[SweepRecord]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, newline="", encoding="utf-8") as fh:
            return read_sweep(fh)
    reader = csv.reader(source)
    header = next(reader, None)
    if tuple(header or ()) != HEADER:
        raise ValueError(f"unexpected sweep header {header!r}")
    return [
        SweepRecord(float(x), float(y), _parse(u), _parse(s), flag)
        for x, y, u, s, flag in reader
    ]


def sweep_to_string(records: Iterable[SweepRecord]) -> str:
    buf = io.StringIO()
    write_sweep(records, buf)
    return buf.getvalue()
