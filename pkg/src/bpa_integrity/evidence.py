"""Frames of discernment, focal elements and mass functions.

A mass function (basic probability assignment, BPA) maps subsets of a frame
of discernment to masses in [0, 1] that sum to one. Unlike the usual
Dempster-Shafer convention, mass on the empty set is allowed here: it stands
for the portion of belief that has not been assigned to any known element.

BPA files are JSON documents::

    {
      "frame": ["A", "B", "C"],
      "masses": [
        {"focal": ["A"], "mass": 0.2},
        {"focal": [], "mass": 0.0}
      ]
    }

An empty ``focal`` list denotes the empty set. Declaring it is optional.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Union

DEFAULT_EPSILON_SUM = 1e-9

EMPTY_LABEL = "∅"


class BPAParseError(ValueError):
    """Raised when a BPA document cannot be read.

    ``line`` and ``column`` are 1-based and point at the offending token when
    the failure is syntactic; ``path`` names the offending field otherwise.
    """

    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path is not None:
            where.append(f"at {path}")
        if where:
            message = f"{message} ({'; '.join(where)})"
        super().__init__(message)


class UnknownHypothesisError(ValueError):
    """Raised when a focal element names a hypothesis outside the frame."""


@dataclass(frozen=True)
class FrameOfDiscernment:
    """Ordered set of mutually exclusive hypothesis labels."""

    hypotheses: tuple[str, ...]

    def __post_init__(self):
        hyps = tuple(self.hypotheses)
        object.__setattr__(self, "hypotheses", hyps)
        if not hyps:
            raise ValueError("a frame of discernment needs at least one hypothesis")
        for h in hyps:
            if not isinstance(h, str) or not h:
                raise ValueError(f"hypothesis labels must be non-empty strings, got {h!r}")
        if len(set(hyps)) != len(hyps):
            raise ValueError(f"duplicate hypothesis labels in frame {list(hyps)}")

    def __len__(self):
        return len(self.hypotheses)

    def __iter__(self):
        return iter(self.hypotheses)

    def __contains__(self, label):
        return label in self.hypotheses

    def focal(self, members: Iterable[str] = ()) -> "FocalElement":
        """Build the canonical focal element for ``members``."""
        if isinstance(members, str):
            members = (members,)
        members = tuple(members)
        unknown = [h for h in members if h not in self.hypotheses]
        if unknown:
            raise UnknownHypothesisError(
                f"hypotheses {unknown} are not in frame {list(self.hypotheses)}"
            )
        if len(set(members)) != len(members):
            raise ValueError(f"duplicate members in focal element {list(members)}")
        order = {h: i for i, h in enumerate(self.hypotheses)}
        return FocalElement(tuple(sorted(members, key=order.__getitem__)))


@dataclass(frozen=True)
class FocalElement:
    """A subset of the frame; the empty tuple is the empty set."""

    members: tuple[str, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def label(self) -> str:
        return "".join(self.members) if self.members else EMPTY_LABEL

    def __str__(self):
        return self.label


EMPTY = FocalElement(())

FocalLike = Union[FocalElement, str, Iterable[str]]


@dataclass(frozen=True)
class MassFunction:
    """A basic probability assignment over a frame of discernment.

    Construction canonicalizes member order but does not enforce the mass
    axioms; call :func:`validate` for that.
    """

    frame: FrameOfDiscernment
    assignments: tuple[tuple[FocalElement, float], ...] = field(default=())

    def __post_init__(self):
        frame = self.frame
        if not isinstance(frame, FrameOfDiscernment):
            frame = FrameOfDiscernment(tuple(frame))
            object.__setattr__(self, "frame", frame)
        canon = []
        for element, mass in self.assignments:
            members = element.members if isinstance(element, FocalElement) else element
            canon.append((frame.focal(members), float(mass)))
        object.__setattr__(self, "assignments", tuple(canon))

    @classmethod
    def from_pairs(cls, frame: Iterable[str], pairs) -> "MassFunction":
        """Build from ``(members, mass)`` pairs or a ``{members: mass}`` mapping.

        ``members`` may be a single label, an iterable of labels, or ``()``
        for the empty set.
        """
        if isinstance(pairs, dict):
            pairs = pairs.items()
        return cls(FrameOfDiscernment(tuple(frame)), tuple(pairs))

    def __len__(self):
        return len(self.assignments)

    def __iter__(self):
        return iter(self.assignments)

    @property
    def masses(self) -> list[float]:
        return [m for _, m in self.assignments]

    def mass_of(self, element: FocalLike) -> float:
        return mass_of(self, element)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(bpa: MassFunction, epsilon_sum: float = DEFAULT_EPSILON_SUM) -> ValidationReport:
    """Check the mass axioms: each mass in [0, 1], total mass 1, no duplicates."""
    problems = []
    seen = set()
    for element, mass in bpa.assignments:
        if not math.isfinite(mass):
            problems.append(f"mass of {element.label} is not finite ({mass!r})")
        elif not 0.0 <= mass <= 1.0:
            problems.append(f"mass of {element.label} = {mass!r} is outside [0, 1]")
        if element in seen:
            problems.append(f"focal element {element.label} is declared more than once")
        seen.add(element)
    total = math.fsum(bpa.masses)
    if not abs(total - 1.0) <= epsilon_sum:
        problems.append(
            f"sum axiom violated: masses sum to {total!r}, expected 1 within {epsilon_sum:g}"
        )
    return ValidationReport(tuple(problems))


def mass_of(bpa: MassFunction, element: FocalLike) -> float:
    """Declared mass of ``element``, or 0.0 when it is not declared."""
    members = element.members if isinstance(element, FocalElement) else element
    target = bpa.frame.focal(members)
    for declared, mass in bpa.assignments:
        if declared == target:
            return mass
    return 0.0


def _locate(text: str, needle: str):
    idx = text.find(needle)
    if idx < 0:
        return None, None
    line = text.count("\n", 0, idx) + 1
    column = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return line, column


def parse_bpa(text: str) -> MassFunction:
    """Parse a BPA document. The result is not validated."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BPAParseError(f"malformed BPA document: {exc.msg}", exc.lineno, exc.colno) from exc

    if not isinstance(doc, dict):
        raise BPAParseError("BPA document must be an object with 'frame' and 'masses'")
    for key in ("frame", "masses"):
        if key not in doc:
            raise BPAParseError(f"missing required field '{key}'")
    frame_labels = doc["frame"]
    if not isinstance(frame_labels, list):
        raise BPAParseError("'frame' must be a list of labels", path="frame")
    try:
        frame = FrameOfDiscernment(tuple(frame_labels))
    except ValueError as exc:
        raise BPAParseError(str(exc), path="frame") from exc

    entries = doc["masses"]
    if not isinstance(entries, list):
        raise BPAParseError("'masses' must be a list of records", path="masses")
    assignments = []
    for i, entry in enumerate(entries):
        path = f"masses[{i}]"
        if not isinstance(entry, dict) or "focal" not in entry or "mass" not in entry:
            raise BPAParseError("each mass record needs 'focal' and 'mass'", path=path)
        focal, mass = entry["focal"], entry["mass"]
        if not isinstance(focal, list) or not all(isinstance(h, str) for h in focal):
            raise BPAParseError("'focal' must be a list of labels", path=f"{path}.focal")
        if isinstance(mass, bool) or not isinstance(mass, (int, float)):
            raise BPAParseError("'mass' must be a number", path=f"{path}.mass")
        try:
            element = frame.focal(focal)
        except ValueError as exc:
            bad = next((h for h in focal if h not in frame), None)
            line, column = _locate(text, json.dumps(bad)) if bad is not None else (None, None)
            raise BPAParseError(str(exc), line, column, path=f"{path}.focal") from exc
        assignments.append((element, float(mass)))
    return MassFunction(frame, tuple(assignments))


def dump_bpa(bpa: MassFunction) -> str:
    """Serialize to the JSON BPA format; ``parse_bpa`` inverts this exactly."""
    doc = {
        "frame": list(bpa.frame.hypotheses),
        "masses": [{"focal": list(e.members), "mass": m} for e, m in bpa.assignments],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_bpa(path) -> MassFunction:
    with open(path, encoding="utf-8") as fh:
        return parse_bpa(fh.read())
