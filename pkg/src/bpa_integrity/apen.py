"""Approximate entropy of short real sequences.

Conventions, fixed so the worked BPA examples come out right:

* distance between windows is Chebyshev (max componentwise difference);
* a window matches another when their distance is strictly below ``r``;
* every window is compared with every window, itself included;
* ``phi`` carries a leading minus, so it is the negative mean log match
  frequency and is never negative. ``apen = phi(m) - phi(m + 1)``.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np


class SequenceTooShort(ValueError):
    """The sequence has fewer points than the embedding needs."""


class DegenerateTolerance(ValueError):
    """Some window matched nothing, so its log match frequency is undefined.

    With the self-match included this only happens when ``r == 0``.
    """


def _as_sequence(u) -> np.ndarray:
    arr = np.asarray(u, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"expected a one-dimensional sequence, got shape {arr.shape}")
    if arr.size == 0:
        raise SequenceTooShort("sequence is empty")
    if not np.all(np.isfinite(arr)):
        raise ValueError("sequence contains NaN or infinite values")
    return arr


def _check_params(m, r):
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError(f"embedding dimension must be a positive integer, got {m!r}")
    if not (r >= 0 and math.isfinite(r)):
        raise ValueError(f"tolerance must be a finite non-negative number, got {r!r}")


def embed(u: Sequence[float], m: int) -> np.ndarray:
    """Overlapping windows of length ``m``; row ``i`` is ``u[i:i+m]``."""
    arr = _as_sequence(u)
    _check_params(m, 0.0)
    n = arr.size
    if n < m:
        raise SequenceTooShort(f"need at least {m} points to embed in dimension {m}, got {n}")
    return np.lib.stride_tricks.sliding_window_view(arr, m).copy()


def chebyshev(x: Sequence[float], y: Sequence[float]) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError(f"vector lengths differ: {x.shape} vs {y.shape}")
    if x.size == 0:
        return 0.0
    return float(np.max(np.abs(x - y)))


def correlation_count(windows, i: int, r: float) -> float:
    """Fraction of windows within ``r`` (strictly) of window ``i``.

    ``i`` is a 0-based row index. Window ``i`` counts as its own match
    whenever ``r > 0``.
    """
    w = np.asarray(windows, dtype=np.float64)
    if w.ndim != 2 or w.shape[0] == 0:
        raise ValueError("windows must be a non-empty 2-D array")
    if not 0 <= i < w.shape[0]:
        raise IndexError(f"window index {i} out of range for {w.shape[0]} windows")
    dist = np.max(np.abs(w - w[i]), axis=1)
    return int(np.count_nonzero(dist < r)) / w.shape[0]


def _window_distances(arr: np.ndarray, m: int):
    """Yield Chebyshev distance matrices for window lengths 1..m.

    Distances for length k+1 reuse those for length k, extended by the
    difference of the next component.
    """
    diff = np.abs(arr[:, None] - arr[None, :])
    n = arr.size
    dist = diff
    yield dist
    for k in range(1, m):
        rows = n - k
        dist = np.maximum(dist[:rows, :rows], diff[k:, k:])
        yield dist


def _phi_from_distances(dist: np.ndarray, r: float, m: int) -> float:
    count = dist.shape[0]
    matches = np.count_nonzero(dist < r, axis=1)
    if np.any(matches == 0):
        raise DegenerateTolerance(
            f"a window of length {m} has no match within r={r!r}; "
            "the log match frequency is undefined"
        )
    logs = np.log(matches / count)
    return -math.fsum(logs.tolist()) / count


def phi(u: Sequence[float], m: int, r: float) -> float:
    """Negative mean log match frequency of the length-``m`` windows."""
    arr = _as_sequence(u)
    _check_params(m, r)
    if arr.size < m:
        raise SequenceTooShort(f"need at least {m} points for dimension {m}, got {arr.size}")
    *_, dist = _window_distances(arr, m)
    return _phi_from_distances(dist, r, m)


def apen_components(u: Sequence[float], m: int, r: float) -> tuple[float, float]:
    """``(phi(m), phi(m + 1))`` from one shared distance computation."""
    arr = _as_sequence(u)
    _check_params(m, r)
    if arr.size < m + 1:
        raise SequenceTooShort(
            f"approximate entropy with m={m} needs at least {m + 1} points, got {arr.size}"
        )
    dists = list(_window_distances(arr, m + 1))
    return (
        _phi_from_distances(dists[m - 1], r, m),
        _phi_from_distances(dists[m], r, m + 1),
    )


def apen(u: Sequence[float], m: int, r: float) -> float:
    """Signed approximate entropy ``phi(m) - phi(m + 1)``; can be negative."""
    phi_m, phi_next = apen_components(u, m, r)
    return phi_m - phi_next


def population_std(u: Sequence[float]) -> float:
    """Standard deviation dividing by N; exactly 0.0 for constant input."""
    arr = _as_sequence(u)
    # the rounded mean of a constant sequence can differ from its value
    if np.all(arr == arr[0]):
        return 0.0
    return float(np.std(arr, ddof=0))
