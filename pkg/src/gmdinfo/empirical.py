"""Sample container, plotting positions, and empirical conditional means.

Every estimator in the package is a function of the sorted sample only,
so the container sorts once at construction and downstream code relies
on ascending order.
"""

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadParameterError,
    EmptyTailError,
    NegativeValueError,
    NonFiniteError,
    TooFewObservationsError,
)

__all__ = [
    "ECDF_CONVENTIONS",
    "Sample",
    "make_sample",
    "plotting_positions",
    "ecdf_at",
    "conditional_mean_above",
    "conditional_mean_below",
    "values_above",
    "values_upto",
]

#: Recognized plotting-position conventions for rank i of n.
#: hazen keeps u_i strictly inside (0,1), so powers of u and 1-u never
#: vanish; it is the default everywhere.
ECDF_CONVENTIONS = ("hazen", "naive", "mean-rank")


@dataclass(frozen=True)
class Sample:
    """Validated, ascending, non-negative observations.

    Construct via :func:`make_sample`; ``values`` is read-only.
    """

    values: np.ndarray

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    def digest(self) -> str:
        """Short content hash, used to label reports."""
        h = hashlib.sha1(self.values.tobytes()).hexdigest()[:8]
        return f"sample(n={self.n}, sha1={h})"


def make_sample(raw) -> Sample:
    """Validate and sort raw observations into a :class:`Sample`.

    Raises
    ------
    TooFewObservationsError
        fewer than two observations
    NonFiniteError
        any NaN or infinity
    NegativeValueError
        any negative value (all measures assume X >= 0)
    """
    arr = np.asarray(raw, dtype=float).ravel()
    if arr.size < 2:
        raise TooFewObservationsError(
            f"need at least 2 observations, got {arr.size}"
        )
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("observations must be finite")
    if np.any(arr < 0):
        raise NegativeValueError("observations must be non-negative")
    values = np.sort(arr)
    values.flags.writeable = False
    return Sample(values)


def _check_convention(conv: str) -> None:
    if conv not in ECDF_CONVENTIONS:
        raise BadParameterError(
            f"unknown ECDF convention {conv!r}; expected one of {ECDF_CONVENTIONS}"
        )


def plotting_positions(n: int, conv: str = "hazen") -> np.ndarray:
    """Plotting positions u_1 < ... < u_n for ranks 1..n.

    hazen: (i - 0.5)/n;  naive: i/n;  mean-rank: i/(n + 1).
    Tied observations keep distinct consecutive positions.
    """
    _check_convention(conv)
    i = np.arange(1, n + 1, dtype=float)
    if conv == "hazen":
        return (i - 0.5) / n
    if conv == "naive":
        return i / n
    return i / (n + 1)


def ecdf_at(sample: Sample, x: float, conv: str = "hazen") -> float:
    """Right-continuous step estimate of F(x).

    Steps to u_i at the i-th order statistic (the largest rank among
    ties), 0 below the smallest observation.
    """
    if not np.isfinite(x):
        raise NonFiniteError("evaluation point must be finite")
    u = plotting_positions(sample.n, conv)
    k = int(np.searchsorted(sample.values, x, side="right"))
    return 0.0 if k == 0 else float(u[k - 1])


def values_above(sample: Sample, t: float) -> np.ndarray:
    """Observations strictly above t (the left-truncated tail)."""
    return sample.values[sample.values > t]


def values_upto(sample: Sample, t: float) -> np.ndarray:
    """Observations at or below t (the right-truncated head)."""
    return sample.values[sample.values <= t]


def conditional_mean_above(sample: Sample, t: float) -> float:
    """Empirical mean residual life m(t): mean of (x - t) over x > t."""
    _check_truncation(t)
    tail = values_above(sample, t)
    if tail.size == 0:
        raise EmptyTailError(f"no observation above t={t}")
    return float(np.mean(tail - t))


def conditional_mean_below(sample: Sample, t: float) -> float:
    """Empirical mean past life r(t): mean of (t - x) over x <= t."""
    _check_truncation(t)
    head = values_upto(sample, t)
    if head.size == 0:
        raise EmptyTailError(f"no observation at or below t={t}")
    return float(np.mean(t - head))


def _check_truncation(t: float) -> None:
    if not np.isfinite(t):
        raise NonFiniteError("truncation point must be finite")
    if t < 0:
        raise BadParameterError("truncation point must be non-negative")
