"""Probability weighted moments M_{p,r,s} = E[X^p F(X)^r (1-F(X))^s].

Three routes are provided:

* ``pwm_population`` — quadrature of the quantile form
  ``int_0^1 Q(u)^p u^r (1-u)^s du`` for a parametric model;
* ``pwm_plugin`` — the plug-in sample estimator that replaces F with
  plotting positions (valid for any real r, s >= 0, but biased);
* ``pwm_unbiased_beta`` / ``pwm_unbiased_alpha`` — the exact unbiased
  order-statistic estimators b_r of M_{1,r,0} and a_s of M_{1,0,s} for
  integer orders (Greenwood-style PWM estimators).
"""

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .empirical import Sample, plotting_positions
from .errors import (
    BadParameterError,
    NonFiniteError,
    TooFewObservationsError,
    UnsupportedSpecError,
)
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate_u

if TYPE_CHECKING:  # pragma: no cover
    from .models import ParametricModel

__all__ = [
    "PwmIndex",
    "pwm_population",
    "pwm_plugin",
    "pwm_unbiased_beta",
    "pwm_unbiased_alpha",
]


@dataclass(frozen=True)
class PwmIndex:
    """The triple (p, r, s) indexing M_{p,r,s}.

    p is a non-negative integer (the power of X); r and s are real
    exponents on F and 1-F.  Exponents in (-1, 0) are admitted — the
    Tsallis/two-parameter families need M_{p,0,alpha-1} with alpha < 1 —
    since the endpoint singularity u^r (1-u)^s stays integrable there.
    """

    p: int
    r: float = 0.0
    s: float = 0.0

    def __post_init__(self):
        if int(self.p) != self.p or self.p < 0:
            raise BadParameterError(f"p must be a non-negative integer, got {self.p}")
        for name, val in (("r", self.r), ("s", self.s)):
            if not math.isfinite(val):
                raise NonFiniteError(f"{name} must be finite")
            if val <= -1:
                raise BadParameterError(f"{name} must exceed -1, got {val}")


def pwm_population(model: "ParametricModel", idx: PwmIndex,
                   cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """M_{p,r,s} for a parametric model via quantile-domain quadrature."""
    tail = getattr(model, "tail_index", math.inf)
    # Q(u)^p (1-u)^s ~ (1-u)^{s - p/tail} near u=1: integrable iff p < tail*(s+1).
    if math.isfinite(tail) and idx.p >= tail * (idx.s + 1.0):
        raise UnsupportedSpecError(
            f"M_{{{idx.p},{idx.r},{idx.s}}} does not exist for {model.describe()}"
        )
    p, r, s = int(idx.p), float(idx.r), float(idx.s)

    def f(u: float) -> float:
        q = float(model.quantile(u)) ** p if p else 1.0
        return q * u**r * (1.0 - u) ** s

    return integrate_u(f, cfg)


def pwm_plugin(sample: Sample, idx: PwmIndex, conv: str = "hazen") -> float:
    """Plug-in estimator (1/n) sum x_(i)^p u_i^r (1-u_i)^s.

    Negative exponents require plotting positions strictly inside
    (0,1); the naive convention puts u_n = 1 and is refused there.
    """
    u = plotting_positions(sample.n, conv)
    if idx.s < 0 and u[-1] >= 1.0:
        raise BadParameterError(
            "negative s exponent needs u_n < 1; use the hazen or mean-rank convention"
        )
    x = sample.values
    xp = x ** idx.p if idx.p else np.ones_like(x)
    return float(np.mean(xp * u**idx.r * (1.0 - u) ** idx.s))


def _check_integer_order(name: str, value) -> int:
    if value != int(value) or value < 0:
        raise BadParameterError(f"{name} must be a non-negative integer, got {value}")
    return int(value)


def pwm_unbiased_beta(sample: Sample, r) -> float:
    """Unbiased b_r for M_{1,r,0}, integer r >= 0.

    b_r = (1/n) sum_{i} x_(i) * (i-1)(i-2)...(i-r) / [(n-1)...(n-r)];
    the weight vanishes automatically for i <= r.  Products are built
    as running ratios so no intermediate overflows for large n.
    """
    r = _check_integer_order("r", r)
    n = sample.n
    if n <= r:
        raise TooFewObservationsError(f"b_{r} needs n > {r}, got n={n}")
    i = np.arange(1, n + 1, dtype=float)
    w = np.ones(n)
    for j in range(1, r + 1):
        w *= (i - j) / (n - j)
    return float(np.mean(sample.values * w))


def pwm_unbiased_alpha(sample: Sample, s) -> float:
    """Unbiased a_s for M_{1,0,s}, integer s >= 0.

    a_s = (1/n) sum_{i} x_(i) * (n-i)(n-i-1)...(n-i-s+1) / [(n-1)...(n-s)];
    the weight vanishes automatically for i > n - s.
    """
    s = _check_integer_order("s", s)
    n = sample.n
    if n <= s:
        raise TooFewObservationsError(f"a_{s} needs n > {s}, got n={n}")
    i = np.arange(1, n + 1, dtype=float)
    w = np.ones(n)
    for j in range(1, s + 1):
        w *= (n - i - j + 1) / (n - j)
    return float(np.mean(sample.values * w))
