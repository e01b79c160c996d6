"""Parametric distribution families with closed-form F, survival, quantile.

Four non-negative families are provided: uniform, exponential, Weibull,
and Pareto.  Each exposes exactly what the population-side machinery
needs — ``cdf``/``sf``/``quantile``/``mean``, the support, and the tail
index governing which moments exist — plus inverse-transform sampling
for Monte Carlo work.  All methods accept scalars or arrays.
"""

import math

import numpy as np

from .errors import BadParameterError, NonFiniteError

__all__ = [
    "ParametricModel",
    "Uniform",
    "Exponential",
    "Weibull",
    "Pareto",
    "make_model",
    "MODEL_FAMILIES",
]


def _check_positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteError(f"{name} must be finite")
    if value <= 0:
        raise BadParameterError(f"{name} must be positive, got {value}")
    return value


class ParametricModel:
    """Base class: a named family on [0, inf) with an invertible CDF.

    Attributes
    ----------
    support : (float, float)
        Closure of {x : 0 < F(x) < 1}; the upper end may be ``inf``.
    tail_index : float
        sup{q : E[X^q] < inf}; ``inf`` for light tails.  Lets callers
        refuse moment integrals that do not exist.
    """

    support = (0.0, math.inf)
    tail_index = math.inf

    def cdf(self, x):
        raise NotImplementedError

    def sf(self, x):
        """Survival function 1 - F(x), computed without cancellation."""
        raise NotImplementedError

    def quantile(self, u):
        """Inverse CDF; u may touch 0 or 1 only where Q stays finite."""
        raise NotImplementedError

    def mean(self) -> float:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """n inverse-transform draws using the supplied generator."""
        return np.asarray(self.quantile(rng.random(n)), dtype=float)

    def __repr__(self):
        return self.describe()


class Uniform(ParametricModel):
    """Uniform on [a, b], a >= 0."""

    def __init__(self, a: float = 0.0, b: float = 1.0):
        a = float(a)
        b = float(b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise NonFiniteError("uniform endpoints must be finite")
        if a < 0:
            raise BadParameterError("uniform lower endpoint must be >= 0")
        if b <= a:
            raise BadParameterError("uniform needs b > a")
        self.a = a
        self.b = b
        self.support = (a, b)

    def cdf(self, x):
        return np.clip((np.asarray(x, dtype=float) - self.a) / (self.b - self.a), 0.0, 1.0)

    def sf(self, x):
        return np.clip((self.b - np.asarray(x, dtype=float)) / (self.b - self.a), 0.0, 1.0)

    def quantile(self, u):
        return self.a + (self.b - self.a) * np.asarray(u, dtype=float)

    def mean(self) -> float:
        return 0.5 * (self.a + self.b)

    def describe(self) -> str:
        return f"uniform(a={self.a:g}, b={self.b:g})"


class Exponential(ParametricModel):
    """Exponential with mean mu (rate 1/mu)."""

    def __init__(self, mean: float = 1.0):
        self.mu = _check_positive("exponential mean", mean)

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x <= 0, 0.0, -np.expm1(-x / self.mu))

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x <= 0, 1.0, np.exp(-x / self.mu))

    def quantile(self, u):
        return -self.mu * np.log1p(-np.asarray(u, dtype=float))

    def mean(self) -> float:
        return self.mu

    def describe(self) -> str:
        return f"exponential(mean={self.mu:g})"


class Weibull(ParametricModel):
    """Weibull with shape kappa and scale lam: sf(x) = exp(-(x/lam)^kappa)."""

    def __init__(self, shape: float, scale: float = 1.0):
        self.kappa = _check_positive("weibull shape", shape)
        self.lam = _check_positive("weibull scale", scale)

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x <= 0, 0.0, -np.expm1(-((np.maximum(x, 0.0) / self.lam) ** self.kappa)))

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x <= 0, 1.0, np.exp(-((np.maximum(x, 0.0) / self.lam) ** self.kappa)))

    def quantile(self, u):
        u = np.asarray(u, dtype=float)
        return self.lam * (-np.log1p(-u)) ** (1.0 / self.kappa)

    def mean(self) -> float:
        return self.lam * math.gamma(1.0 + 1.0 / self.kappa)

    def describe(self) -> str:
        return f"weibull(shape={self.kappa:g}, scale={self.lam:g})"


class Pareto(ParametricModel):
    """Pareto with sf(x) = (sigma/x)^a on [sigma, inf).

    Shape must exceed 2 so that the second-moment (weighted) measures
    exist; the tail index equals the shape.
    """

    def __init__(self, shape: float, scale: float = 1.0):
        shape = float(shape)
        if not math.isfinite(shape):
            raise NonFiniteError("pareto shape must be finite")
        if shape <= 2:
            raise BadParameterError("pareto shape must exceed 2")
        self.a = shape
        self.sigma = _check_positive("pareto scale", scale)
        self.support = (self.sigma, math.inf)
        self.tail_index = self.a

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x <= self.sigma, 0.0, 1.0 - (self.sigma / np.maximum(x, self.sigma)) ** self.a)

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x <= self.sigma, 1.0, (self.sigma / np.maximum(x, self.sigma)) ** self.a)

    def quantile(self, u):
        u = np.asarray(u, dtype=float)
        return self.sigma * (1.0 - u) ** (-1.0 / self.a)

    def mean(self) -> float:
        return self.a * self.sigma / (self.a - 1.0)

    def describe(self) -> str:
        return f"pareto(shape={self.a:g}, scale={self.sigma:g})"


MODEL_FAMILIES = ("uniform", "exponential", "weibull", "pareto")


def make_model(family: str, **params) -> ParametricModel:
    """Build a model from a family token and keyword parameters.

    Accepted tokens: ``uniform`` (a, b), ``exponential``/``exp`` (mean),
    ``weibull`` (shape, scale), ``pareto`` (shape, scale).
    """
    family = family.lower()
    try:
        if family == "uniform":
            return Uniform(**params)
        if family in ("exponential", "exp"):
            return Exponential(**params)
        if family == "weibull":
            return Weibull(**params)
        if family == "pareto":
            return Pareto(**params)
    except TypeError as exc:
        raise BadParameterError(f"bad parameters for {family}: {exc}") from None
    raise BadParameterError(
        f"unknown family {family!r}; expected one of {MODEL_FAMILIES}"
    )
