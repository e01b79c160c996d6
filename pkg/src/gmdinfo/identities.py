"""Registry of the equalities connecting the measures, verified dual-route.

Each identity evaluates its two sides through independent code paths:
at population level one side integrates in the x-domain (touching only
the model's distribution/survival functions) while the other works in
the quantile domain (touching only Q), so a bug in either surface cannot
cancel.  At sample level the two sides use different estimator
constructions (order-statistic weights vs step-ECDF integrals vs
double-loop means).  Two documented exceptions: I4's sample side is
exact by construction because cj is *defined* through that identity,
and I13 compares two transform-space constructions that each need both
surfaces.

Exactness classes:

* ``exact-sample`` — the sample sides are algebraically equal; verified
  at 1e-12.
* ``exact-by-construction`` — equal because one measure is defined via
  the identity (I4 only).
* ``asymptotic`` — the sample sides converge to the same limit; a
  single-sample report uses a loose gate of max(5e-2, 4/n) relative,
  sized so that the O(1/n) gap between plug-in and U-statistic routes
  passes at any n, and the real check is residual shrinkage across n
  (see the test suite).  These identities presuppose continuously
  distributed data: a sample that is effectively discrete (heavy ties)
  can fail them at any size, and that failure is honest.
* ``population-only`` — no sample form is shipped (I13).
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .empirical import (
    Sample,
    conditional_mean_above,
    conditional_mean_below,
    plotting_positions,
)
from .errors import BadParameterError, NotApplicableError
from .measures import (
    MeasureSpec,
    PhiSelector,
    WeightSelector,
    cj,
    crj,
    crt,
    ct,
    gain_premium,
    generalized_cumulative_entropy,
    generalized_residual_entropy,
    gmd,
    gmd_left,
    gmd_right,
    gmd_via_pwm,
    h_dyn,
    j_dyn,
    pairwise_max_mean,
    pairwise_min_mean,
    risk_premium,
    s_gini,
    sp,
    spw,
    sr,
    srw,
    wcrt,
    wct,
)
from .models import ParametricModel
from .population import (
    gce_population,
    ge_population,
    gmd_left_population,
    gmd_right_population,
    h_dyn_population,
    j_dyn_population,
    mean_past_life,
    mean_residual_life,
    measure_population,
)
from .pwm import PwmIndex, pwm_population
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate_u, integrate_x

__all__ = [
    "Identity",
    "IdentityReport",
    "REGISTRY",
    "verify",
    "verify_all",
    "POPULATION_TOL",
    "EXACT_SAMPLE_TOL",
    "ASYMPTOTIC_SAMPLE_TOL",
]

POPULATION_TOL = 1e-8
EXACT_SAMPLE_TOL = 1e-12
ASYMPTOTIC_SAMPLE_TOL = 5e-2

# single-sample relative gate for asymptotic identities grows as 1/n:
# the deterministic plug-in-vs-U-statistic gap is about 1.6/n, so a
# slope of 4 keeps honest 2.5x headroom at every n
_ASYMPTOTIC_SLOPE = 4.0

#: population truncation points, as quantile levels
_T_LEVELS = (0.4, 0.75)


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    level: str  # "population" | "sample" | "both"
    exactness: str
    population_sides: Optional[Callable] = None  # (model, cfg) -> (lhs, rhs)
    sample_sides: Optional[Callable] = None  # (sample, conv) -> (lhs, rhs) | None


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    description: str
    source: str
    level: str
    exactness: str
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool


# ---------------------------------------------------------------------------
# small shared helpers


def _mq(model, cfg, **kw) -> float:
    return measure_population(model, MeasureSpec(**kw), cfg, route="quantile")


def _mx(model, cfg, **kw) -> float:
    return measure_population(model, MeasureSpec(**kw), cfg, route="direct")


def _worst(pairs):
    """The (lhs, rhs) pair with the largest absolute residual."""
    return max(pairs, key=lambda pair: abs(pair[0] - pair[1]))


def _t_points(model):
    return [float(model.quantile(p)) for p in _T_LEVELS]


def _sorted_gmd(values: np.ndarray) -> float:
    n = values.shape[0]
    i = np.arange(1, n + 1, dtype=float)
    return float(2.0 * np.sum((2.0 * i - n - 1.0) * values) / (n * (n - 1.0)))


def _plugin_cov(x: np.ndarray, g: np.ndarray) -> float:
    return float(np.mean(x * g) - np.mean(x) * np.mean(g))


def _step_plain(values: np.ndarray, g) -> float:
    """int g(F_hat(x)) dx for the naive step ECDF (i/n between order stats)."""
    n = values.shape[0]
    levels = np.arange(1, n, dtype=float) / n
    return float(np.sum(np.diff(values) * g(levels)))


def _step_xweighted(values: np.ndarray, g) -> float:
    """int x * g(F_hat(x)) dx for the naive step ECDF."""
    n = values.shape[0]
    levels = np.arange(1, n, dtype=float) / n
    return float(np.sum(0.5 * np.diff(values**2) * g(levels)))


def _pick_t(sample: Sample, need_above: int = 0, need_below: int = 0):
    """A truncation point near the middle of the data meeting the counts.

    Midpoints between distinct values are tried center-outward; returns
    None when no point qualifies (e.g. all-equal samples for a strict
    upper tail).
    """
    x = sample.values
    distinct = np.unique(x)
    if distinct.size < 2:
        t = float(x[0])
        if need_above == 0 and np.sum(x <= t) >= need_below:
            return t
        return None
    mids = 0.5 * (distinct[:-1] + distinct[1:])
    center = (mids.size - 1) / 2.0
    for i in sorted(range(mids.size), key=lambda ix: (abs(ix - center), ix)):
        t = float(mids[i])
        if np.sum(x > t) >= need_above and np.sum(x <= t) >= need_below:
            return t
    return None


_W_SF1 = WeightSelector("sf-power", j=1.0)
_W_CDF1 = WeightSelector("cdf-power", j=1.0)


# ---------------------------------------------------------------------------
# identity sides


def _i1_pop(model, cfg):
    return _mx(model, cfg, id="gmd"), _mq(model, cfg, id="gmd")


def _i1_sample(s, conv):
    return gmd(s), gmd_via_pwm(s)


def _i2_pop(model, cfg):
    lhs = _mx(model, cfg, id="gmd")
    cov = pwm_population(model, PwmIndex(1, 1, 0), cfg) - 0.5 * model.mean()
    return lhs, 4.0 * cov


def _i2_sample(s, conv):
    u = plotting_positions(s.n, conv)
    return gmd(s), 4.0 * _plugin_cov(s.values, u)


def _i3_pop(model, cfg):
    return _mx(model, cfg, id="gmd"), 2.0 * _mq(model, cfg, id="crt", alpha=2.0)


def _i3_sample(s, conv):
    return gmd(s), 2.0 * crt(s, 2.0, conv)[0]


def _i4_pop(model, cfg):
    lhs = 2.0 * _mx(model, cfg, id="crj") - 2.0 * _mx(model, cfg, id="cj")
    return lhs, _mq(model, cfg, id="gmd")


def _i4_sample(s, conv):
    return 2.0 * crj(s) - 2.0 * cj(s), gmd(s)


def _i5_pop(model, cfg):
    pairs = []
    for t in _t_points(model):
        lhs = gmd_left_population(model, t, cfg, route="quantile")
        rhs = mean_residual_life(model, t, cfg) + 2.0 * j_dyn_population(model, t, cfg)
        pairs.append((lhs, rhs))
    return _worst(pairs)


def _i5_sample(s, conv):
    t = _pick_t(s, need_above=2)
    if t is None:
        return None
    return gmd_left(s, t), conditional_mean_above(s, t) + 2.0 * j_dyn(s, t)


def _i6_pop(model, cfg):
    pairs = []
    for t in _t_points(model):
        lhs = gmd_right_population(model, t, cfg, route="quantile")
        rhs = 2.0 * h_dyn_population(model, t, cfg) + mean_past_life(model, t, cfg)
        pairs.append((lhs, rhs))
    return _worst(pairs)


def _i6_sample(s, conv):
    t = _pick_t(s, need_below=2)
    if t is None:
        return None
    return gmd_right(s, t), 2.0 * h_dyn(s, t) + conditional_mean_below(s, t)


def _range_moment_direct(model, v: float, cfg) -> float:
    """E(max(X1,X2)^v) - E(min(X1,X2)^v) purely from F and the survival."""
    lo, hi = model.support
    mid = float(model.quantile(0.5))

    def g(x: float) -> float:
        f = float(model.cdf(x))
        sfv = float(model.sf(x))
        return v * x ** (v - 1.0) * (1.0 - f * f - sfv * sfv)

    return integrate_x(g, 0.0, hi, cfg, breakpoints=(lo, mid))


def _i7_pop(model, cfg):
    pairs = []
    for v in (1.0, 2.0):
        lhs = ge_population(model, _W_SF1, PhiSelector(c=2.0, v=v), cfg)
        rhs = _range_moment_direct(model, v, cfg)
        pairs.append((lhs, rhs))
    return _worst(pairs)


def _i7_sample(s, conv):
    pairs = []
    for v in (1.0, 2.0):
        lhs = generalized_residual_entropy(s, _W_SF1, PhiSelector(c=2.0, v=v), conv)
        rhs = _sorted_gmd(s.values**v)
        pairs.append((lhs, rhs))
    return _worst(pairs)


def _i8_pop(model, cfg):
    lhs = gce_population(model, _W_CDF1, PhiSelector(c=2.0, v=1.0), cfg)
    return lhs, _mx(model, cfg, id="gmd")


def _i8_sample(s, conv):
    lhs = generalized_cumulative_entropy(s, _W_CDF1, PhiSelector(c=2.0, v=1.0), conv)
    return lhs, _sorted_gmd(s.values)


def _i9_pop(model, cfg):
    pairs = [
        (_mx(model, cfg, id=mid), _mq(model, cfg, id=mid))
        for mid in ("crj", "cj", "crjw", "wce")
    ]
    return _worst(pairs)


def _i9_sample(s, conv):
    pairs = [
        (-0.5 * pairwise_min_mean(s.values), crj(s)),
        (-0.5 * pairwise_max_mean(s.values), cj(s)),
    ]
    return _worst(pairs)


def _i10_pop(model, cfg):
    pairs = []
    for alpha in (2.0, 3.0, 2.5):
        for mid in ("crt", "ct", "wcrt", "wct"):
            pairs.append((_mx(model, cfg, id=mid, alpha=alpha),
                          _mq(model, cfg, id=mid, alpha=alpha)))
    return _worst(pairs)


def _i10_sample(s, conv):
    x = s.values
    pairs = []
    for alpha in (2.0, 3.0):
        a = alpha
        pairs.append((_step_plain(x, lambda F: (1 - F) - (1 - F) ** a) / (a - 1),
                      crt(s, a, conv)[0]))
        pairs.append((_step_plain(x, lambda F: F - F**a) / (a - 1),
                      ct(s, a, conv)[0]))
        pairs.append((_step_xweighted(x, lambda F: (1 - F) - (1 - F) ** a) / (a - 1),
                      wcrt(s, a, conv)[0]))
        pairs.append((_step_xweighted(x, lambda F: F - F**a) / (a - 1),
                      wct(s, a, conv)[0]))
    return _worst(pairs)


def _i11_pop(model, cfg):
    pairs = []
    for alpha, beta in ((1.0, 2.0), (2.0, 3.0), (1.5, 2.5)):
        for mid in ("sr", "sp", "srw", "spw"):
            pairs.append((_mx(model, cfg, id=mid, alpha=alpha, beta=beta),
                          _mq(model, cfg, id=mid, alpha=alpha, beta=beta)))
    return _worst(pairs)


def _i11_sample(s, conv):
    x = s.values
    pairs = []
    for a, b in ((1.0, 2.0), (2.0, 3.0)):
        pairs.append((_step_plain(x, lambda F: (1 - F) ** a - (1 - F) ** b) / (b - a),
                      sr(s, a, b, conv)[0]))
        pairs.append((_step_plain(x, lambda F: F**a - F**b) / (b - a),
                      sp(s, a, b, conv)[0]))
        pairs.append((_step_xweighted(x, lambda F: (1 - F) ** a - (1 - F) ** b) / (b - a),
                      srw(s, a, b, conv)[0]))
        pairs.append((_step_xweighted(x, lambda F: F**a - F**b) / (b - a),
                      spw(s, a, b, conv)[0]))
    return _worst(pairs)


def _i12_pop(model, cfg):
    pairs = []
    for v in (2.0, 3.0, 2.5):
        pairs.append((_mx(model, cfg, id="s_gini", v=v),
                      _mq(model, cfg, id="s_gini", v=v)))
    return _worst(pairs)


def _i12_sample(s, conv):
    x = s.values
    u = plotting_positions(s.n, conv)
    pairs = []
    for v in (2.0, 3.0):
        lhs = -_plugin_cov(x, (1.0 - u) ** (v - 1.0))
        pairs.append((lhs, s_gini(s, v, conv)[0]))
    return _worst(pairs)


def _i13_pop(model, cfg):
    from dataclasses import replace

    icfg = replace(cfg, abs_tol=cfg.abs_tol * 1e-2, rel_tol=cfg.rel_tol * 1e-2)
    lo, hi = model.support
    mid = float(model.quantile(0.5))

    # Min transform Z = min(X1, X2): the half-weighted mean residual life of
    # Z equals the F-bar-weighted average of (gmd_left - m).
    def m_z(t: float) -> float:
        st2 = float(model.sf(t)) ** 2
        val = integrate_x(lambda y: float(model.sf(y)) ** 2, t, hi, icfg,
                          breakpoints=(lo, mid))
        return val / st2

    def q_z(p: float) -> float:
        return float(model.quantile(1.0 - math.sqrt(1.0 - p)))

    lhs_min = -0.5 * integrate_u(lambda p: m_z(q_z(p)), cfg)

    def rhs_min_f(p: float) -> float:
        t = float(model.quantile(p))
        diff = gmd_left_population(model, t, icfg, route="quantile") \
            - mean_residual_life(model, t, icfg)
        return diff * (1.0 - p)

    rhs_min = integrate_u(rhs_min_f, cfg)

    # Max transform Z' = max(X1, X2): the half-weighted mean past life of
    # Z' equals the F-weighted average of (r - gmd_right).
    def r_zmax(t: float) -> float:
        ft2 = float(model.cdf(t)) ** 2
        val = integrate_x(lambda y: float(model.cdf(y)) ** 2, 0.0, t, icfg,
                          breakpoints=(lo, mid))
        return val / ft2

    def q_zmax(p: float) -> float:
        return float(model.quantile(math.sqrt(p)))

    lhs_max = 0.5 * integrate_u(lambda p: r_zmax(q_zmax(p)), cfg)

    def rhs_max_f(p: float) -> float:
        t = float(model.quantile(p))
        diff = mean_past_life(model, t, icfg) \
            - gmd_right_population(model, t, icfg, route="quantile")
        return diff * p

    rhs_max = integrate_u(rhs_max_f, cfg)

    return _worst([(lhs_min, rhs_min), (lhs_max, rhs_max)])


def _i14_pop(model, cfg):
    lo, hi = model.support
    mid = float(model.quantile(0.5))
    pairs = []
    for k in (2, 3):
        def g(x: float, k=k) -> float:
            f = float(model.cdf(x))
            sfv = float(model.sf(x))
            return (1.0 - f**k) - sfv**k

        lhs = integrate_x(g, 0.0, hi, cfg, breakpoints=(lo, mid))
        rhs = k * (pwm_population(model, PwmIndex(1, k - 1.0, 0), cfg)
                   - pwm_population(model, PwmIndex(1, 0, k - 1.0), cfg))
        pairs.append((lhs, rhs))
    return _worst(pairs)


def _i14_sample(s, conv):
    x = s.values
    u = plotting_positions(s.n, conv)
    pairs = []
    for k in (2, 3):
        if s.n < k:
            continue
        lhs = risk_premium(s, k) + gain_premium(s, k)
        rhs = k * (_plugin_cov(x, u ** (k - 1.0)) - _plugin_cov(x, (1.0 - u) ** (k - 1.0)))
        pairs.append((lhs, rhs))
    if not pairs:
        return None
    return _worst(pairs)


REGISTRY = (
    Identity("I1", "gmd = 2*M{1,1,0} - 2*M{1,0,1}", "both", "exact-sample",
             _i1_pop, _i1_sample),
    Identity("I2", "gmd = 4*Cov(X, F(X))", "both", "asymptotic",
             _i2_pop, _i2_sample),
    Identity("I3", "gmd = 2*crt(alpha=2)", "both", "exact-sample",
             _i3_pop, _i3_sample),
    Identity("I4", "2*crj - 2*cj = gmd", "both", "exact-by-construction",
             _i4_pop, _i4_sample),
    Identity("I5", "gmd_left(t) = m(t) + 2*j_dyn(t)", "both", "exact-sample",
             _i5_pop, _i5_sample),
    Identity("I6", "gmd_right(t) = 2*h_dyn(t) + r(t)", "both", "exact-sample",
             _i6_pop, _i6_sample),
    Identity("I7", "ge(Fbar, 2x^v) = E(max2^v) - E(min2^v), v in {1,2}", "both",
             "asymptotic", _i7_pop, _i7_sample),
    Identity("I8", "gce(F, 2x) = E(max2) - E(min2)", "both", "asymptotic",
             _i8_pop, _i8_sample),
    Identity("I9", "extropy family PWM forms (crj, cj, crjw, wce)", "both",
             "exact-sample", _i9_pop, _i9_sample),
    Identity("I10", "Tsallis family PWM forms (crt, ct, wcrt, wct)", "both",
             "asymptotic", _i10_pop, _i10_sample),
    Identity("I11", "two-parameter family PWM forms (sr, sp, srw, spw)", "both",
             "asymptotic", _i11_pop, _i11_sample),
    Identity("I12", "s_gini(v) = (1/v)*M{1,0,0} - M{1,0,v-1}", "both",
             "asymptotic", _i12_pop, _i12_sample),
    Identity("I13", "min/max-transform averages of the truncated gmd gaps",
             "population", "population-only", _i13_pop, None),
    Identity("I14", "gain(k) + risk(k) = k*Cov(X,F^{k-1}) - k*Cov(X,Fbar^{k-1})",
             "both", "asymptotic", _i14_pop, _i14_sample),
)


# ---------------------------------------------------------------------------
# verification driver


def _default_tolerance(identity: Identity, level: str, n: int = 0) -> float:
    if level == "population":
        return POPULATION_TOL
    if identity.exactness in ("exact-sample", "exact-by-construction"):
        return EXACT_SAMPLE_TOL
    return max(ASYMPTOTIC_SAMPLE_TOL, _ASYMPTOTIC_SLOPE / n if n else 0.0)


def verify(identity: Identity, source, cfg: QuadratureConfig = DEFAULT_CONFIG,
           conv: str = "hazen", tolerance: Optional[float] = None) -> IdentityReport:
    """Evaluate both sides of one identity on a model or sample.

    Raises NotApplicableError when the identity has no form at the
    source's level (or the sample is too degenerate to truncate).
    """
    if isinstance(source, Sample):
        if identity.sample_sides is None or identity.level == "population":
            raise NotApplicableError(f"{identity.id} has no sample-level form")
        sides = identity.sample_sides(source, conv)
        if sides is None:
            raise NotApplicableError(
                f"{identity.id}: sample admits no usable truncation point"
            )
        level, label = "sample", source.digest()
    elif isinstance(source, ParametricModel):
        if identity.population_sides is None:
            raise NotApplicableError(f"{identity.id} has no population-level form")
        sides = identity.population_sides(source, cfg)
        level, label = "population", source.describe()
    else:
        raise BadParameterError(
            f"source must be a Sample or ParametricModel, got {type(source).__name__}"
        )
    lhs, rhs = float(sides[0]), float(sides[1])
    n = source.n if level == "sample" else 0
    tol = float(tolerance) if tolerance is not None else _default_tolerance(identity, level, n)
    abs_res = abs(lhs - rhs)
    denom = max(abs(lhs), abs(rhs))
    rel_res = abs_res / denom if denom > 0 else 0.0
    passed = abs_res <= max(tol, tol * denom)
    return IdentityReport(
        identity=identity.id,
        description=identity.description,
        source=label,
        level=level,
        exactness=identity.exactness,
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs_res,
        rel_residual=rel_res,
        tolerance=tol,
        passed=passed,
    )


def verify_all(source, cfg: QuadratureConfig = DEFAULT_CONFIG,
               conv: str = "hazen") -> list:
    """Run every identity applicable to the source, in registry order."""
    reports = []
    for identity in REGISTRY:
        try:
            reports.append(verify(identity, source, cfg, conv))
        except NotApplicableError:
            continue
    return reports
