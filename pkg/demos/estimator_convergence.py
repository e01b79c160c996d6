"""Seeded convergence study for the sample estimators.

Draws replicated exponential(1) samples at a ladder of sizes through a
counter-based generator (one independent stream per (size, replicate)
pair, so any cell of the table can be reproduced in isolation) and
reports bias, standard deviation, and RMSE of a few estimators against
their known population values.  RMSE should fall roughly like
1/sqrt(n); the script checks the endpoints and exits nonzero if the
largest size is not clearly better than the smallest.

Run:  python3 demos/estimator_convergence.py [--reps R] [--seed S]
"""

import argparse
import sys

import numpy as np

from gmdinfo import MeasureSpec, make_sample, measure_sample

SIZES = (50, 200, 800, 3200)

# measure spec -> population value on exponential(1)
TARGETS = (
    (MeasureSpec("gmd"), 1.0),
    (MeasureSpec("crj"), -0.25),
    (MeasureSpec("s_gini", v=2.0), 0.25),
)


def draw(seed: int, n: int, rep: int) -> np.ndarray:
    bits = np.random.Philox(np.random.SeedSequence([seed, n, rep]))
    return np.random.Generator(bits).exponential(1.0, n)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=300)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    ok = True
    for spec, target in TARGETS:
        params = spec.params_dict()
        args_part = ", ".join(f"{k}={v}" for k, v in params.items())
        label = spec.id if not params else f"{spec.id}({args_part})"
        print(f"--- {label}  (population {target:+.6f}) ---")
        print(f"{'n':>6} {'mean':>12} {'bias':>12} {'sd':>10} {'rmse':>10}")
        rmse_by_size = []
        for n in SIZES:
            vals = np.empty(args.reps)
            for rep in range(args.reps):
                sample = make_sample(draw(args.seed, n, rep))
                vals[rep], _ = measure_sample(sample, spec)
            bias = float(vals.mean() - target)
            sd = float(vals.std(ddof=1))
            rmse = float(np.sqrt(np.mean((vals - target) ** 2)))
            rmse_by_size.append(rmse)
            print(f"{n:>6} {vals.mean():>12.6f} {bias:>+12.6f} {sd:>10.6f} {rmse:>10.6f}")
        shrink = rmse_by_size[-1] / rmse_by_size[0]
        print(f"rmse({SIZES[-1]}) / rmse({SIZES[0]}) = {shrink:.4f}"
              f"  (1/sqrt(n) ratio would be {np.sqrt(SIZES[0] / SIZES[-1]):.4f})")
        print()
        if shrink >= 0.5:
            ok = False
    if not ok:
        print("FAIL: rmse did not at least halve from the smallest to the largest size")
        return 1
    print("rmse shrinks with n for every measure")
    return 0


if __name__ == "__main__":
    sys.exit(main())
