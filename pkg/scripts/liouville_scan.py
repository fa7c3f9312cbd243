"""Critical interval of the Liouville inequality as the cone opens.

For each omega, scans theta0 over (0, pi) and records the exponents a+-
and the interval [1 - 2/a+, 1 - 2/a-].  Optionally builds and verifies a
supersolution just outside both endpoints at every scan point.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from pucci_cones.analysis import build_supersolution, critical_interval
from pucci_cones.cli import format_float
from pucci_cones.errors import InfeasibleError
from pucci_cones.exponents import ConeProblem, alpha_minus, alpha_plus


@dataclass
class ScanConfig:
    omegas: list[float] = field(default_factory=lambda: [1.0, 2.0, 10.0])
    n_theta: int = 24
    theta_min: float = 0.2
    theta_max: float = math.pi - 0.2
    witness_offset: float = 0.25
    witnesses: bool = False


def scan(cfg: ScanConfig):
    for w in cfg.omegas:
        for theta0 in np.linspace(cfg.theta_min, cfg.theta_max, cfg.n_theta):
            problem = ConeProblem.from_omega(w, float(theta0))
            lo, hi = critical_interval(problem)
            row = {"omega": w, "theta0": float(theta0), "alpha_plus": alpha_plus(w, theta0),
                   "alpha_minus": alpha_minus(w, theta0), "p_low": lo, "p_high": hi}
            if cfg.witnesses:
                for tag, p in (("below", lo - cfg.witness_offset), ("above", hi + cfg.witness_offset)):
                    try:
                        _, sol = build_supersolution(problem, p)
                        row[f"witness_{tag}"] = sol.verify().max_normalized_margin
                    except InfeasibleError:
                        row[f"witness_{tag}"] = None
            yield row


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--omegas", type=float, nargs="+", default=ScanConfig().omegas)
    ap.add_argument("--n-theta", type=int, default=ScanConfig.n_theta)
    ap.add_argument("--witnesses", action="store_true", help="also build supersolutions outside the interval")
    args = ap.parse_args(argv)
    cfg = ScanConfig(omegas=args.omegas, n_theta=args.n_theta, witnesses=args.witnesses)
    start = time.perf_counter()
    writer = None
    failures = 0
    for row in scan(cfg):
        if writer is None:
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(list(row))
        failures += sum(1 for k, v in row.items() if k.startswith("witness") and (v is None or v > 0))
        writer.writerow(["" if v is None else format_float(v, 10) for v in row.values()])
    print(f"# {time.perf_counter() - start:.1f} s, {failures} failed witnesses", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
