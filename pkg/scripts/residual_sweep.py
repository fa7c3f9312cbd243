"""Worst normalized Pucci residual of the four homogeneous solutions over random cones.

Reports, per solution kind, the analytic-Hessian residual and the gap between
analytic and finite-difference eigenvalues.
"""
from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

import numpy as np

from pucci_cones.exponents import ConeProblem
from pucci_cones.field import HomogeneousSolution
from pucci_cones.profiles import ProfileKind


@dataclass
class SweepConfig:
    n_cones: int = 50
    n_points: int = 200
    omega_max: float = 20.0
    seed: int = 0
    interior: float = 0.99


def sweep(cfg: SweepConfig) -> dict[str, tuple[float, float]]:
    rng = np.random.default_rng(cfg.seed)
    worst = {k.value: (0.0, 0.0) for k in ProfileKind}
    for _ in range(cfg.n_cones):
        problem = ConeProblem.from_omega(rng.uniform(1.0, cfg.omega_max), rng.uniform(0.05, math.pi - 0.05))
        rho = np.exp(rng.uniform(-2.0, 2.0, cfg.n_points))
        theta = problem.theta0 * cfg.interior * rng.uniform(-1.0, 1.0, cfg.n_points)
        for kind in ProfileKind:
            sol = HomogeneousSolution(problem, kind)
            eigs = sol.hessian_eigs(rho, theta)
            res = np.abs(sol.residual(rho, theta)) / np.abs(eigs).sum(axis=-1)
            fd = sol.fd_hessian_eigs(rho, theta)
            gap = np.abs(eigs - fd) / np.maximum(1.0, np.abs(eigs).max(axis=-1, keepdims=True))
            r0, g0 = worst[kind.value]
            worst[kind.value] = (max(r0, float(res.max())), max(g0, float(gap.max())))
    return worst


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-cones", type=int, default=SweepConfig.n_cones)
    ap.add_argument("--n-points", type=int, default=SweepConfig.n_points)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args(argv)
    worst = sweep(SweepConfig(n_cones=args.n_cones, n_points=args.n_points, seed=args.seed))
    print(f"{'kind':>6}  {'residual':>10}  {'fd gap':>10}")
    for kind, (res, gap) in worst.items():
        print(f"{kind:>6}  {res:10.2e}  {gap:10.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
