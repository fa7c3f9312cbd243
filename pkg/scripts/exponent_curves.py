"""Tabulate g_w and h_w on both branches for a few ellipticity ratios.

Writes one CSV per function with an ``alpha`` column and one value column per
omega; exponents in the gap of g are left empty.
"""
from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from pucci_cones import special_functions as sf
from pucci_cones.cli import format_float


@dataclass
class CurveConfig:
    omegas: list[float] = field(default_factory=lambda: [1.0, 2.0, 5.0])
    alpha_min: float = -8.0
    alpha_max: float = 8.0
    samples: int = 801
    precision: int = 12
    out_dir: Path = Path("results")


def tabulate(cfg: CurveConfig, fn) -> list[list[str]]:
    alphas = np.linspace(cfg.alpha_min, cfg.alpha_max, cfg.samples)
    table = []
    for a in alphas:
        row = [format_float(a, cfg.precision)]
        for w in cfg.omegas:
            try:
                row.append(format_float(fn(w, float(a)), cfg.precision))
            except sf.DomainError:
                row.append("")
        table.append(row)
    return table


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--omegas", type=float, nargs="+", default=CurveConfig().omegas)
    ap.add_argument("--alpha-min", type=float, default=CurveConfig.alpha_min)
    ap.add_argument("--alpha-max", type=float, default=CurveConfig.alpha_max)
    ap.add_argument("--samples", type=int, default=CurveConfig.samples)
    ap.add_argument("--out-dir", type=Path, default=CurveConfig.out_dir)
    args = ap.parse_args(argv)
    cfg = CurveConfig(args.omegas, args.alpha_min, args.alpha_max, args.samples, out_dir=args.out_dir)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    header = ["alpha"] + [f"omega_{format_float(w, 6)}" for w in cfg.omegas]
    for name, fn in (("g", sf.eval_g), ("h", sf.eval_h)):
        path = cfg.out_dir / f"curve_{name}.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(tabulate(cfg, fn))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
