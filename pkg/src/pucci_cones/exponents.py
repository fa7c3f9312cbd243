"""Homogeneity exponents (level sets of g and h) and inversion of G, H in x."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import special_functions as sf
from .errors import ConvergenceError, DomainError, RangeError

DEFAULT_TOL = 1e-12
# bracket expansion gives up beyond this |alpha|
MAX_EXPONENT = 1e8
HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class ConeProblem:
    """Pucci problem ``M^-_{lam,Lam}(D^2 u) = 0`` in the planar cone of half-opening ``theta0``.

    The cone is ``{|theta| < theta0}`` with ``theta`` measured from the
    positive y-axis.
    """

    lam: float
    Lam: float
    theta0: float

    def __post_init__(self):
        lam, Lam, theta0 = float(self.lam), float(self.Lam), float(self.theta0)
        if not (math.isfinite(lam) and math.isfinite(Lam) and 0.0 < lam <= Lam):
            raise DomainError(f"need 0 < lambda <= Lambda < inf, got lambda={lam!r}, Lambda={Lam!r}")
        if not (0.0 < theta0 < math.pi):
            raise DomainError(f"half-opening theta0 must lie in (0, pi), got {theta0!r}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "Lam", Lam)
        object.__setattr__(self, "theta0", theta0)

    @classmethod
    def from_omega(cls, omega: float, theta0: float) -> "ConeProblem":
        return cls(1.0, sf.check_omega(omega), theta0)

    @property
    def omega(self) -> float:
        return self.Lam / self.lam


@dataclass(frozen=True)
class ExponentSet:
    alpha_plus: float
    alpha_minus: float
    beta_plus: float
    beta_minus: float

    def as_dict(self) -> dict[str, float]:
        return {
            "alpha_plus": self.alpha_plus,
            "alpha_minus": self.alpha_minus,
            "beta_plus": self.beta_plus,
            "beta_minus": self.beta_minus,
        }


def _value(f: Callable[[float], float], a: float) -> float:
    try:
        return f(a)
    except (DomainError, OverflowError, ZeroDivisionError):
        return math.inf


def _bisect_secant(f, lo: float, hi: float, target: float, tol: float, increasing: bool) -> float:
    """Root of ``f(a) = target`` for monotone ``f`` on the bracket [lo, hi]."""
    sgn = 1.0 if increasing else -1.0

    def resid(a):
        return sgn * (_value(f, a) - target)

    level_tol = 0.5 * tol * (1.0 + abs(target))
    for _ in range(400):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        r_mid = resid(mid)
        if hi - lo <= tol * max(1.0, abs(mid)) and abs(r_mid) <= level_tol:
            break
        if r_mid > 0.0:
            hi = mid
        else:
            lo = mid
    # secant polish, kept inside the final bracket
    r_lo, r_hi = resid(lo), resid(hi)
    best = lo if abs(r_lo) <= abs(r_hi) else hi
    for _ in range(3):
        if not (math.isfinite(r_lo) and math.isfinite(r_hi)) or r_hi == r_lo:
            break
        cand = lo - r_lo * (hi - lo) / (r_hi - r_lo)
        if not lo < cand < hi:
            break
        r_c = resid(cand)
        if r_c == 0.0:
            return cand
        if r_c > 0.0:
            hi, r_hi = cand, r_c
        else:
            lo, r_lo = cand, r_c
        best = lo if abs(r_lo) <= abs(r_hi) else hi
    return best


def _toward_edge(f, edge: float, start: float, target: float, above: bool) -> float:
    """Move from ``start`` geometrically toward ``edge`` until ``f`` crosses ``target``."""
    gap = start - edge
    for _ in range(1100):
        a = edge + gap
        if a == edge:
            break
        v = _value(f, a)
        if (v > target) if above else (v < target):
            return a
        gap *= 0.5
    raise ConvergenceError(f"could not bracket level {target!r} near the branch edge {edge!r}")


def _toward_infinity(f, start: float, direction: float, target: float) -> float:
    a = start
    step = 1.0
    while abs(a) <= MAX_EXPONENT:
        if _value(f, a) < target:
            return a
        a = start + direction * step
        step *= 2.0
    raise ConvergenceError(
        f"bracketing failed up to |alpha| = {MAX_EXPONENT:g}: level {target!r} is numerically "
        "indistinguishable from 0 or pi"
    )


def _solve_positive(f, edge: float, theta0: float, tol: float) -> float:
    """Decreasing branch on (edge, inf) with value pi/2 at 1."""
    if theta0 == HALF_PI:
        return 1.0
    if theta0 < HALF_PI:
        lo, hi = 1.0, _toward_infinity(f, 1.0, 1.0, theta0)
    else:
        lo, hi = _toward_edge(f, edge, 1.0, theta0, above=True), 1.0
    return _bisect_secant(f, lo, hi, theta0, tol, increasing=False)


def _solve_negative(f, edge: float, theta0: float, tol: float) -> float:
    """Increasing branch on (-inf, edge)."""
    hi = _toward_edge(f, edge, edge - 1.0, theta0, above=True)
    lo = _toward_infinity(f, edge - 1.0, -1.0, theta0)
    return _bisect_secant(f, lo, hi, theta0, tol, increasing=True)


def alpha_plus(omega: float, theta0: float, tol: float = DEFAULT_TOL) -> float:
    omega = sf.check_omega(omega)
    return _solve_positive(lambda a: sf.eval_g(omega, a), 1.0 - 1.0 / omega, theta0, tol)


def alpha_minus(omega: float, theta0: float, tol: float = DEFAULT_TOL) -> float:
    omega = sf.check_omega(omega)
    return _solve_negative(lambda a: sf.eval_g(omega, a), 1.0 - omega, theta0, tol)


def beta_plus(omega: float, theta0: float, tol: float = DEFAULT_TOL) -> float:
    omega = sf.check_omega(omega)
    return _solve_positive(lambda a: sf.eval_h(omega, a), 0.0, theta0, tol)


def beta_minus(omega: float, theta0: float, tol: float = DEFAULT_TOL) -> float:
    omega = sf.check_omega(omega)
    return _solve_negative(lambda a: sf.eval_h(omega, a), 0.0, theta0, tol)


def solve_exponents(problem: ConeProblem, tol: float = DEFAULT_TOL) -> ExponentSet:
    """Solve ``g_w(alpha) = theta0`` and ``h_w(beta) = theta0`` on each monotone branch.

    Parameters
    ----------
    problem : ConeProblem
    tol : float
        Relative tolerance on the exponents.

    Returns
    -------
    ExponentSet
        ``alpha_minus < 0 < alpha_plus`` and ``beta_minus < 0 < beta_plus``.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    w, t = problem.omega, problem.theta0
    return ExponentSet(
        alpha_plus=alpha_plus(w, t, tol),
        alpha_minus=alpha_minus(w, t, tol),
        beta_plus=beta_plus(w, t, tol),
        beta_minus=beta_minus(w, t, tol),
    )


def exponent_residuals(problem: ConeProblem, exps: ExponentSet) -> dict[str, float]:
    w, t = problem.omega, problem.theta0
    return {
        "alpha_plus": abs(sf.eval_g(w, exps.alpha_plus) - t),
        "alpha_minus": abs(sf.eval_g(w, exps.alpha_minus) - t),
        "beta_plus": abs(sf.eval_h(w, exps.beta_plus) - t),
        "beta_minus": abs(sf.eval_h(w, exps.beta_minus) - t),
    }


def _safeguarded_newton(fun, dfun, target, lo, hi, x, tol):
    """Vectorised Newton for increasing ``fun`` on brackets ``[lo, hi]``.

    A Newton step is accepted only while it stays inside the current bracket,
    otherwise the bracket is bisected.  Returns the evaluated point of least
    residual.
    """
    lo, hi, x = lo.copy(), hi.copy(), x.copy()
    best = x.copy()
    best_r = np.full_like(x, np.inf)
    active = np.ones(x.shape, dtype=bool)
    for _ in range(200):
        if not np.any(active):
            break
        idx = np.flatnonzero(active)
        xa = x[idx]
        r = np.asarray(fun(xa, idx)) - target[idx]
        better = np.abs(r) < best_r[idx]
        best[idx] = np.where(better, xa, best[idx])
        best_r[idx] = np.where(better, np.abs(r), best_r[idx])
        lo_a = np.where(r < 0.0, xa, lo[idx])
        hi_a = np.where(r > 0.0, xa, hi[idx])
        step = r / np.asarray(dfun(xa, idx))
        done = ((r == 0.0) | (np.abs(step) <= tol * np.maximum(xa, 1e-300))
                | (hi_a - lo_a <= 4.0 * np.spacing(hi_a)))
        xn = xa - step
        bad = ~((xn > lo_a) & (xn < hi_a)) | ~np.isfinite(xn)
        xn = np.where(bad, 0.5 * (lo_a + hi_a), xn)
        lo[idx], hi[idx], x[idx] = lo_a, hi_a, xn
        active[idx[done]] = False
    else:
        raise ConvergenceError("inversion did not converge")
    return best


def invert_form(f: sf.BranchForm, theta, tol: float = 1e-14, complement: bool = False):
    """Solve ``F(x) = theta`` on [0, 1] for an increasing branch ``F``.

    Roots above 1/2 are refined in ``t = 1 - x``, which keeps full relative
    precision in ``1 - x`` (needed where ``1 + s x^2`` nearly vanishes at
    ``x = 1``).  With ``complement=True`` the pair ``(x, 1 - x)`` is returned.
    """
    th = np.asarray(theta, dtype=float)
    top = float(sf.eval_form(f, 1.0))
    slack = 8.0 * np.finfo(float).eps * max(1.0, top)
    if np.any(~np.isfinite(th)) or np.any(th < 0.0) or np.any(th > top + slack):
        raise RangeError(f"angle must lie in [0, {top!r}]")
    flat = np.minimum(th, top).reshape(-1)
    x = np.where(flat >= top, 1.0, 0.0)
    t = 1.0 - x
    inner = np.flatnonzero((flat > 0.0) & (flat < top))
    if inner.size:
        target = flat[inner]
        xs = _safeguarded_newton(
            lambda z, i: sf.eval_form(f, z), lambda z, i: sf.eval_form_d1(f, z),
            target, np.zeros_like(target), np.ones_like(target), target / top, tol)
        x[inner], t[inner] = xs, 1.0 - xs
        up = xs > 0.5
        if np.any(up):
            tgt = -target[up]
            ts = _safeguarded_newton(
                lambda z, i: -sf.eval_form(f, 1.0 - z, z),
                lambda z, i: sf.eval_form_d1(f, 1.0 - z, z),
                tgt, np.zeros_like(tgt), np.full_like(tgt, 0.5 + 1e-9),
                np.minimum(1.0 - xs[up], 0.5), tol)
            sel = inner[up]
            x[sel], t[sel] = 1.0 - ts, ts
    x = np.clip(x, 0.0, 1.0).reshape(th.shape)
    t = np.clip(t, 0.0, 1.0).reshape(th.shape)
    if np.ndim(theta) == 0:
        x, t = float(x), float(t)
    return (x, t) if complement else x


def invert_G(omega: float, alpha: float, theta, tol: float = 1e-14):
    """Inverse of ``x -> G_{w,alpha}(x)``; ``theta`` in ``[0, g_w(alpha)]``."""
    return invert_form(sf.g_form(omega, alpha), theta, tol)


def invert_H(omega: float, alpha: float, theta, tol: float = 1e-14):
    """Inverse of ``x -> H_{w,alpha}(x)``; ``theta`` in ``[0, h_w(alpha)]``."""
    return invert_form(sf.h_form(omega, alpha), theta, tol)
