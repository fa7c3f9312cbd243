"""Monotonicity quantities, Liouville classification and verification suites."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import special_functions as sf
from .errors import DomainError, EvaluationError, InfeasibleError
from .exponents import (
    DEFAULT_TOL, HALF_PI, ConeProblem, alpha_minus, alpha_plus, beta_minus, beta_plus,
    invert_form,
)
from .field import HomogeneousSolution, homogeneous_hessian_eigs, pucci_minus
from .profiles import AngularProfile, ProfileKind, make_profile

# fraction of theta0 excluded at each end when sampling u/phi (0/0 on the boundary)
BOUNDARY_MARGIN = 1e-3
REFINE_TOL = 1e-6
MAX_REFINEMENTS = 8
MAX_SHRINK_STEPS = 60
R0_SAFETY = 0.99
R0_GRID = 1000
VERIFY_POINTS = 500
VERIFY_RHO_MAX = 1e3
MARGIN_TOL = 1e-10


# --------------------------------------------------------------------------- #
# monotonicity of m+-(r)
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class MonotonicityReport:
    radii: tuple[float, ...]
    m_plus: tuple[float, ...]
    m_minus: tuple[float, ...]
    scaled_plus: tuple[float, ...]
    scaled_minus: tuple[float, ...]
    alpha_plus: float
    alpha_minus: float

    @staticmethod
    def _violation(seq: Sequence[float], direction: float) -> float:
        worst = 0.0
        for a, b in zip(seq[:-1], seq[1:]):
            step = direction * (b - a) / max(abs(a), abs(b), 1e-300)
            worst = max(worst, step)
        return worst

    @property
    def plus_violation(self) -> float:
        """Largest relative increase of ``r^{-a+} m+(r)`` (0 when non-increasing)."""
        return self._violation(self.scaled_plus, 1.0)

    @property
    def minus_violation(self) -> float:
        """Largest relative decrease of ``r^{-a-} m-(r)`` (0 when non-decreasing)."""
        return self._violation(self.scaled_minus, -1.0)

    def is_monotone(self, tol: float = REFINE_TOL) -> bool:
        return self.plus_violation <= tol and self.minus_violation <= tol


def _infimum_ratio(u, profile: AngularProfile, r: float, theta0: float, n: int) -> float:
    """``min u(r, t)/phi(t)`` over a uniform grid, doubled until it settles."""
    edge = theta0 * (1.0 - BOUNDARY_MARGIN)
    prev = None
    for _ in range(MAX_REFINEMENTS + 1):
        theta = np.linspace(-edge, edge, n)
        try:
            vals = np.asarray(u(np.full_like(theta, r), theta), dtype=float)
        except Exception as exc:  # user field
            raise EvaluationError(f"field evaluation failed at r={r!r}: {exc}") from exc
        if vals.shape != theta.shape or not np.all(np.isfinite(vals)):
            raise EvaluationError(f"field returned non-finite or misshapen values at r={r!r}")
        cur = float(np.min(vals / profile(theta)))
        if prev is not None and abs(cur - prev) <= REFINE_TOL * max(abs(cur), 1e-300):
            return cur
        prev = cur
        n = 2 * n - 1
    return prev


def monotonicity_report(u: Callable, problem: ConeProblem, radii: Sequence[float],
                        angular_samples: int = 64, tol: float = DEFAULT_TOL) -> MonotonicityReport:
    """Sample ``m+-(r) = inf u/phi_{a+-}`` on arcs of radius ``r``.

    Parameters
    ----------
    u : callable
        ``u(rho, theta)`` accepting arrays, nonnegative on the cone.
    problem : ConeProblem
    radii : sequence of float
        Positive and strictly increasing.
    angular_samples : int
        Initial grid size (at least 16); each infimum is refined by
        doubling the grid until it changes by less than 1e-6 relative.
    """
    radii = [float(r) for r in radii]
    if not radii or any(r <= 0.0 for r in radii) or any(b <= a for a, b in zip(radii[:-1], radii[1:])):
        raise ValueError("radii must be positive and strictly increasing")
    if angular_samples < 16:
        raise ValueError("angular_samples must be at least 16")
    phi_p = make_profile(problem, ProfileKind.PHI_PLUS, tol)
    phi_m = make_profile(problem, ProfileKind.PHI_MINUS, tol)
    a_p, a_m = phi_p.exponent, phi_m.exponent
    m_p = [_infimum_ratio(u, phi_p, r, problem.theta0, angular_samples) for r in radii]
    m_m = [_infimum_ratio(u, phi_m, r, problem.theta0, angular_samples) for r in radii]
    return MonotonicityReport(
        radii=tuple(radii), m_plus=tuple(m_p), m_minus=tuple(m_m),
        scaled_plus=tuple(r ** -a_p * m for r, m in zip(radii, m_p)),
        scaled_minus=tuple(r ** -a_m * m for r, m in zip(radii, m_m)),
        alpha_plus=a_p, alpha_minus=a_m,
    )


# --------------------------------------------------------------------------- #
# Liouville classification
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class LiouvilleVerdict:
    p: float
    omega: float
    theta0: float
    nonexistence: bool
    critical_interval: tuple[float, float]
    threshold_value: float | None
    criteria_agree: bool

    def as_dict(self) -> dict:
        return {
            "p": self.p, "omega": self.omega, "theta0": self.theta0,
            "nonexistence": self.nonexistence,
            "critical_interval": list(self.critical_interval),
            "threshold_value": self.threshold_value,
            "criteria_agree": self.criteria_agree,
        }


def critical_interval(problem: ConeProblem, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """``[1 - 2/a+, 1 - 2/a-]``, the exponents p with no positive supersolution."""
    a_p = alpha_plus(problem.omega, problem.theta0, tol)
    a_m = alpha_minus(problem.omega, problem.theta0, tol)
    return 1.0 - 2.0 / a_p, 1.0 - 2.0 / a_m


def liouville_classify(problem: ConeProblem, p: float, tol: float = DEFAULT_TOL) -> LiouvilleVerdict:
    """Decide whether ``M^-(D^2 u) + u^p <= 0`` has a positive solution in the cone.

    The verdict comes from the critical interval; the equivalent test
    ``g_w(2/(1-p)) <= theta0`` is evaluated alongside (``threshold_value``
    is ``None`` when ``2/(1-p)`` falls in the gap of g, where it acts as
    ``+inf``, and for ``p = 1``).
    """
    p = float(p)
    if not math.isfinite(p):
        raise DomainError(f"p must be finite, got {p!r}")
    lo, hi = critical_interval(problem, tol)
    nonexistence = lo <= p <= hi
    threshold = None
    if p == 1.0:
        by_g = True
    else:
        try:
            threshold = sf.eval_g(problem.omega, 2.0 / (1.0 - p))
            by_g = threshold <= problem.theta0
        except DomainError:
            by_g = False
    return LiouvilleVerdict(
        p=p, omega=problem.omega, theta0=problem.theta0, nonexistence=nonexistence,
        critical_interval=(lo, hi), threshold_value=threshold, criteria_agree=by_g == nonexistence,
    )


# --------------------------------------------------------------------------- #
# explicit supersolutions outside the critical interval
# --------------------------------------------------------------------------- #

class Regime(enum.Enum):
    SUPERCRITICAL_HIGH = "supercritical_high"
    SUBCRITICAL_LOW = "subcritical_low"


@dataclass(frozen=True)
class SupersolutionWitness:
    """Parameters of ``u~(x, y) = c * rho^beta (phi_alpha(theta) - gamma)`` at ``(x, y + shift)``."""

    regime: Regime
    p: float
    alpha: float
    beta: float
    gamma: float
    delta_const: float
    delta_hat: float
    shift: float
    gamma_window: tuple[float, float]
    r0: float | None
    shrink_steps: int

    @property
    def scale(self) -> float:
        """Prefactor ``delta_hat^{1/(p-1)}``."""
        return self.delta_hat ** (1.0 / (self.p - 1.0))

    def as_dict(self) -> dict:
        return {
            "regime": self.regime.value, "p": self.p, "alpha": self.alpha, "beta": self.beta,
            "gamma": self.gamma, "delta": self.delta_const, "delta_hat": self.delta_hat,
            "shift": self.shift, "scale": self.scale, "gamma_window": list(self.gamma_window),
            "r0": self.r0, "shrink_steps": self.shrink_steps,
        }


@dataclass(frozen=True)
class VerificationSummary:
    n_points: int
    max_normalized_margin: float
    passed: bool


class Supersolution:
    """Evaluable field ``u~`` of a witness; ``M^-(D^2 u~) + u~^p <= 0`` where ``rho >= 1``."""

    def __init__(self, problem: ConeProblem, witness: SupersolutionWitness):
        self.problem = problem
        self.witness = witness
        self.profile = AngularProfile(ProfileKind.PHI_PLUS if witness.regime is Regime.SUBCRITICAL_LOW
                                      else ProfileKind.PHI_MINUS,
                                      problem.omega, witness.alpha, problem.theta0)

    def _base(self, rho, theta):
        """Value and Hessian eigenvalues of ``rho^beta (phi_alpha - gamma)``."""
        p, d1, d2 = self.profile.evaluate(theta)
        w = self.witness
        val = rho ** w.beta * (p - w.gamma)
        eigs = homogeneous_hessian_eigs(w.beta, p - w.gamma, d1, d2, rho, theta)
        return val, eigs

    def value_xy(self, x, y):
        """``u~(x, y)``, defined where ``(x, y + shift)`` lies in the closed cone."""
        rho, theta = np.hypot(x, y + self.witness.shift), np.arctan2(x, y + self.witness.shift)
        return self.witness.scale * self._base(rho, theta)[0]

    def inequality_margin(self, rho, theta):
        """``(M^-(D^2 u~) + u~^p)/scale`` at the polar point of the unshifted frame.

        Negative values mean the inequality holds strictly.
        """
        rho = np.asarray(rho, dtype=float)
        theta = np.asarray(theta, dtype=float)
        w = self.witness
        c = w.scale
        val, eigs = self._base(rho, theta)
        lhs = c * pucci_minus(eigs, self.problem.lam, self.problem.Lam)
        rhs = (c * val) ** w.p
        return (lhs + rhs) / (np.abs(lhs) + np.abs(rhs))

    def verify(self, n_points: int = VERIFY_POINTS, rho_max: float = VERIFY_RHO_MAX) -> VerificationSummary:
        """Check the inequality on a log-spaced rho in [1, rho_max] x uniform theta grid."""
        n_theta = max(2, int(round(math.sqrt(n_points / 1.25))))
        n_rho = max(2, int(math.ceil(n_points / n_theta)))
        rho = np.geomspace(1.0, rho_max, n_rho)
        theta = np.linspace(-self.problem.theta0, self.problem.theta0, n_theta)
        R, T = np.meshgrid(rho, theta)
        margin = np.asarray(self.inequality_margin(R.ravel()[:n_points], T.ravel()[:n_points]))
        worst = float(np.max(margin))
        return VerificationSummary(n_points=int(margin.size), max_normalized_margin=worst,
                                   passed=bool(np.all(np.isfinite(margin)) and worst <= -MARGIN_TOL))


def _a1(omega, x):
    return x - 1.0 + 1.0 / omega


def _a2(omega, x):
    return x - 1.0 + omega


def _theta_grid(theta0: float, n: int = R0_GRID) -> np.ndarray:
    return np.linspace(0.0, theta0, n)


def _supercritical_gamma_floor(problem: ConeProblem, prof: AngularProfile, alpha: float,
                               beta: float) -> tuple[float, float]:
    """Lower bound on gamma from the estimate with the ratio bound ``R >= R0``."""
    w = problem.omega
    f = prof.form
    X = np.asarray(invert_form(f, _theta_grid(problem.theta0)))
    X2 = X * X
    ratio = f.one_plus_tau(X) ** ((alpha - 2.0) / 2.0) / (1.0 + w * X2) ** (alpha / 2.0)
    r0 = R0_SAFETY * float(np.min(ratio))
    num = (w * (alpha * _a1(w, alpha) - beta * _a1(w, beta))
           - r0 * (alpha * _a2(w, alpha) - beta * _a2(w, beta)))
    return num / (beta * _a2(w, beta)), r0


def _subcritical_gamma_floor(problem: ConeProblem, prof: AngularProfile, beta: float,
                             delta: float) -> float:
    """Smallest gamma making ``F0(theta) + gamma c_beta >= delta`` on a grid.

    ``F0 = -M^-(D^2(rho^beta phi_alpha))`` and ``c_beta = M^-(D^2 rho^beta)``
    at ``rho = 1``; superadditivity of ``M^-`` bounds ``-M^-(D^2 u)`` below
    by their combination.
    """
    lam, Lam = problem.lam, problem.Lam
    theta = _theta_grid(problem.theta0)
    p, d1, d2 = prof.evaluate(theta)
    f0 = -pucci_minus(homogeneous_hessian_eigs(beta, p, d1, d2, 1.0, theta), lam, Lam)
    c_beta = pucci_minus(np.array([beta * (beta - 1.0), beta]), lam, Lam)
    return float(np.max((delta - f0) / c_beta))


def build_supersolution(problem: ConeProblem, p: float, tol: float = DEFAULT_TOL,
                        n_verify: int = VERIFY_POINTS) -> tuple[SupersolutionWitness, Supersolution]:
    """Construct a positive classical solution of ``M^-(D^2 u) + u^p <= 0`` for p outside the critical interval.

    ``u = rho^beta (phi_alpha - gamma)`` with ``alpha`` strictly between the
    relevant cone exponent and the admissible bound, ``beta`` started halfway
    between ``alpha`` and that bound and moved geometrically toward ``alpha``
    until the gamma window is nonempty and the inequality checks out on the
    verification grid.

    Raises
    ------
    DomainError
        If ``p`` lies in the closed critical interval.
    InfeasibleError
        If 60 shrink steps do not produce a valid witness.
    """
    p = float(p)
    w = problem.omega
    lo, hi = critical_interval(problem, tol)
    if lo <= p <= hi:
        raise DomainError(f"p={p!r} lies in the critical interval [{lo!r}, {hi!r}]: no positive supersolution")
    shift = 1.0 / math.sin(problem.theta0)
    lam = problem.lam
    if p > hi:
        regime = Regime.SUPERCRITICAL_HIGH
        a_m = alpha_minus(w, problem.theta0, tol)
        bound = min(1.0 - w, -2.0 / (p - 1.0))
        alpha = 0.5 * (a_m + bound)
        gap = 0.5 * (bound - alpha)
    else:
        regime = Regime.SUBCRITICAL_LOW
        a_p = alpha_plus(w, problem.theta0, tol)
        bound = max(1.0 - 1.0 / w, 2.0 / (1.0 - p))
        alpha = 0.5 * (a_p + bound)
        gap = -0.5 * (alpha - bound)
    kind = ProfileKind.PHI_MINUS if regime is Regime.SUPERCRITICAL_HIGH else ProfileKind.PHI_PLUS
    prof = AngularProfile(kind, w, alpha, problem.theta0)
    phi0 = float(prof(problem.theta0))
    x0 = float(invert_form(prof.form, problem.theta0))
    for step in range(MAX_SHRINK_STEPS):
        beta = alpha + gap
        delta = lam * w * (alpha * _a1(w, alpha) - beta * _a1(w, beta)) * (1.0 - x0) * (1.0 + x0)
        if regime is Regime.SUPERCRITICAL_HIGH:
            floor, r0 = _supercritical_gamma_floor(problem, prof, alpha, beta)
        else:
            floor, r0 = _subcritical_gamma_floor(problem, prof, beta, delta), None
        gap *= 0.5
        lo_g = max(floor, 0.0)
        if not (delta > 0.0 and lo_g < phi0):
            continue
        gamma = 0.5 * (lo_g + phi0)
        delta_hat = delta
        if regime is Regime.SUBCRITICAL_LOW and p < 0.0:
            delta_hat = delta * (phi0 - gamma) ** (-p)
        witness = SupersolutionWitness(
            regime=regime, p=p, alpha=alpha, beta=beta, gamma=gamma, delta_const=delta,
            delta_hat=delta_hat, shift=shift, gamma_window=(lo_g, phi0), r0=r0, shrink_steps=step,
        )
        sol = Supersolution(problem, witness)
        if sol.verify(n_verify).passed:
            return witness, sol
    raise InfeasibleError(
        f"no supersolution parameters found after {MAX_SHRINK_STEPS} shrink steps (p={p!r} is too close "
        "to an endpoint of the critical interval for float64 margins)"
    )


# --------------------------------------------------------------------------- #
# verification suites
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class Check:
    name: str
    value: float
    tolerance: float
    passed: bool


@dataclass
class SuiteReport:
    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, value: float, tolerance: float, passed: bool | None = None) -> None:
        ok = value <= tolerance if passed is None else passed
        self.checks.append(Check(name, float(value), float(tolerance), bool(ok)))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed,
                "checks": [c.__dict__ for c in self.checks]}


def halfplane_lower_expression(omega: float) -> float:
    """Closed form of ``g_w(1 - 2w)``, which is ``<= pi/2``."""
    k = 2.0 * omega * omega - 1.0
    return -math.atan(math.sqrt(omega)) + (2.0 * omega + 1.0) / math.sqrt(k) * math.atan(math.sqrt(k / omega))


def halfplane_upper_expression(omega: float) -> float:
    """Closed form of ``g_w(-w)``, which is ``>= pi/2``."""
    k = omega * omega + omega - 1.0
    return -math.atan(math.sqrt(omega)) + math.sqrt(omega) * (2.0 + omega) / math.sqrt(k) * math.atan(math.sqrt(k))


def bound_suite(omega: float, n_theta: int = 500, tol: float = 1e-9) -> SuiteReport:
    """Exponent bounds at the half plane and the global lower bound on ``a+``.

    The two transcendental inequalities hold with equality exactly at w = 1;
    the report records their margins and whether equality was detected.
    """
    omega = sf.check_omega(omega)
    rep = SuiteReport(f"bounds(omega={omega:g})")
    low, up = halfplane_lower_expression(omega), halfplane_upper_expression(omega)
    rep.add("lower_expression_le_half_pi", low - HALF_PI, tol)
    rep.add("upper_expression_ge_half_pi", HALF_PI - up, tol)
    rep.add("lower_expression_matches_g", abs(low - sf.eval_g(omega, 1.0 - 2.0 * omega)), 1e-12)
    rep.add("upper_expression_matches_g", abs(up - sf.eval_g(omega, -omega)), 1e-12)
    a_m = alpha_minus(omega, HALF_PI)
    rep.add("alpha_minus_ge_1_minus_2omega", (1.0 - 2.0 * omega) - a_m, tol)
    rep.add("alpha_minus_le_minus_omega", a_m + omega, tol)
    equality = abs(low - HALF_PI) < tol and abs(up - HALF_PI) < tol
    rep.add("equality_iff_omega_one", float(equality), 0.0, passed=equality == (omega - 1.0 < sf.OMEGA_ONE_TOL))
    theta = np.linspace(0.0, math.pi, n_theta + 2)[1:-1]
    floor = omega / (omega + 1.0)
    margin = min(alpha_plus(omega, t) - floor for t in theta)
    rep.add("alpha_plus_ge_omega_over_omega_plus_1", -margin, tol)
    return rep


def functional_identity_errors(omega: float, n: int = 100, seed: int = 0) -> dict[str, float]:
    """Max errors of the three g/h reflection identities on random exponents."""
    omega = sf.check_omega(omega)
    rng = np.random.default_rng(seed)
    lo = 1.0 - 1.0 / omega
    errs = {}
    a = lo + (1.0 - lo) * rng.uniform(0.01, 0.99, n)
    errs["g(a) - g(a/(a-1)) = pi/2"] = max(abs(sf.eval_g(omega, x) - sf.eval_g(omega, x / (x - 1.0)) - HALF_PI) for x in a)
    a = rng.uniform(0.01, 0.99, n)
    errs["h(a) - h(a/(a-1)) = pi/2"] = max(abs(sf.eval_h(omega, x) - sf.eval_h(omega, x / (x - 1.0)) - HALF_PI) for x in a)
    a = 1.0 + np.exp(rng.uniform(math.log(1e-2), math.log(1e2), n))
    errs["h(a) + g(a/(a-1)) = pi/2"] = max(abs(sf.eval_h(omega, x) + sf.eval_g(omega, x / (x - 1.0)) - HALF_PI) for x in a)
    return errs


def exponent_relation_errors(omega: float, n: int = 100, seed: int = 0,
                             tol: float = DEFAULT_TOL) -> dict[str, float]:
    """Max errors of the three exponent relations for random ``theta0`` in (0, pi/2)."""
    omega = sf.check_omega(omega)
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.02, HALF_PI - 0.02, n)
    errs = {"a+(t+pi/2) = a-/(a--1)": 0.0, "b+(t+pi/2) = b-/(b--1)": 0.0, "b+(pi/2-t) = a+/(a+-1)": 0.0}
    for t in theta:
        am = alpha_minus(omega, t, tol)
        bm = beta_minus(omega, t, tol)
        ap = alpha_plus(omega, t, tol)
        errs["a+(t+pi/2) = a-/(a--1)"] = max(errs["a+(t+pi/2) = a-/(a--1)"],
                                             abs(alpha_plus(omega, t + HALF_PI, tol) - am / (am - 1.0)))
        errs["b+(t+pi/2) = b-/(b--1)"] = max(errs["b+(t+pi/2) = b-/(b--1)"],
                                             abs(beta_plus(omega, t + HALF_PI, tol) - bm / (bm - 1.0)))
        errs["b+(pi/2-t) = a+/(a+-1)"] = max(errs["b+(pi/2-t) = a+/(a+-1)"],
                                             abs(beta_plus(omega, HALF_PI - t, tol) - ap / (ap - 1.0)))
    return errs


def identity_suite(omega: float, n: int = 100, seed: int = 0) -> SuiteReport:
    rep = SuiteReport(f"identities(omega={omega:g})")
    for name, err in exponent_relation_errors(omega, n, seed).items():
        rep.add(name, err, 1e-9)
    for name, err in functional_identity_errors(omega, n, seed).items():
        rep.add(name, err, 1e-10)
    return rep


def residual_suite(problem: ConeProblem, n_points: int = 100, seed: int = 0) -> SuiteReport:
    """Normalized ``M^-`` residual of all four solutions at random interior points."""
    rng = np.random.default_rng(seed)
    rep = SuiteReport(f"residuals(omega={problem.omega:g}, theta0={problem.theta0:g})")
    rho = np.exp(rng.uniform(-2.0, 2.0, n_points))
    theta = problem.theta0 * (1.0 - BOUNDARY_MARGIN) * rng.uniform(-1.0, 1.0, n_points)
    for kind in ProfileKind:
        sol = HomogeneousSolution(problem, kind)
        eigs = sol.hessian_eigs(rho, theta)
        scale = np.abs(eigs).sum(axis=-1)
        res = np.abs(sol.residual(rho, theta)) / np.where(scale > 0.0, scale, 1.0)
        rep.add(f"{kind.value} max normalized residual", float(np.max(res)), 1e-8)
    return rep


def monotonicity_suite(problem: ConeProblem, radii: Sequence[float] = (0.5, 1.0, 2.0, 4.0, 8.0),
                       tol: float = REFINE_TOL) -> SuiteReport:
    """Monotonicity of the scaled infima for ``u = u_{a+} + u_{a-}``."""
    up = HomogeneousSolution(problem, ProfileKind.PHI_PLUS)
    um = HomogeneousSolution(problem, ProfileKind.PHI_MINUS)
    report = monotonicity_report(lambda r, t: up(r, t) + um(r, t), problem, radii)
    rep = SuiteReport(f"monotonicity(omega={problem.omega:g}, theta0={problem.theta0:g})")
    rep.add("scaled_plus non-increasing", report.plus_violation, tol)
    rep.add("scaled_minus non-decreasing", report.minus_violation, tol)
    return rep


__all__ = [
    "BOUNDARY_MARGIN", "Check", "LiouvilleVerdict", "MonotonicityReport", "Regime", "SuiteReport",
    "Supersolution", "SupersolutionWitness", "VerificationSummary", "bound_suite", "build_supersolution",
    "critical_interval", "exponent_relation_errors", "functional_identity_errors", "identity_suite",
    "halfplane_lower_expression", "halfplane_upper_expression", "liouville_classify", "monotonicity_report",
    "monotonicity_suite", "residual_suite",
]
