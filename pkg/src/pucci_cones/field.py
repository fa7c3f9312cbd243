"""Hessian eigenvalues, Pucci operators and full homogeneous solutions."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, RangeError, SingularityError
from .exponents import DEFAULT_TOL, ConeProblem
from .profiles import AngularProfile, ProfileKind, make_profile


@dataclass(frozen=True)
class SymMatrix2:
    a11: float
    a12: float
    a22: float

    @classmethod
    def from_array(cls, m) -> "SymMatrix2":
        m = np.asarray(m, dtype=float)
        if m.shape != (2, 2):
            raise DimensionError(f"expected a 2x2 matrix, got shape {m.shape}")
        return cls(float(m[0, 0]), 0.5 * float(m[0, 1] + m[1, 0]), float(m[1, 1]))

    def to_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a12, self.a22]])

    def eigenvalues(self) -> tuple[float, float]:
        """Closed-form eigenvalues, largest first."""
        mean = 0.5 * (self.a11 + self.a22)
        rad = math.hypot(0.5 * (self.a11 - self.a22), self.a12)
        return mean + rad, mean - rad


@dataclass(frozen=True)
class RankTwoUpdateSpec:
    """``A = a v(x)v + b w(x)w + c (v(x)w + w(x)v) + d I`` for unit vectors v, w."""

    v: tuple[float, ...]
    w: tuple[float, ...]
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        v = np.asarray(self.v, dtype=float).ravel()
        w = np.asarray(self.w, dtype=float).ravel()
        if v.shape != w.shape:
            raise DimensionError(f"v and w have different lengths ({v.size} and {w.size})")
        if v.size < 2:
            raise DimensionError("dimension must be at least 2")
        for name, vec in (("v", v), ("w", w)):
            if abs(np.linalg.norm(vec) - 1.0) > 1e-12:
                raise ValueError(f"{name} must be a unit vector")
        object.__setattr__(self, "v", tuple(v))
        object.__setattr__(self, "w", tuple(w))

    @property
    def n(self) -> int:
        return len(self.v)

    def matrix(self) -> np.ndarray:
        v, w = np.asarray(self.v), np.asarray(self.w)
        return (self.a * np.outer(v, v) + self.b * np.outer(w, w)
                + self.c * (np.outer(v, w) + np.outer(w, v)) + self.d * np.eye(self.n))


def rank_two_update_eigs(spec: RankTwoUpdateSpec, degenerate_tol: float = 1e-14) -> np.ndarray:
    """Eigenvalues of a rank-two symmetric update of a multiple of the identity.

    Returns the full multiset (length n), sorted ascending.  ``d`` appears
    with multiplicity n-2 and the two remaining values are

        d + (a + b + 2c v.w +- sqrt((a+b+2c v.w)^2 + 4(1-(v.w)^2)(c^2-ab)))/2

    which collapse to ``d`` (multiplicity n-1) and ``d + a + b + 2c v.w`` when
    ``c^2 = ab`` or ``(v.w)^2 = 1``.
    """
    vw = float(np.dot(spec.v, spec.w))
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    trace_part = a + b + 2.0 * c * vw
    scale = max(abs(a), abs(b), abs(c), 1e-300)
    if abs(c * c - a * b) <= degenerate_tol * scale * scale or abs(1.0 - vw * vw) <= degenerate_tol:
        simple = [d + trace_part]
        rest = [d] * (spec.n - 1)
    else:
        disc = trace_part ** 2 + 4.0 * (1.0 - vw * vw) * (c * c - a * b)
        root = math.sqrt(max(disc, 0.0))
        simple = [d + 0.5 * (trace_part + root), d + 0.5 * (trace_part - root)]
        rest = [d] * (spec.n - 2)
    return np.sort(np.array(simple + rest))


def homogeneous_hessian_eigs(alpha, phi, phi_d1, phi_d2, rho, theta, n: int = 2) -> np.ndarray:
    """Hessian eigenvalues of ``rho^alpha phi(theta)``, theta measured from the axis.

    The two simple eigenvalues are

        rho^(alpha-2)/2 (alpha^2 phi + phi'' +- sqrt((alpha(alpha-2)phi - phi'')^2 + 4(alpha-1)^2 phi'^2))

    and, for n >= 3, ``rho^(alpha-2)(alpha phi + phi'/tan theta)`` with
    multiplicity n-2.  Inputs broadcast; eigenvalues are stacked on the
    last axis in descending order.
    """
    if n < 2:
        raise DimensionError("n must be at least 2")
    alpha = np.asarray(alpha, dtype=float)
    phi, phi_d1, phi_d2 = (np.asarray(t, dtype=float) for t in (phi, phi_d1, phi_d2))
    rho, theta = np.asarray(rho, dtype=float), np.asarray(theta, dtype=float)
    if np.any(rho <= 0.0):
        raise RangeError("rho must be positive")
    scale = rho ** (alpha - 2.0)
    root = np.sqrt((alpha * (alpha - 2.0) * phi - phi_d2) ** 2 + 4.0 * (alpha - 1.0) ** 2 * phi_d1 ** 2)
    mean = alpha * alpha * phi + phi_d2
    big = 0.5 * scale * (mean + root)
    small = 0.5 * scale * (mean - root)
    if n == 2:
        return np.stack([big, small], axis=-1)
    at_axis = np.sin(theta) == 0.0
    if np.any(at_axis & (phi_d1 != 0.0)):
        raise SingularityError("phi'(0) must vanish for the axis eigenvalue")
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(at_axis, phi_d2, phi_d1 / np.tan(theta))
    mult = scale * (alpha * phi + ratio)
    eigs = np.stack([big, small] + [mult] * (n - 2), axis=-1)
    return -np.sort(-eigs, axis=-1)


class PucciSign(enum.Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class PucciOperator:
    lam: float
    Lam: float
    sign: PucciSign = PucciSign.MINUS

    def __post_init__(self):
        if not 0.0 < self.lam <= self.Lam:
            raise ValueError("need 0 < lambda <= Lambda")

    def __call__(self, eigs):
        return pucci_apply(self, eigs)


def pucci_apply(op: PucciOperator, eigs):
    """Apply ``M^+`` or ``M^-`` to eigenvalues stacked on the last axis."""
    e = np.asarray(eigs, dtype=float)
    pos = np.where(e > 0.0, e, 0.0).sum(axis=-1)
    neg = np.where(e < 0.0, e, 0.0).sum(axis=-1)
    if op.sign is PucciSign.PLUS:
        out = op.Lam * pos + op.lam * neg
    else:
        out = op.lam * pos + op.Lam * neg
    return float(out) if np.ndim(out) == 0 else out


def pucci_minus(eigs, lam: float, Lam: float):
    return pucci_apply(PucciOperator(lam, Lam, PucciSign.MINUS), eigs)


def pucci_plus(eigs, lam: float, Lam: float):
    return pucci_apply(PucciOperator(lam, Lam, PucciSign.PLUS), eigs)


def finite_difference_hessian(func, x, y, h=None) -> np.ndarray:
    """Central-difference Cartesian Hessian of ``func(x, y)``; returns (..., 2, 2).

    Default step ``1e-5 * max(1, rho)``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if h is None:
        h = 1e-5 * np.maximum(1.0, np.hypot(x, y))
    f0 = func(x, y)
    fxx = (func(x + h, y) - 2.0 * f0 + func(x - h, y)) / (h * h)
    fyy = (func(x, y + h) - 2.0 * f0 + func(x, y - h)) / (h * h)
    fxy = (func(x + h, y + h) - func(x + h, y - h) - func(x - h, y + h) + func(x - h, y - h)) / (4.0 * h * h)
    return np.stack([np.stack([fxx, fxy], -1), np.stack([fxy, fyy], -1)], -2)


def polar_to_cartesian(rho, theta):
    """Polar angle measured from the positive y-axis, positive toward +x."""
    return rho * np.sin(theta), rho * np.cos(theta)


def cartesian_to_polar(x, y):
    return np.hypot(x, y), np.arctan2(x, y)


@dataclass(frozen=True)
class FieldSample:
    rho: float
    theta: float
    value: float
    gradient: tuple[float, float]
    hess_eigs: tuple[float, float]
    pucci_minus: float
    pucci_plus: float

    @property
    def normalized_residual(self) -> float:
        scale = abs(self.hess_eigs[0]) + abs(self.hess_eigs[1])
        return abs(self.pucci_minus) / scale if scale > 0 else abs(self.pucci_minus)


class HomogeneousSolution:
    """``u = rho^alpha phi(theta)`` or ``v = -rho^beta psi(theta)`` for a cone problem."""

    def __init__(self, problem: ConeProblem, kind: ProfileKind | str, tol: float = DEFAULT_TOL,
                 profile: AngularProfile | None = None):
        self.problem = problem
        self.profile = profile if profile is not None else make_profile(problem, kind, tol)
        self.kind = self.profile.kind
        self.exponent = self.profile.exponent
        self.sign = self.kind.solution_sign

    def _check(self, rho, theta):
        rho = np.asarray(rho, dtype=float)
        theta = np.asarray(theta, dtype=float)
        if np.any(rho <= 0.0) or np.any(np.abs(theta) > self.problem.theta0 * (1.0 + 1e-12)):
            raise RangeError("point lies outside the closed cone (need rho > 0, |theta| <= theta0)")
        return rho, theta

    def value(self, rho, theta):
        rho, theta = self._check(rho, theta)
        return self.sign * rho ** self.exponent * self.profile(theta)

    def __call__(self, rho, theta):
        return self.value(rho, theta)

    def value_xy(self, x, y):
        rho, theta = cartesian_to_polar(np.asarray(x, float), np.asarray(y, float))
        return self.value(rho, theta)

    def gradient(self, rho, theta):
        rho, theta = self._check(rho, theta)
        p, d1, _ = self.profile.evaluate(theta)
        e = self.exponent
        radial = self.sign * e * rho ** (e - 1.0) * p
        angular = self.sign * rho ** (e - 1.0) * d1
        gx = radial * np.sin(theta) + angular * np.cos(theta)
        gy = radial * np.cos(theta) - angular * np.sin(theta)
        return np.stack([gx, gy], axis=-1)

    def hessian_eigs(self, rho, theta) -> np.ndarray:
        """Analytic eigenvalues (descending) of the Hessian of the solution."""
        rho, theta = self._check(rho, theta)
        p, d1, d2 = self.profile.evaluate(theta)
        eigs = homogeneous_hessian_eigs(self.exponent, p, d1, d2, rho, theta)
        if self.sign < 0:
            eigs = -eigs[..., ::-1]
        return eigs

    def fd_hessian_eigs(self, rho, theta, h=None) -> np.ndarray:
        """Eigenvalues (descending) of a central-difference Hessian; test oracle path.

        Raises RangeError when the stencil would leave the closed cone.
        """
        rho, theta = self._check(rho, theta)
        x, y = polar_to_cartesian(rho, theta)
        step = 1e-5 * np.maximum(1.0, rho) if h is None else h
        if np.any(np.abs(theta) + 2.0 * step / rho > self.problem.theta0):
            raise RangeError("finite-difference stencil leaves the cone; use interior points")
        hess = finite_difference_hessian(self.value_xy, x, y, step)
        return np.linalg.eigvalsh(hess)[..., ::-1]

    def residual(self, rho, theta):
        """``M^-_{lam,Lam}(D^2 w)`` of the solution (zero inside the cone)."""
        return pucci_minus(self.hessian_eigs(rho, theta), self.problem.lam, self.problem.Lam)

    def sample(self, rho: float, theta: float) -> FieldSample:
        eigs = self.hessian_eigs(rho, theta)
        grad = self.gradient(rho, theta)
        lam, Lam = self.problem.lam, self.problem.Lam
        m_minus = pucci_minus(eigs, lam, Lam)
        # M^+ of the reflected solution -w, equal to -M^-(D^2 w)
        m_plus = pucci_plus(-eigs[::-1], lam, Lam)
        return FieldSample(
            rho=float(rho), theta=float(theta), value=float(self.value(rho, theta)),
            gradient=(float(grad[0]), float(grad[1])),
            hess_eigs=(float(eigs[0]), float(eigs[1])),
            pucci_minus=float(m_minus), pucci_plus=float(m_plus),
        )


def sample_solution(problem: ConeProblem, kind: ProfileKind | str, point: tuple[float, float]) -> FieldSample:
    """Sample the homogeneous solution of ``kind`` at the polar ``point = (rho, theta)``."""
    return HomogeneousSolution(problem, kind).sample(*point)
