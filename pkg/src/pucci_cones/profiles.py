"""Angular profiles phi_{alpha+-}, psi_{beta+-} with two theta-derivatives.

With ``X = F^{-1}(|theta|)`` (``F`` the G- or H-branch of the exponent),
every profile has the shape

    p(theta) = (1 - X^2) (1 + s X^2)^{(e-2)/2} (1 + c^2 X^2)^{-e/2}

where ``(c^2, s)`` are the quadratic factors of the same branch of ``F``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import special_functions as sf
from .errors import RangeError
from .exponents import DEFAULT_TOL, ConeProblem, alpha_minus, alpha_plus, beta_minus, beta_plus, invert_form


class ProfileKind(enum.Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"

    @property
    def family(self) -> str:
        return "G" if self in (ProfileKind.PHI_PLUS, ProfileKind.PHI_MINUS) else "H"

    @property
    def solution_sign(self) -> float:
        """+1 for ``u = rho^a phi``, -1 for ``v = -rho^b psi``."""
        return 1.0 if self.family == "G" else -1.0

    @classmethod
    def parse(cls, text: str) -> "ProfileKind":
        key = text.strip().lower().replace("_", "").replace("plus", "+").replace("minus", "-")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown profile kind {text!r}; expected one of phi+, phi-, psi+, psi-")


_SOLVERS = {
    ProfileKind.PHI_PLUS: alpha_plus,
    ProfileKind.PHI_MINUS: alpha_minus,
    ProfileKind.PSI_PLUS: beta_plus,
    ProfileKind.PSI_MINUS: beta_minus,
}


@dataclass(frozen=True)
class AngularProfile:
    """Profile of homogeneity ``exponent``, evaluable on ``|theta| <= theta0``.

    ``exponent`` need not be the one solving the cone problem (the
    Liouville supersolutions use nearby exponents); the profile then stays
    positive on ``|theta| < F(1)`` and ``theta0`` only fixes the evaluation
    range.
    """

    kind: ProfileKind
    omega: float
    exponent: float
    theta0: float
    halfplane_branch: bool = False
    form: sf.BranchForm = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "form", sf.form(self.omega, self.exponent, self.kind.family))

    @property
    def support(self) -> float:
        """Angle where the profile vanishes, ``g_w(e)`` or ``h_w(e)``."""
        return float(sf.eval_form(self.form, 1.0))

    def _abscissa(self, theta):
        th = np.abs(np.asarray(theta, dtype=float))
        if np.any(~np.isfinite(th)) or np.any(th > self.theta0 * (1.0 + 1e-12)):
            raise RangeError(f"|theta| must not exceed theta0 = {self.theta0!r}")
        return invert_form(self.form, np.minimum(th, self.support), tol=1e-15, complement=True)

    def evaluate(self, theta):
        """Return ``(p, p', p'')`` at ``theta`` (scalars or arrays)."""
        theta_arr = np.asarray(theta, dtype=float)
        X, T = (np.asarray(a, dtype=float) for a in self._abscissa(theta_arr))
        e = self.exponent
        f = self.form
        c2, s = f.c2, f.s
        X2 = X * X
        q_s = f.one_plus_tau(X, T)       # 1 + s X^2, accurately
        q_c = 1.0 + c2 * X2
        one_minus = T * (2.0 - T)
        # (1 + s X^2)^{(e-2)/2} (1 + c^2 X^2)^{-e/2}; direct powers keep ~1 ulp,
        # log space only where they over/underflow
        with np.errstate(over="ignore", under="ignore", divide="ignore", invalid="ignore"):
            bc = np.power(q_s, 0.5 * (e - 2.0)) * np.power(q_c, -0.5 * e)
            ok = np.isfinite(bc) & (bc > 0.0)
            if not np.all(ok):
                bc = np.where(ok, bc, np.exp(0.5 * (e - 2.0) * np.log(q_s) - 0.5 * e * np.log1p(c2 * X2)))
        b1 = (e - 2.0) * s * X / q_s
        c1 = -e * c2 * X / q_c
        b1p = (e - 2.0) * s * (1.0 - s * X2) / (q_s * q_s)
        c1p = -e * c2 * (1.0 - c2 * X2) / (q_c * q_c)
        p = one_minus * bc
        p_x = -2.0 * X * bc + one_minus * bc * (b1 + c1)
        p_xx = (-2.0 * bc - 4.0 * X * bc * (b1 + c1)
                + one_minus * bc * ((b1 + c1) ** 2 + b1p + c1p))
        # chain rule through theta = F(X)
        F1 = np.asarray(sf.eval_form_d1(f, X, T))
        F2 = np.asarray(sf.eval_form_d2(f, X, T))
        d1 = p_x / F1
        d2 = p_xx / (F1 * F1) - p_x * F2 / F1 ** 3
        d1 = np.where(theta_arr < 0.0, -d1, d1)
        if theta_arr.ndim == 0:
            return float(p), float(d1), float(d2)
        return p, d1, d2

    def __call__(self, theta):
        return self.evaluate(theta)[0]

    def d1(self, theta):
        return self.evaluate(theta)[1]

    def d2(self, theta):
        return self.evaluate(theta)[2]


def make_profile(problem: ConeProblem, kind: ProfileKind | str, tol: float = DEFAULT_TOL) -> AngularProfile:
    """Profile of the cone problem's homogeneous solution of the given kind."""
    if isinstance(kind, str):
        kind = ProfileKind.parse(kind)
    exponent = _SOLVERS[kind](problem.omega, problem.theta0, tol)
    return AngularProfile(kind, problem.omega, exponent, problem.theta0,
                          halfplane_branch=problem.theta0 > 0.5 * math.pi)


def eval_profile(p: AngularProfile, theta):
    return p.evaluate(theta)[0]


def eval_profile_d1(p: AngularProfile, theta):
    return p.evaluate(theta)[1]


def eval_profile_d2(p: AngularProfile, theta):
    return p.evaluate(theta)[2]


def phi_plus_closed_derivatives(omega: float, alpha: float, X):
    """First and second theta-derivatives of phi_{alpha+} written out explicitly.

    Valid on the ``alpha >= 1`` branch (cones with ``theta0 <= pi/2``).  Used
    as an independent cross-check of the chain-rule derivatives in
    :meth:`AngularProfile.evaluate`.
    """
    X = np.asarray(X, dtype=float)
    a1 = alpha - 1.0 + 1.0 / omega
    a2 = alpha - 1.0 + omega
    r = omega * a1 / a2
    X2 = X * X
    common = (1.0 + r * X2) ** ((alpha - 2.0) / 2.0) / (1.0 + omega * X2) ** (alpha / 2.0)
    d1 = -alpha * (omega + 1.0) / math.sqrt(omega) * common * X
    d2 = -alpha * a2 / omega * common * (1.0 - omega * omega * a1 / a2 * X2)
    return d1, d2


def ode_residual(omega: float, alpha: float, phi, d1, d2, dual: bool = False):
    """Residual of the autonomous profile ODE.

    ``phi'' + a(a + g/2 (a-1)) phi - |a-1| sqrt(g) sqrt(a^2 (1 + g/4) phi^2 + phi'^2)``
    with ``g = (w-1)^2/w``, satisfied by the phi-profiles.  The psi-profiles
    solve the M^+ problem and satisfy the same equation with the square-root
    term added instead (``dual=True``).
    """
    gam = (omega - 1.0) ** 2 / omega
    sgn = -1.0 if dual else 1.0
    return (d2 + alpha * (alpha + 0.5 * gam * (alpha - 1.0)) * phi
            - sgn * abs(alpha - 1.0) * math.sqrt(gam)
            * np.sqrt(alpha * alpha * (1.0 + 0.25 * gam) * phi * phi + d1 * d1))
