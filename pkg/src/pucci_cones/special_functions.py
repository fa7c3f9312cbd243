"""Piecewise arctan/arctanh functions g, G, h, H and their x-derivatives.

Every branch of the four functions has the common shape

    F(x) = sign * arctan(c x) + coef * x * S(s x^2)

with ``S(t) = arctan(sqrt t)/sqrt t`` for ``t > 0``, ``arctanh(sqrt -t)/sqrt -t``
for ``t < 0`` and ``S(0) = 1``.  Writing the transcendental part this way
removes the 0/0 that the textbook form ``(2 - a)/sqrt(P) * arctan(sqrt(Q) x)``
develops where ``P`` and ``Q`` vanish together (the arctan/arctanh junctions
of h at ``a = 1 - 1/w`` and ``a = 1 - w``), and makes those junctions
continuous by construction.

Two coefficient families appear, with ``a1 = a - 1 + 1/w`` and ``a2 = a - 1 + w``:

* family A: ``s = w a1 / a2``,   ``coef = (2 - a) sqrt(w) / |a2|``
* family B: ``s = a2 / (w a1)``, ``coef = (2 - a) / (sqrt(w) |a1|)``
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError

# below this |w - 1| the closed forms for w = 1 are used
OMEGA_ONE_TOL = 1e-12
# |s x^2| below which S is summed as a power series
_SERIES_TOL = 1e-3
_SERIES_TERMS = 8


class GBranch(enum.Enum):
    ALPHA_GE1 = "alpha>=1"
    ALPHA_MID = "1-1/w<alpha<1"
    ALPHA_LOW = "alpha<1-w"


class HBranch(enum.Enum):
    ALPHA_GE1 = "alpha>=1"
    ALPHA_MID = "1-1/w<alpha<1"
    ALPHA_SMALL_POS = "0<alpha<=1-1/w"
    ALPHA_SMALL_NEG = "1-w<=alpha<0"
    ALPHA_LOW = "alpha<1-w"


@dataclass(frozen=True)
class BranchForm:
    """Coefficients of one branch, ``F(x) = sign*atan(c x) + coef*x*S(s x^2)``.

    ``c2`` and ``s`` are also the two quadratic factors of the angular
    profile built on ``F^{-1}``.  ``1 + s x^2`` is kept as
    ``(_p + _q x^2)/_p``; near ``x = 1`` it is evaluated through
    ``_p + _q = _k = alpha (1 + w)`` to avoid cancellation when the exponent
    is close to 0 (where ``1 + s`` itself is small).
    """

    sign: float
    c: float
    coef: float
    s: float
    _p: float
    _q: float
    _k: float

    @property
    def c2(self) -> float:
        return self.c * self.c

    def one_plus_tau(self, x, t=None):
        """``1 + s x^2``; pass ``t = 1 - x`` when it is known more accurately than ``x``."""
        x = np.asarray(x, dtype=float)
        t = 1.0 - x if t is None else np.asarray(t, dtype=float)
        near = (self._k - self._q * t * (2.0 - t)) / self._p
        far = (self._p + self._q * x * x) / self._p
        return np.where(x * x > 0.5, near, far)


def check_omega(omega: float) -> float:
    omega = float(omega)
    if not math.isfinite(omega) or omega < 1.0:
        raise DomainError(f"ellipticity ratio omega must be finite and >= 1, got {omega!r}")
    return omega


def _is_laplacian(omega: float) -> bool:
    return omega - 1.0 < OMEGA_ONE_TOL


def g_branch(omega: float, alpha: float) -> GBranch:
    omega = check_omega(omega)
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError(f"exponent must be finite, got {alpha!r}")
    if _is_laplacian(omega):
        if alpha == 0.0:
            raise DomainError("g_1 is undefined at alpha = 0")
        if alpha >= 1.0:
            return GBranch.ALPHA_GE1
        return GBranch.ALPHA_MID if alpha > 0.0 else GBranch.ALPHA_LOW
    if alpha >= 1.0:
        return GBranch.ALPHA_GE1
    if alpha > 1.0 - 1.0 / omega:
        return GBranch.ALPHA_MID
    if alpha < 1.0 - omega:
        return GBranch.ALPHA_LOW
    raise DomainError(
        f"alpha={alpha!r} lies in the gap [1-w, 1-1/w] = [{1.0 - omega!r}, {1.0 - 1.0 / omega!r}] "
        f"where g_w is undefined (w={omega!r})"
    )


def h_branch(omega: float, alpha: float) -> HBranch:
    omega = check_omega(omega)
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError(f"exponent must be finite, got {alpha!r}")
    if alpha == 0.0:
        raise DomainError("h_w diverges at alpha = 0")
    if alpha >= 1.0:
        return HBranch.ALPHA_GE1
    lo, hi = 1.0 - omega, 1.0 - 1.0 / omega
    if alpha > 0.0:
        return HBranch.ALPHA_MID if alpha > hi else HBranch.ALPHA_SMALL_POS
    return HBranch.ALPHA_SMALL_NEG if alpha >= lo else HBranch.ALPHA_LOW


def _family_a(omega: float, alpha: float) -> tuple[float, float, float, float, float]:
    a1 = alpha - 1.0 + 1.0 / omega
    a2 = alpha - 1.0 + omega
    coef = (2.0 - alpha) * math.sqrt(omega) / abs(a2)
    return coef, omega * a1 / a2, a2, omega * a1, alpha * (1.0 + omega)


def _family_b(omega: float, alpha: float) -> tuple[float, float, float, float, float]:
    a1 = alpha - 1.0 + 1.0 / omega
    a2 = alpha - 1.0 + omega
    coef = (2.0 - alpha) / (math.sqrt(omega) * abs(a1))
    return coef, a2 / (omega * a1), omega * a1, a2, alpha * (1.0 + omega)


def _laplacian_form(alpha: float) -> BranchForm:
    # G_{1,a}(x) = 2 arctan(x)/|a|
    return BranchForm(0.0, 1.0, 2.0 / abs(alpha), 1.0, 1.0, 1.0, 2.0)


def g_form(omega: float, alpha: float) -> BranchForm:
    """Branch coefficients of ``G_{w,alpha}`` (and hence of ``g_w``)."""
    branch = g_branch(omega, alpha)
    omega, alpha = float(omega), float(alpha)
    if _is_laplacian(omega):
        return _laplacian_form(alpha)
    rw = math.sqrt(omega)
    if branch is GBranch.ALPHA_GE1:
        return BranchForm(1.0, rw, *_family_a(omega, alpha))
    if branch is GBranch.ALPHA_MID:
        return BranchForm(1.0, 1.0 / rw, *_family_b(omega, alpha))
    return BranchForm(-1.0, rw, *_family_a(omega, alpha))


def h_form(omega: float, alpha: float) -> BranchForm:
    """Branch coefficients of ``H_{w,alpha}`` (and hence of ``h_w``).

    The five branches collapse to three shapes: ``alpha >= 1`` (family B,
    leading ``atan(x/sqrt w)``), ``0 < alpha < 1`` (family A, leading
    ``atan(sqrt(w) x)``; arctan for ``alpha > 1-1/w``, arctanh below) and
    ``alpha < 0`` (family B, leading ``-atan(x/sqrt w)``; arctanh for
    ``alpha >= 1-w``, arctan below).
    """
    branch = h_branch(omega, alpha)
    omega, alpha = float(omega), float(alpha)
    if _is_laplacian(omega):
        return _laplacian_form(alpha)
    rw = math.sqrt(omega)
    if branch is HBranch.ALPHA_GE1:
        return BranchForm(1.0, 1.0 / rw, *_family_b(omega, alpha))
    if branch in (HBranch.ALPHA_MID, HBranch.ALPHA_SMALL_POS):
        return BranchForm(1.0, rw, *_family_a(omega, alpha))
    return BranchForm(-1.0, 1.0 / rw, *_family_b(omega, alpha))


def form(omega: float, alpha: float, family: str) -> BranchForm:
    if family == "G":
        return g_form(omega, alpha)
    if family == "H":
        return h_form(omega, alpha)
    raise ValueError(f"family must be 'G' or 'H', got {family!r}")


def _s_ratio(tau, one_plus_tau):
    """``arctan(sqrt t)/sqrt t`` continued through ``t = 0`` to arctanh."""
    tau = np.asarray(tau, dtype=float)
    one_plus_tau = np.asarray(one_plus_tau, dtype=float)
    if np.any(one_plus_tau <= 0.0):
        raise DomainError("arctanh argument reached 1: the function diverges here")
    out = np.empty_like(tau)
    small = np.abs(tau) < _SERIES_TOL
    if np.any(small):
        t = tau[small]
        acc = np.zeros_like(t)
        for k in reversed(range(_SERIES_TERMS)):
            acc = 1.0 / (2 * k + 1) - t * acc
        out[small] = acc
    pos = (~small) & (tau > 0)
    if np.any(pos):
        r = np.sqrt(tau[pos])
        out[pos] = np.arctan(r) / r
    neg = (~small) & (tau < 0)
    if np.any(neg):
        r = np.sqrt(-tau[neg])
        # atanh(r) = log1p(r) - log(1 - r^2)/2, with 1 - r^2 = 1 + tau exact
        out[neg] = (np.log1p(r) - 0.5 * np.log(one_plus_tau[neg])) / r
    return out


def _check_x(x):
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise RangeError("abscissa x must lie in [0, 1]")
    return arr


def _unwrap(x, value):
    return float(value) if np.ndim(x) == 0 else value


def eval_form(f: BranchForm, x, t=None):
    """``F(x)``; the optional ``t = 1 - x`` sharpens the result near ``x = 1``."""
    arr = np.asarray(x, dtype=float)
    tau = f.s * arr * arr
    val = f.sign * np.arctan(f.c * arr) + f.coef * arr * _s_ratio(tau, f.one_plus_tau(arr, t))
    return _unwrap(x, val)


def eval_form_d1(f: BranchForm, x, t=None):
    arr = np.asarray(x, dtype=float)
    val = f.sign * f.c / (1.0 + f.c2 * arr * arr) + f.coef / f.one_plus_tau(arr, t)
    return _unwrap(x, val)


def eval_form_d2(f: BranchForm, x, t=None):
    arr = np.asarray(x, dtype=float)
    lead = 1.0 + f.c2 * arr * arr
    val = (-2.0 * f.sign * f.c * f.c2 * arr / (lead * lead)
           - 2.0 * f.coef * f.s * arr / f.one_plus_tau(arr, t) ** 2)
    return _unwrap(x, val)


def eval_G(omega: float, alpha: float, x):
    """Evaluate ``G_{w,alpha}(x)`` for ``x`` in [0, 1] (scalar or array)."""
    f = g_form(omega, alpha)
    _check_x(x)
    return eval_form(f, x)


def eval_H(omega: float, alpha: float, x):
    """Evaluate ``H_{w,alpha}(x)`` for ``x`` in [0, 1] (scalar or array)."""
    f = h_form(omega, alpha)
    _check_x(x)
    return eval_form(f, x)


def eval_g(omega: float, alpha: float) -> float:
    """The exponent function ``g_w(alpha) = G_{w,alpha}(1)``.

    Raises
    ------
    DomainError
        If ``alpha`` lies in the closed gap ``[1-w, 1-1/w]`` (``{0}`` for w = 1).
    """
    return float(eval_form(g_form(omega, alpha), 1.0))


def eval_h(omega: float, alpha: float) -> float:
    """The exponent function ``h_w(alpha) = H_{w,alpha}(1)``, defined for alpha != 0."""
    return float(eval_form(h_form(omega, alpha), 1.0))


def deriv_G_x(omega: float, alpha: float, x):
    _check_x(x)
    return eval_form_d1(g_form(omega, alpha), x)


def deriv2_G_x(omega: float, alpha: float, x):
    _check_x(x)
    return eval_form_d2(g_form(omega, alpha), x)


def deriv_H_x(omega: float, alpha: float, x):
    _check_x(x)
    return eval_form_d1(h_form(omega, alpha), x)


def deriv2_H_x(omega: float, alpha: float, x):
    _check_x(x)
    return eval_form_d2(h_form(omega, alpha), x)
