import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from pucci_cones import special_functions as sf
from pucci_cones.analysis import (
    Regime, SuiteReport, bound_suite, build_supersolution, critical_interval,
    exponent_relation_errors, functional_identity_errors, halfplane_lower_expression,
    halfplane_upper_expression, identity_suite, liouville_classify, monotonicity_report,
    monotonicity_suite, residual_suite,
)
from pucci_cones.errors import DomainError, EvaluationError
from pucci_cones.exponents import ConeProblem, alpha_minus, alpha_plus
from pucci_cones.field import HomogeneousSolution, finite_difference_hessian, pucci_minus
from pucci_cones.profiles import ProfileKind

from oracles import g_ref

RADII = (0.5, 1.0, 2.0, 4.0, 8.0)
PROBLEM_2_1 = ConeProblem.from_omega(2.0, 1.0)


def test_exact_solution_has_constant_scaled_infimum():
    u = HomogeneousSolution(PROBLEM_2_1, ProfileKind.PHI_PLUS)
    rep = monotonicity_report(u, PROBLEM_2_1, RADII)
    sp = np.array(rep.scaled_plus)
    assert np.max(np.abs(sp - sp[0])) <= 1e-6 * abs(sp[0])
    assert sp[0] == pytest.approx(1.0, rel=1e-12)


def test_sum_of_solutions_is_monotone():
    up = HomogeneousSolution(PROBLEM_2_1, ProfileKind.PHI_PLUS)
    um = HomogeneousSolution(PROBLEM_2_1, ProfileKind.PHI_MINUS)
    rep = monotonicity_report(lambda r, t: up(r, t) + um(r, t), PROBLEM_2_1, RADII)
    assert rep.plus_violation <= 1e-6
    assert rep.minus_violation <= 1e-6
    assert rep.is_monotone()
    # both sequences move strictly for a genuine supersolution
    assert rep.scaled_plus[-1] < rep.scaled_plus[0]
    assert rep.scaled_minus[-1] > rep.scaled_minus[0]


def test_constant_field_scaled_plus_decreases():
    rep = monotonicity_report(lambda r, t: np.ones_like(t), PROBLEM_2_1, RADII)
    assert all(b < a for a, b in zip(rep.scaled_plus[:-1], rep.scaled_plus[1:]))
    assert rep.m_plus[0] == pytest.approx(rep.m_plus[-1], rel=1e-12)


def test_monotonicity_input_validation():
    with pytest.raises(ValueError):
        monotonicity_report(lambda r, t: t, PROBLEM_2_1, [1.0, 0.5])
    with pytest.raises(ValueError):
        monotonicity_report(lambda r, t: t, PROBLEM_2_1, [1.0], angular_samples=8)
    with pytest.raises(EvaluationError):
        monotonicity_report(lambda r, t: np.full_like(t, np.nan), PROBLEM_2_1, [1.0])

    def broken(r, t):
        raise RuntimeError("boom")
    with pytest.raises(EvaluationError):
        monotonicity_report(broken, PROBLEM_2_1, [1.0])


@pytest.mark.parametrize("p, expected", [(3.0, True), (3.01, False), (1.0, True), (-1.0, True),
                                         (-1.01, False), (0.0, True)])
def test_laplacian_halfplane_classification(p, expected):
    verdict = liouville_classify(ConeProblem(1.0, 1.0, math.pi / 2), p)
    assert verdict.nonexistence is expected
    assert verdict.criteria_agree
    assert verdict.critical_interval == pytest.approx((-1.0, 3.0), abs=1e-12)


@given(omega=st.floats(1.0, 20.0), theta0=st.floats(0.05, math.pi - 0.05))
def test_unit_exponent_always_in_interval(omega, theta0):
    v = liouville_classify(ConeProblem.from_omega(omega, theta0), 1.0)
    assert v.nonexistence and v.criteria_agree
    assert v.critical_interval[0] < 1.0 < v.critical_interval[1]


def test_classification_consistency_random():
    rng = np.random.default_rng(11)
    checked = 0
    for _ in range(500):
        omega = rng.uniform(1.0, 20.0)
        theta0 = rng.uniform(0.05, math.pi - 0.05)
        lo, hi = critical_interval(ConeProblem.from_omega(omega, theta0))
        p = rng.uniform(lo - 3.0, hi + 3.0)
        v = liouville_classify(ConeProblem.from_omega(omega, theta0), p)
        assert v.criteria_agree, (omega, theta0, p)
        checked += v.threshold_value is not None
    assert checked > 100


@pytest.mark.parametrize("omega, theta0, p", [(3.0, 0.8, 1.5), (3.0, 0.8, -1.0), (1.5, 2.5, 0.5), (3.0, 2.0, 1.8)])
def test_threshold_matches_mpmath(omega, theta0, p):
    v = liouville_classify(ConeProblem.from_omega(omega, theta0), p)
    ref = float(g_ref(omega, mp.mpf(2) / (1 - mp.mpf(p))))
    assert v.threshold_value == pytest.approx(ref, rel=1e-12)
    assert v.nonexistence == (ref <= theta0)


def test_gap_threshold_counts_as_infinite():
    # 2/(1-p) = 0.25 lies in the gap of g for w = 2, so the threshold test never holds
    v = liouville_classify(PROBLEM_2_1, -7.0)
    assert v.threshold_value is None
    assert not v.nonexistence and v.criteria_agree
    with pytest.raises(DomainError):
        liouville_classify(PROBLEM_2_1, math.nan)


def _check_witness(problem, p):
    witness, sol = build_supersolution(problem, p)
    w = witness
    if w.regime is Regime.SUPERCRITICAL_HIGH:
        a_m = alpha_minus(problem.omega, problem.theta0)
        assert a_m < w.alpha < w.beta < min(1 - problem.omega, -2 / (p - 1)) < 0
    else:
        a_p = alpha_plus(problem.omega, problem.theta0)
        assert max(1 - 1 / problem.omega, 2 / (1 - p)) < w.beta < w.alpha < a_p
    assert 0 < w.gamma < w.gamma_window[1]
    assert w.gamma_window[0] < w.gamma
    assert w.shift == pytest.approx(1 / math.sin(problem.theta0))
    summary = sol.verify()
    assert summary.passed and summary.n_points == 500
    assert summary.max_normalized_margin <= -1e-10
    return witness, sol


def test_supersolution_laplacian_halfplane():
    witness, _ = _check_witness(ConeProblem(1.0, 1.0, math.pi / 2), 4.0)
    assert witness.regime is Regime.SUPERCRITICAL_HIGH
    assert -1.0 < witness.alpha < witness.beta < -2.0 / 3.0


@pytest.mark.parametrize("omega, theta0, side", [(2.0, 1.0, 1), (2.0, 2.0, -1), (2.0, 1.0, -1),
                                                 (2.0, 2.0, 1), (5.0, 0.5, 1), (5.0, 2.8, -1)])
def test_supersolution_outside_interval(omega, theta0, side):
    problem = ConeProblem.from_omega(omega, theta0)
    lo, hi = critical_interval(problem)
    p = hi + 0.5 if side > 0 else lo - 0.5
    witness, _ = _check_witness(problem, p)
    expected = Regime.SUPERCRITICAL_HIGH if side > 0 else Regime.SUBCRITICAL_LOW
    assert witness.regime is expected


def test_supersolution_negative_exponent_rescaling():
    problem = ConeProblem.from_omega(2.0, 2.0)
    lo, _ = critical_interval(problem)
    assert lo - 0.5 < 0
    witness, _ = _check_witness(problem, lo - 0.5)
    assert witness.delta_hat != witness.delta_const


def test_supersolution_inequality_by_finite_differences():
    # independent of the analytic Hessian path: difference the shifted field itself
    problem = PROBLEM_2_1
    _, hi = critical_interval(problem)
    witness, sol = build_supersolution(problem, hi + 0.5)
    t0 = problem.theta0
    for rho, frac in ((1.5, 0.0), (3.0, 0.5), (10.0, -0.7)):
        theta = frac * t0
        x, yy = rho * math.sin(theta), rho * math.cos(theta) - witness.shift
        hess = finite_difference_hessian(sol.value_xy, x, yy)
        eigs = np.linalg.eigvalsh(hess)
        lhs = pucci_minus(eigs, problem.lam, problem.Lam) + float(sol.value_xy(x, yy)) ** witness.p
        assert lhs < 0
        assert float(sol.inequality_margin(rho, theta)) < 0


@pytest.mark.parametrize("omega, theta0", [(1.0, math.pi / 2), (2.0, 1.0), (2.0, 2.0)])
def test_endpoint_sharpness(omega, theta0):
    problem = ConeProblem.from_omega(omega, theta0)
    lo, hi = critical_interval(problem)
    assert liouville_classify(problem, lo).nonexistence
    assert liouville_classify(problem, hi).nonexistence
    assert not liouville_classify(problem, math.nextafter(lo, -math.inf)).nonexistence
    assert not liouville_classify(problem, math.nextafter(hi, math.inf)).nonexistence
    for p in (lo - 1e-2, hi + 1e-2):
        _check_witness(problem, p)
    for p in (lo, hi, 1.0):
        with pytest.raises(DomainError):
            build_supersolution(problem, p)


def test_halfplane_expressions_are_g_values():
    for w in (1.0, 2.0, 7.5):
        assert halfplane_lower_expression(w) == pytest.approx(float(g_ref(w, 1 - 2 * w)), rel=1e-13)
        assert halfplane_upper_expression(w) == pytest.approx(float(g_ref(w, -w)), rel=1e-13)


def test_bound_suite_equality_case():
    rep = bound_suite(1.0)
    assert rep.passed
    checks = {c.name: c for c in rep.checks}
    assert abs(checks["lower_expression_le_half_pi"].value) < 1e-12
    assert abs(checks["upper_expression_ge_half_pi"].value) < 1e-12
    assert checks["equality_iff_omega_one"].value == 1.0


@pytest.mark.parametrize("omega", [3.0, 5.0])
def test_bound_suite_strict(omega):
    rep = bound_suite(omega)
    assert rep.passed
    checks = {c.name: c for c in rep.checks}
    assert checks["lower_expression_le_half_pi"].value < -1e-3
    assert checks["upper_expression_ge_half_pi"].value < -1e-3
    assert checks["equality_iff_omega_one"].value == 0.0
    assert checks["alpha_plus_ge_omega_over_omega_plus_1"].value < 0


@pytest.mark.parametrize("omega", [1.0, 1.5, 3.0, 10.0])
def test_identities(omega):
    assert max(exponent_relation_errors(omega).values()) <= 1e-9
    assert max(functional_identity_errors(omega).values()) <= 1e-10


def test_suites_pass_and_serialise():
    for rep in (identity_suite(2.0, n=20), residual_suite(ConeProblem.from_omega(1.0, 1.0)),
                monotonicity_suite(PROBLEM_2_1)):
        assert rep.passed
        d = rep.as_dict()
        assert d["passed"] and len(d["checks"]) == len(rep.checks)


def test_suite_report_failure():
    rep = SuiteReport("x")
    rep.add("ok", 0.1, 1.0)
    rep.add("bad", 2.0, 1.0)
    assert not rep.passed
    with pytest.raises(DomainError):
        bound_suite(0.5)


def test_omega_check_helper():
    assert sf.check_omega(2) == 2.0
