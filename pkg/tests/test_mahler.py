"""Define tests for the Mahler measure module."""
import cmath
import math

import numpy as np
import pytest

from pyfekete import const
from pyfekete.circlezeros import circle_zero_angles, locate_zeros
from pyfekete.error import DomainError, NumericalFailureError, PreconditionError
from pyfekete.mahler import (
    MahlerEstimate,
    ensemble_limit,
    find_roots,
    forbidden_distance,
    littlewood_ensemble,
    m0_from_roots,
    m0_uniform,
    mahler_measure,
    mq_uniform,
    product_bound_check,
    random_product_suite,
    subarc_measures,
    zero_product_bound_check,
)
from pyfekete.numtheory import primes_in_range
from pyfekete.polybase import IntPolynomial, deflate_at_one, fekete

SMALL_PRIMES = [int(p) for p in primes_in_range(3, const.DEFAULT_M0_PMAX)]


def test_parseval_m2():
    """Tests M_2 of a Fekete polynomial is sqrt(p - 1)."""
    # Act
    estimate = mq_uniform(fekete(31), 2)
    # Assert
    assert estimate.value == pytest.approx(math.sqrt(30), rel=1e-12)
    assert estimate.method == const.METHOD_UNIFORM_QUADRATURE
    assert estimate.q == 2


def test_power_means_increase():
    """Tests M_0 <= M_1/2 <= M_1 <= M_2 <= M_4 on the same polynomial."""
    # Arrange
    poly = fekete(41)
    # Act
    m0 = m0_uniform(poly, circle_zeros=circle_zero_angles(41)).value
    means = [m0] + [mq_uniform(poly, q).value for q in (0.5, 1, 2, 4)]
    # Assert
    assert means == sorted(means)
    assert means[0] < means[-1]


@pytest.mark.parametrize("q", [0.5, 1, 2, 4])
def test_mq_of_constant(q):
    """Tests M_q(c) = |c| for a constant polynomial."""
    assert mq_uniform(IntPolynomial([-3]), q).value == pytest.approx(3.0)


def test_m0_of_constant():
    """Tests M_0(c) = |c| for a constant polynomial."""
    assert m0_uniform(IntPolynomial([-3])).value == pytest.approx(3.0)
    assert product_bound_check(IntPolynomial([-3]), 5).rhs == pytest.approx(6.0)


@pytest.mark.parametrize("scale", [-2, 5])
def test_m0_scales(scale):
    """Tests M_0(c Q) = |c| M_0(Q) for both estimators."""
    # Arrange
    poly = fekete(29)
    scaled = IntPolynomial([scale * c for c in poly.to_list()])
    # Act
    base = mahler_measure(poly).value
    # Assert
    assert mahler_measure(scaled).value == pytest.approx(abs(scale) * base, rel=1e-9)
    assert m0_uniform(scaled).value == pytest.approx(
        abs(scale) * m0_uniform(poly).value, rel=1e-12
    )


def test_fekete_five():
    """Tests f_5 = z (1 - z)^2 (1 + z) has M_0 = 1."""
    # Act
    roots = find_roots(fekete(5))
    from_quadrature = m0_uniform(fekete(5), circle_zeros=circle_zero_angles(5))
    # Assert
    assert sorted(roots.roots.real.round(9).tolist()) == [-1.0, 0.0, 1.0, 1.0]
    assert np.abs(roots.roots.imag).max() < 1e-9
    assert m0_from_roots(roots).value == pytest.approx(1.0, abs=1e-6)
    assert from_quadrature.value == pytest.approx(1.0, abs=1e-6)


def test_circle_zeros_on_arc():
    """Tests circle zero corrections are refused on a partial arc."""
    with pytest.raises(DomainError):
        m0_uniform(fekete(5), (0.0, math.pi), 64, circle_zeros=[0.0])


def test_degenerate_nodes_shifted():
    """Tests a node on a zero is moved off it and counted."""
    # Arrange
    samples = 64
    angle = math.pi / samples
    poly = [-cmath.exp(1j * angle), 1]
    # Act
    estimate = m0_uniform(poly, samples=samples)
    # Assert
    assert estimate.residual == 1.0
    assert estimate.value == pytest.approx(1.0, rel=0.1)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_estimators_agree_small_primes(p):
    """Tests both M_0 estimators agree to 1e-3 at 2^14 nodes."""
    # Arrange
    poly = fekete(p)
    # Act
    from_roots = m0_from_roots(find_roots(poly)).value
    from_quadrature = m0_uniform(
        poly, samples=const.DEFAULT_M0_SAMPLES, circle_zeros=circle_zero_angles(p)
    ).value
    # Assert
    assert abs(from_quadrature - from_roots) <= const.ESTIMATOR_TOL * from_roots
    assert from_roots <= math.sqrt(p - 1) * (1 + const.INEQUALITY_SLACK)


@pytest.mark.parametrize("p", [397, 409])
def test_find_roots_large_primes(p):
    """Tests the root finder converges on degrees where iterates overflow."""
    # Arrange
    poly = fekete(p)
    # Act
    roots = find_roots(poly)
    m0 = m0_from_roots(roots).value
    # Assert
    assert roots.converged
    assert np.isfinite(roots.max_residual)
    assert roots.max_residual < const.ROOT_RESIDUAL_TOL * poly.l1_norm
    assert 1 <= m0 <= math.sqrt(p - 1)


def test_find_roots_rejects_non_finite(monkeypatch):
    """Tests a non-finite residual is a numerical failure."""
    # Arrange
    def diverged(coeffs, max_iter, tol):
        return np.full(len(coeffs) - 1, np.nan + 0j), max_iter, False

    monkeypatch.setattr("pyfekete.mahler._aberth", diverged)
    # Act
    with pytest.raises(NumericalFailureError):
        find_roots(IntPolynomial([2, 0, 1]))


def test_m0_of_known_product():
    """Tests both estimators on (z - 2)(z - 3)."""
    # Arrange
    poly = IntPolynomial([6, -5, 1])
    # Act
    from_roots = mahler_measure(poly)
    from_quadrature = m0_uniform(poly)
    # Assert
    assert from_roots.value == pytest.approx(6.0, rel=1e-12)
    assert from_roots.method == const.METHOD_ROOTS_JENSEN
    assert from_quadrature.value == pytest.approx(6.0, rel=1e-10)
    assert from_quadrature.residual == 0


def test_m0_leading_coefficient():
    """Tests roots inside the disc contribute nothing."""
    assert mahler_measure(IntPolynomial([-1, 2])).value == pytest.approx(2.0)
    assert mahler_measure(IntPolynomial([1, 1, 1])).value == pytest.approx(1.0)


def test_estimators_agree_on_fekete():
    """Tests the quadrature and root estimators on a Fekete polynomial."""
    # Arrange
    poly = fekete(23)
    # Act
    roots = find_roots(poly)
    from_roots = m0_from_roots(roots)
    from_quadrature = m0_uniform(poly, circle_zeros=circle_zero_angles(23))
    # Assert
    assert len(roots) == 22
    assert np.any(np.abs(roots.roots - 1) < 1e-12)
    assert roots.max_residual < 1e-8 * poly.l1_norm
    assert from_quadrature.value == pytest.approx(
        from_roots.value, rel=const.ESTIMATOR_TOL
    )


def test_estimator_guards():
    """Tests the estimator argument checks."""
    with pytest.raises(DomainError):
        mq_uniform(fekete(5), 0)
    with pytest.raises(DomainError):
        m0_uniform(IntPolynomial([0]))
    with pytest.raises(DomainError):
        m0_uniform(fekete(5), samples=8)
    with pytest.raises(DomainError):
        m0_uniform(fekete(5), (1.0, 0.5))
    with pytest.raises(DomainError):
        find_roots(IntPolynomial([3]))
    with pytest.raises(DomainError):
        find_roots(fekete(11), max_degree=5)
    with pytest.raises(DomainError):
        MahlerEstimate(1.0, "guess", (0, 1), 16, 0.0)


def test_estimate_to_dict():
    """Tests the JSON form of an estimate."""
    # Act
    data = m0_uniform(fekete(7), (0.0, math.pi), 64).to_dict()
    # Assert
    assert data["arc"] == [0.0, math.pi]
    assert data["samples_or_iters"] == 64
    assert data["q"] == 0.0


def test_forbidden_distance():
    """Tests the distance to the nearest odd multiple of pi / p."""
    assert forbidden_distance(math.pi / 7, 7) == pytest.approx(0.0)
    assert forbidden_distance(0.0, 7) == pytest.approx(math.pi / 7)
    assert forbidden_distance(2 * math.pi / 7, 7) == pytest.approx(math.pi / 7)
    assert forbidden_distance(math.pi, 7) == pytest.approx(0.0)


def test_product_bound():
    """Tests the roots-of-unity product of 1 + z against 2 M_0."""
    # Act
    lhs, rhs, holds = product_bound_check(IntPolynomial([1, 1]), 5)
    # Assert
    assert lhs == pytest.approx(2 ** 0.2)
    assert rhs == pytest.approx(2.0)
    assert holds


def test_product_bound_given_m0():
    """Tests a supplied M_0 replaces the root estimator."""
    # Act
    check = product_bound_check(IntPolynomial([1, 1]), 5, m0=0.5)
    # Assert
    assert check.rhs == 1.0
    assert not check.holds


def test_zero_product_bound():
    """Tests the bound with one allowed zero on the circle."""
    # Act
    lhs, rhs, k_used, holds = zero_product_bound_check(
        [-1j, 1], 5, 0.5, [math.pi / 2]
    )
    # Assert
    assert lhs == pytest.approx(2 ** 0.1)
    assert rhs == pytest.approx(2 * math.cos(0.25) ** 0.2)
    assert k_used == 1
    assert holds


def test_zero_product_bound_forbidden():
    """Tests a zero inside a forbidden arc is refused."""
    # Act
    with pytest.raises(PreconditionError) as info:
        zero_product_bound_check(IntPolynomial([1, 1]), 5, 0.5, [math.pi])
    # Assert
    assert info.value.angle == pytest.approx(math.pi)


def test_zero_product_bound_not_a_zero():
    """Tests an angle where Q does not vanish is refused."""
    with pytest.raises(PreconditionError):
        zero_product_bound_check([-1j, 1], 5, 0.5, [0.0])


@pytest.mark.parametrize("eta", [0.0, 2.0])
def test_zero_product_bound_eta(eta):
    """Tests eta outside (0, pi/2]."""
    with pytest.raises(DomainError):
        zero_product_bound_check([-1j, 1], 5, eta, [])


def test_product_bound_degree_guard():
    """Tests deg(Q) <= p is required."""
    with pytest.raises(DomainError):
        product_bound_check(fekete(11), 7)


def test_random_product_suite():
    """Tests seeded Littlewood polynomials satisfy the product bound."""
    # Act
    checks = random_product_suite(20, 8, 11, 5)
    # Assert
    assert len(checks) == 20
    assert all(check.holds for check in checks)


@pytest.mark.timeout(600)
def test_random_product_suite_default_size():
    """Tests a thousand seeded instances of degree up to 64 at p = 67."""
    # Act
    checks = random_product_suite(
        const.DEFAULT_PRODUCT_INSTANCES,
        const.DEFAULT_PRODUCT_DEGREE,
        const.DEFAULT_PRODUCT_PRIME,
        const.DEFAULT_SEED,
    )
    # Assert
    assert len(checks) == 1000
    assert all(check.holds for check in checks)


def test_product_bound_vanishes_on_fekete():
    """Tests f_p(1) = 0 makes the roots-of-unity product vanish."""
    # Act
    check = product_bound_check(fekete(11), 11)
    # Assert
    assert check.lhs == 0
    assert check.holds


@pytest.mark.parametrize("p", [101, 103])
def test_zero_product_bound_on_deflation(p):
    """Tests the improved bound on f_p / (1 - z) with its allowed circle zeros."""
    # Arrange
    eta = 0.5
    margin = 4 * math.pi * const.DEFAULT_BISECT_TOL
    quotient, _ = deflate_at_one(fekete(p))
    angles = [
        2 * math.pi * t
        for t in locate_zeros(p)
        if min(t, 1 - t) > 2 * const.DEFAULT_BISECT_TOL
        and forbidden_distance(2 * math.pi * t, p) >= eta / p + margin
    ]
    # Act
    check = zero_product_bound_check(quotient, p, eta, angles, margin=margin)
    # Assert
    assert check.k_used == len(angles) > p // 4
    assert check.holds

def test_ensemble_limit():
    """Tests the closed forms of the ensemble limit."""
    assert ensemble_limit(2) == pytest.approx(1.0)
    assert ensemble_limit(0) == pytest.approx(math.exp(-0.5772156649 / 2))
    assert ensemble_limit(4) == pytest.approx(2 ** 0.25)


def test_littlewood_ensemble_m2():
    """Tests the exact M_2 of degree-16 Littlewood polynomials."""
    # Act
    result = littlewood_ensemble(16, 2, 100, 1, quadrature=64)
    # Assert
    assert result.mean_ratio == pytest.approx(math.sqrt(17 / 16))
    assert result.stderr == pytest.approx(0.0, abs=1e-12)
    assert result.mean_power == pytest.approx(17 / 16)
    assert result.mean_log_truncated is None


def test_littlewood_ensemble_reproducible():
    """Tests the same seed reproduces the same ensemble."""
    # Act
    first = littlewood_ensemble(12, 0, 100, 99, quadrature=128).to_dict()
    second = littlewood_ensemble(12, 0, 100, 99, quadrature=128).to_dict()
    # Assert
    assert first == second
    assert first["generator"] == const.GENERATOR_ID
    assert "mean_log_truncated" in first


def test_littlewood_ensemble_guards():
    """Tests the sample floor and the exponent sign."""
    with pytest.raises(DomainError):
        littlewood_ensemble(16, 2, 10, 1)
    with pytest.raises(DomainError):
        littlewood_ensemble(16, -1, 100, 1)


def test_subarc_measures_full_circle():
    """Tests full-width arcs reproduce the Parseval value."""
    # Act
    estimates = subarc_measures(13, 2, 2 * math.pi, arcs=2)
    # Assert
    assert len(estimates) == 2
    for estimate in estimates:
        assert estimate.value == pytest.approx(math.sqrt(12), rel=1e-10)


def test_subarc_measures_width():
    """Tests the arc width guard."""
    with pytest.raises(DomainError):
        subarc_measures(13, 0, 0.0)
