"""Define tests for the circle zeros module."""
import math

import numpy as np
import pytest

from pyfekete import const
from pyfekete.circlezeros import (
    arc_centers,
    arc_classify,
    circle_zero_angles,
    auto_eta,
    derivative_sieve_chain,
    h_eval,
    h_grid,
    h_values,
    large_sieve_check,
    locate_zeros,
    max_modulus,
    random_sieve_suite,
    select_arc_parameters,
    shifted_derivative_coefficients,
    sign_agreements,
)
from pyfekete.error import DomainError
from pyfekete.numtheory import legendre_symbols
from pyfekete.polybase import eval_points, fekete


@pytest.mark.parametrize("p", [11, 13])
def test_h_routes_agree(p):
    """Tests the real trigonometric sum against the complex route."""
    # Arrange
    ts = [0.013, 0.21, 0.5, 0.77, 0.999]
    # Act
    complex_route = h_values(p, ts)
    # Assert
    for t, value in zip(ts, complex_route):
        assert h_eval(p, t) == pytest.approx(value, abs=1e-9 * math.sqrt(p))


@pytest.mark.parametrize("p", [7, 13])
def test_h_antiperiodic(p):
    """Tests H_p(t + 1) = -H_p(t) and the zero at t = 0."""
    assert h_eval(p, 0.0) == pytest.approx(0.0, abs=1e-12)
    for t in (0.1, 0.35, 0.8):
        assert h_eval(p, t + 1) == pytest.approx(-h_eval(p, t), abs=1e-9)
        assert h_eval(p, t + 2) == pytest.approx(h_eval(p, t), abs=1e-9)


@pytest.mark.parametrize("p", [17, 19])
def test_h_grid_integer_nodes(p):
    """Tests H_p(k/p) = (-1)^k (k|p) sqrt(p) on the grid."""
    # Act
    grid = h_grid(p, 3)
    # Assert
    assert len(grid) == 3 * p
    assert grid.max_imag < 1e-9 * math.sqrt(p)
    symbols = legendre_symbols(p)
    for k in range(p):
        expected = (-1) ** k * symbols[k] * math.sqrt(p)
        assert grid.values[3 * k] == pytest.approx(expected, abs=1e-9 * math.sqrt(p))
    assert grid.nodes[3] == pytest.approx(1 / p)


def test_h_grid_refinement():
    """Tests the refinement guard."""
    with pytest.raises(DomainError):
        h_grid(11, 0)


@pytest.mark.parametrize("p", [5, 7, 13, 101, 1009])
def test_sign_agreements(p):
    """Tests the count of equal adjacent Legendre symbols."""
    assert sign_agreements(p) == (p - 3) // 2


def test_sign_agreements_small():
    """Tests p = 3 is rejected."""
    with pytest.raises(DomainError):
        sign_agreements(3)


@pytest.mark.parametrize("p", [11, 13, 43])
def test_locate_zeros(p):
    """Tests located zeros vanish, include t = 0 and meet the sign-change count."""
    # Act
    zeros = locate_zeros(p)
    # Assert
    assert zeros == sorted(zeros)
    assert zeros[0] == pytest.approx(0.0, abs=1e-9)
    assert all(0 <= t < 1 for t in zeros)
    assert len(zeros) >= (p - 3) // 2 + 1
    assert np.abs(h_values(p, zeros)).max() < 1e-6 * math.sqrt(p)


def test_h_at_integer_node():
    """Tests H_7(1/7) = -sqrt(7)."""
    assert h_eval(7, 1 / 7) == pytest.approx(-math.sqrt(7), rel=1e-12)


def test_locate_zeros_minus_one():
    """Tests f_5(-1) = 0 is found at t = 1/2."""
    # Act
    zeros = locate_zeros(5)
    # Assert
    assert any(t == pytest.approx(0.5, abs=1e-9) for t in zeros)


def test_circle_zero_angles():
    """Tests z = 1 and z = -1 are repeated by their exact multiplicity."""
    # Act
    angles = circle_zero_angles(5)
    # Assert
    assert sorted(angles) == [0.0, 0.0, math.pi]


def test_circle_zero_angles_vanish():
    """Tests every reported angle is a zero of f_p on the circle."""
    # Act
    angles = circle_zero_angles(43)
    # Assert
    assert angles.count(0.0) == 1
    assert len(angles) >= (43 - 3) // 2 + 1
    values = np.abs(eval_points(fekete(43), np.exp(1j * np.array(angles))))
    assert values.max() < 1e-8 * 43


def test_locate_zeros_symmetric():
    """Tests the zeros of a real polynomial pair up under t -> 1 - t."""
    # Act
    zeros = np.array(locate_zeros(29))
    mirrored = np.sort((1.0 - zeros) % 1.0)
    # Assert
    gaps = np.minimum(np.abs(mirrored - zeros), 1 - np.abs(mirrored - zeros))
    assert gaps.max() < 1e-9


def test_locate_zeros_fraction():
    """Tests about half of the zeros of f_p lie on the circle."""
    # Act
    fraction = len(locate_zeros(211, 6)) / 211
    # Assert
    assert 0.4 < fraction < 0.6


def test_locate_zeros_refinement():
    """Tests a refinement of one is rejected."""
    with pytest.raises(DomainError):
        locate_zeros(11, 1)


def test_arc_classify():
    """Tests the thresholds and that nonvanishing arcs are zero free."""
    # Arrange
    p, delta, gamma, eta = 101, 0.5, const.DEFAULT_GAMMA, 0.15
    # Act
    summary = arc_classify(p, delta, gamma, eta)
    # Assert
    assert len(summary) == p
    assert summary.n_inconsistent == 0
    assert summary.n_qualifying <= min(summary.n_big_center, summary.n_small_deriv)
    assert summary.n_small_deriv >= p - p / (2 * gamma ** 2)
    first = summary.reports[0]
    assert first.k == 0
    assert first.center_value > 0
    assert abs(first.deriv_argmax - arc_centers(p)[0]) <= math.pi / (2 * p) + 1e-12
    data = summary.to_dict()
    assert data["p"] == p
    assert data["n_qualifying"] == summary.n_qualifying


def test_arc_classify_matches_zero_arcs():
    """Tests zeros recorded per arc agree with the located zeros."""
    # Arrange
    p = 31
    zeros = locate_zeros(p)
    # Act
    summary = arc_classify(p, 0.5, const.DEFAULT_GAMMA, 0.1, zeros=zeros)
    # Assert
    with_zero = sum(1 for arc in summary if arc.has_zero_in_arc)
    assert with_zero == len({int(math.floor(t * p)) for t in zeros})


@pytest.mark.parametrize("eta", [0.0, 0.2, 2.0])
def test_arc_classify_eta(eta):
    """Tests eta must lie below delta/gamma and pi/2."""
    with pytest.raises(DomainError):
        arc_classify(31, 0.5, const.DEFAULT_GAMMA, eta)


def test_select_arc_parameters():
    """Tests the scheduled delta and the automatic eta."""
    # Act
    summary = select_arc_parameters(101)
    # Assert
    assert summary.delta in const.DELTA_SCHEDULE
    assert summary.eta == pytest.approx(auto_eta(summary.delta, summary.gamma))
    assert summary.eta < summary.delta / summary.gamma


def test_large_sieve_exact():
    """Tests the sieve on a single exponential at two antipodal angles."""
    # Act
    lhs, rhs, delta_sep, holds = large_sieve_check([0, 1, 0], [0.0, math.pi])
    # Assert
    assert lhs == pytest.approx(2.0)
    assert delta_sep == pytest.approx(math.pi)
    assert rhs == pytest.approx(5.0)
    assert holds


def test_large_sieve_single_angle():
    """Tests one angle is separated by a full turn."""
    check = large_sieve_check([1, 2, 1], [1.0])
    assert check.delta_sep == pytest.approx(2 * math.pi)
    assert check.degree == 1


def test_large_sieve_guards():
    """Tests the argument checks."""
    with pytest.raises(DomainError):
        large_sieve_check([1, 2], [0.0])
    with pytest.raises(DomainError):
        large_sieve_check([1, 2, 3], [])
    with pytest.raises(DomainError):
        large_sieve_check([1, 2, 3], [1.0, 0.5])
    with pytest.raises(DomainError):
        large_sieve_check([1, 2, 3], [0.0, 7.0])
    with pytest.raises(DomainError):
        large_sieve_check([1, 2, 3], [0.0, 2 * math.pi])


def test_random_sieve_suite():
    """Tests seeded random instances satisfy the sieve."""
    # Act
    checks = random_sieve_suite(50, 12, 7)
    # Assert
    assert len(checks) == 50
    assert all(check.holds for check in checks)
    assert [c.lhs for c in checks] == [c.lhs for c in random_sieve_suite(50, 12, 7)]


def test_random_sieve_suite_default_size():
    """Tests a thousand seeded instances of degree up to 64."""
    # Act
    checks = random_sieve_suite(
        const.DEFAULT_SIEVE_INSTANCES, const.DEFAULT_SIEVE_DEGREE, const.DEFAULT_SEED
    )
    # Assert
    assert len(checks) == 1000
    assert all(check.holds for check in checks)


def test_shifted_derivative_coefficients():
    """Tests the centred coefficients of the derivative."""
    # Act
    coeffs = shifted_derivative_coefficients(7)
    # Assert
    assert len(coeffs) == 7
    assert coeffs.real.tolist() == [0, 1, 2, -3, 4, -5, -6]


@pytest.mark.parametrize("p", [31, 101])
def test_derivative_sieve_chain(p):
    """Tests every link of the sieve chain."""
    # Act
    chain = derivative_sieve_chain(p)
    # Assert
    assert chain.holds
    assert chain.m_bad <= chain.m_bound
    assert chain.centre_check.holds
    assert chain.parseval_bound <= chain.final_bound * 2
    assert not chain.final_link_holds
    assert chain.to_dict()["holds"]


def test_max_modulus():
    """Tests the extreme moduli straddle the quadratic mean."""
    # Act
    high, low = max_modulus(53, 4 * 53)
    # Assert
    assert low < math.sqrt(52) < high
    with pytest.raises(DomainError):
        max_modulus(53, 100)
