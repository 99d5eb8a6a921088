"""Define the Mahler measure module: M_q estimators, roots and product bounds."""
import logging
import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import special

from . import const
from .error import DomainError, NumericalFailureError, PreconditionError
from .numtheory import Prime, as_prime
from .polybase import (
    IntPolynomial,
    Polynomial,
    coefficients,
    deflate_linear,
    degree_of,
    eval_arc,
    eval_points,
    eval_roots_of_unity,
    fekete,
    littlewood_generator,
    random_littlewood,
)

_LOGGER = logging.getLogger(__name__)

FULL_CIRCLE = (0.0, 2 * math.pi)
_ABERTH_BLOCK = 512


class MahlerEstimate:
    """Define a Mahler measure or M_q value with its provenance."""

    def __init__(
        self,
        value: float,
        method: str,
        arc: Tuple[float, float],
        samples: int,
        residual: float,
        *,
        q: float = 0.0
    ):
        """Init the estimate."""
        if method not in const.VALID_METHODS:
            raise DomainError("unknown estimation method: " + method)
        self._value = value  # type: float
        self._method = method  # type: str
        self._arc = (float(arc[0]), float(arc[1]))  # type: Tuple[float, float]
        self._samples = samples  # type: int
        self._residual = residual  # type: float
        self._q = q  # type: float

    def __float__(self) -> float:
        """Get the value as a float."""
        return self._value

    def __repr__(self):
        """Get a debug representation of the estimate."""
        return "<MahlerEstimate q={} value={!r} method={} samples={}>".format(
            self._q, self._value, self._method, self._samples
        )

    def to_dict(self) -> dict:
        """Get a JSON-ready representation."""
        return {
            "value": self._value,
            "method": self._method,
            "arc": list(self._arc),
            "samples_or_iters": self._samples,
            "residual": self._residual,
            "q": self._q,
        }

    @property
    def value(self) -> float:
        """Get the measured value."""
        return self._value

    @property
    def method(self) -> str:
        """Get the estimation method."""
        return self._method

    @property
    def arc(self) -> Tuple[float, float]:
        """Get the arc [alpha, beta] in radians."""
        return self._arc

    @property
    def samples(self) -> int:
        """Get the number of samples or iterations used."""
        return self._samples

    @property
    def residual(self) -> float:
        """Get the diagnostic residual."""
        return self._residual

    @property
    def q(self) -> float:
        """Get the exponent (0 for the Mahler measure)."""
        return self._q


class RootSet:
    """Define the roots of a polynomial together with its leading coefficient."""

    def __init__(
        self,
        roots: np.ndarray,
        leading: complex,
        max_residual: float,
        iterations: int,
        converged: bool = True,
    ):
        """Init the root set."""
        roots = np.asarray(roots, dtype=np.complex128)
        roots.setflags(write=False)
        self._roots = roots  # type: np.ndarray
        self._leading = leading  # type: complex
        self._max_residual = max_residual  # type: float
        self._iterations = iterations  # type: int
        self._converged = converged  # type: bool

    def __len__(self) -> int:
        """Get the number of roots (the degree)."""
        return len(self._roots)

    def __repr__(self):
        """Get a debug representation of the root set."""
        return "<RootSet degree={} residual={:.2e} iterations={}>".format(
            len(self._roots), self._max_residual, self._iterations
        )

    @property
    def roots(self) -> np.ndarray:
        """Get the roots, repeated by multiplicity."""
        return self._roots

    @property
    def leading(self) -> complex:
        """Get the leading coefficient."""
        return self._leading

    @property
    def max_residual(self) -> float:
        """Get max |Q(root)| over the roots."""
        return self._max_residual

    @property
    def iterations(self) -> int:
        """Get the number of simultaneous iterations used."""
        return self._iterations

    @property
    def converged(self) -> bool:
        """Return True if every Newton correction fell below tolerance."""
        return self._converged


class InequalityCheck:
    """Define the two sides of a numeric inequality lhs <= rhs."""

    def __init__(
        self,
        lhs: float,
        rhs: float,
        *,
        slack: float = const.INEQUALITY_SLACK,
        k_used: Optional[int] = None
    ):
        """Init the check."""
        self._lhs = lhs  # type: float
        self._rhs = rhs  # type: float
        self._slack = slack  # type: float
        self._k_used = k_used  # type: Optional[int]

    def __iter__(self):
        """Unpack as (lhs, rhs, holds) or (lhs, rhs, k_used, holds)."""
        if self._k_used is None:
            return iter((self._lhs, self._rhs, self.holds))
        return iter((self._lhs, self._rhs, self._k_used, self.holds))

    def __repr__(self):
        """Get a debug representation of the check."""
        return "<InequalityCheck {!r} <= {!r}: {}>".format(
            self._lhs, self._rhs, self.holds
        )

    @property
    def lhs(self) -> float:
        """Get the left-hand side."""
        return self._lhs

    @property
    def rhs(self) -> float:
        """Get the right-hand side."""
        return self._rhs

    @property
    def k_used(self) -> Optional[int]:
        """Get the zero count used by the bound, if any."""
        return self._k_used

    @property
    def holds(self) -> bool:
        """Return True if lhs <= rhs up to the relative slack."""
        return self._lhs <= self._rhs * (1 + self._slack)


def _validate_arc(arc: Tuple[float, float]) -> Tuple[float, float]:
    alpha, beta = float(arc[0]), float(arc[1])
    if not alpha < beta <= alpha + 2 * math.pi + 1e-12:
        raise DomainError("arc [{}, {}] is not a valid arc".format(alpha, beta))
    return alpha, beta


def default_m0_samples(degree: int) -> int:
    """Get the default quadrature size max(2^14, 64 deg)."""
    return max(const.DEFAULT_M0_SAMPLES, const.M0_SAMPLES_PER_DEGREE * degree)


def _arc_moduli(poly: Polynomial, arc: Tuple[float, float], samples: int):
    if samples < const.MIN_QUADRATURE_SAMPLES:
        raise DomainError(
            "at least {} samples are required".format(const.MIN_QUADRATURE_SAMPLES)
        )
    alpha, beta = _validate_arc(arc)
    return eval_arc(poly, alpha, beta, samples)


def mq_uniform(
    poly: Polynomial,
    q: float,
    arc: Tuple[float, float] = FULL_CIRCLE,
    samples: Optional[int] = None,
) -> MahlerEstimate:
    """Estimate M_q on an arc with the midpoint rule."""
    if q <= 0:
        raise DomainError("mq_uniform requires q > 0; use m0_uniform for q = 0")
    samples = samples or default_m0_samples(degree_of(poly))
    moduli = _arc_moduli(poly, arc, samples).moduli
    scale = moduli.max()
    if scale == 0:
        value = 0.0
    else:
        # factor out the maximum so |Q|^q cannot overflow
        value = scale * math.fsum(((moduli / scale) ** q).tolist()) ** (1 / q)
        value /= samples ** (1 / q)
    return MahlerEstimate(
        value, const.METHOD_UNIFORM_QUADRATURE, arc, samples, 0.0, q=q
    )


def _circle_zero_logs(grid, zero_angles: Sequence[float]) -> float:
    """Get the node mean of log|e^(it) - e^(i theta)| summed over the zeros.

    The nodes are the M-th roots of e^(i offset), so the node sum for one zero
    is log|e^(i M theta) - e^(i offset)| = log|2 sin((M theta - offset) / 2)|.
    """
    total = []
    for angle in zero_angles:
        gap = abs(2 * math.sin((grid.size * float(angle) - grid.offset) / 2))
        if gap > 0:
            total.append(math.log(gap))
    return math.fsum(total) / grid.size


def m0_uniform(
    poly: Polynomial,
    arc: Tuple[float, float] = FULL_CIRCLE,
    samples: Optional[int] = None,
    *,
    circle_zeros: Sequence[float] = ()
) -> MahlerEstimate:
    """Estimate M_0 on an arc with the midpoint rule.

    Nodes where |Q| < 1e-300 are moved by half a sub-step, a quarter of the
    node spacing; the number of moved nodes is returned as the residual.

    circle_zeros lists the angles of zeros of Q on the unit circle, repeated by
    multiplicity. On the full circle the exact node sum of each of their linear
    factors is removed, since the mean of log|e^(it) - e^(i theta)| is zero.
    """
    if not np.any(coefficients(poly)):
        raise DomainError("the Mahler measure of the zero polynomial is undefined")
    samples = samples or default_m0_samples(degree_of(poly))
    grid = _arc_moduli(poly, arc, samples)
    full = abs(grid.step * grid.size - 2 * math.pi) < 1e-12
    if len(circle_zeros) and not full:
        raise DomainError("circle zero corrections need the full circle")
    moduli = grid.moduli.copy()
    degenerate = np.nonzero(moduli < const.DEGENERATE_MODULUS)[0]
    if len(degenerate):
        _LOGGER.warning("Perturbing %d degenerate quadrature nodes", len(degenerate))
        substep = grid.step / 2
        shifted = grid.angles[degenerate] + 0.5 * substep
        moduli[degenerate] = np.abs(eval_points(poly, np.exp(1j * shifted)))
        if np.all(moduli < const.DEGENERATE_MODULUS):
            raise NumericalFailureError(
                "m0_uniform", "every quadrature node is degenerate"
            )
        moduli = np.maximum(moduli, const.DEGENERATE_MODULUS)
    mean_log = math.fsum(np.log(moduli).tolist()) / samples
    if len(circle_zeros):
        mean_log -= _circle_zero_logs(grid, circle_zeros)
    return MahlerEstimate(
        math.exp(mean_log),
        const.METHOD_UNIFORM_QUADRATURE,
        arc,
        samples,
        float(len(degenerate)),
    )


def _strip_exact_roots(poly: IntPolynomial) -> Tuple[np.ndarray, List[complex]]:
    """Remove roots at 0, 1 and -1 exactly; return the rest and those roots."""
    known = [0j] * poly.valuation
    reduced = IntPolynomial(poly.coeffs[poly.valuation :])
    for root in (1, -1):
        reduced, multiplicity = deflate_linear(reduced, root)
        known.extend([complex(root)] * multiplicity)
    return reduced.coeffs.astype(np.complex128), known


def _newton_ratios(coeffs: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Get Q(z) / Q'(z); outside the unit disc through the reversed polynomial."""
    degree = len(coeffs) - 1
    ratios = np.empty(len(zs), dtype=np.complex128)
    inside = np.abs(zs) <= 1
    descending = coeffs[::-1]
    near = zs[inside]
    ratios[inside] = np.polyval(descending, near) / np.polyval(
        np.polyder(descending), near
    )
    # Q(z) = z^n Q*(1/z) with Q* having the ascending coefficients descending
    w = 1.0 / zs[~inside]
    reversed_values = np.polyval(coeffs, w)
    reversed_slopes = np.polyval(np.polyder(coeffs), w)
    ratios[~inside] = reversed_values / (
        w * (degree * reversed_values - w * reversed_slopes)
    )
    return ratios


def _aberth(coeffs: np.ndarray, max_iter: int, tol: float):
    """Run Aberth-Ehrlich iterations on ascending coefficients."""
    degree = len(coeffs) - 1
    radius = 1.0 + 1.0 / degree
    # Cauchy bound on the root moduli
    bound = 1.0 + float(np.abs(coeffs[:-1] / coeffs[-1]).max())
    points = radius * np.exp(1j * const.GOLDEN_ANGLE * np.arange(degree))
    active = np.ones(degree, dtype=bool)
    for iteration in range(1, max_iter + 1):
        idx = np.nonzero(active)[0]
        zs = points[idx]
        repulsion = np.empty(len(idx), dtype=np.complex128)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            newton = _newton_ratios(coeffs, zs)
            for lo in range(0, len(idx), _ABERTH_BLOCK):
                rows = slice(lo, lo + _ABERTH_BLOCK)
                gaps = zs[rows, None] - points[None, :]
                gaps[np.arange(len(gaps)), idx[rows]] = np.inf
                repulsion[rows] = (1.0 / gaps).sum(axis=1)
            step = newton / (1.0 - newton * repulsion)
        moved = zs - step
        lost = ~np.isfinite(moved) | (np.abs(moved) > bound)
        if lost.any():
            # restart lost iterates on the initial circle at fresh angles
            angles = const.GOLDEN_ANGLE * (degree + iteration + idx[lost])
            moved[lost] = radius * np.exp(1j * angles)
        points[idx] = moved
        active[idx] = lost | (np.abs(step) >= tol * (1.0 + np.abs(moved)))
        if not active.any():
            return points, iteration, True
    return points, max_iter, False


def find_roots(
    poly: Polynomial,
    *,
    max_iter: int = const.ROOT_MAX_ITERATIONS,
    max_degree: int = const.ROOT_MAX_DEGREE,
    tol: float = const.ROOT_CORRECTION_TOL
) -> RootSet:
    """Find all roots by simultaneous Aberth-Ehrlich iteration."""
    degree = degree_of(poly)
    if degree < 1:
        raise DomainError("find_roots requires degree >= 1")
    if degree > max_degree:
        raise DomainError(
            "degree {} exceeds the root-finder guard {}".format(degree, max_degree)
        )
    coeffs = coefficients(poly)[: degree + 1]
    if isinstance(poly, IntPolynomial):
        remaining, known = _strip_exact_roots(poly)
    else:
        valuation = int(np.nonzero(coeffs)[0][0])
        remaining = coeffs[valuation:].astype(np.complex128)
        known = [0j] * valuation
    leading = complex(coeffs[-1])
    iterations = 0
    converged = True
    found = np.zeros(0, dtype=np.complex128)
    if len(remaining) > 1:
        found, iterations, converged = _aberth(remaining, max_iter, tol)
    roots = np.concatenate((np.array(known, dtype=np.complex128), found))
    residual = float(np.abs(eval_points(coeffs, roots)).max()) if len(roots) else 0.0
    limit = const.ROOT_RESIDUAL_TOL * float(np.abs(coeffs).sum())
    if not math.isfinite(residual):
        raise NumericalFailureError(
            "find_roots", "non-finite residual after {} iterations".format(iterations)
        )
    if not converged:
        if not residual <= limit:
            raise NumericalFailureError(
                "find_roots", "no convergence after {} iterations".format(max_iter),
                residual,
            )
        _LOGGER.warning(
            "Root set accepted on residual %.2e after %d iterations", residual, max_iter
        )
    _LOGGER.debug(
        "Found %d roots in %d iterations, residual %.2e", degree, iterations, residual
    )
    return RootSet(roots, leading, residual, iterations, converged)


def m0_from_roots(roots: RootSet) -> MahlerEstimate:
    """Get M_0 = |c| prod max(1, |z_k|) from the roots."""
    logs = [math.log(abs(roots.leading))]
    logs.extend(np.log(np.maximum(1.0, np.abs(roots.roots))).tolist())
    return MahlerEstimate(
        math.exp(math.fsum(logs)),
        const.METHOD_ROOTS_JENSEN,
        FULL_CIRCLE,
        roots.iterations,
        roots.max_residual,
    )


def mahler_measure(poly: Polynomial) -> MahlerEstimate:
    """Get M_0 by the root-based estimator."""
    return m0_from_roots(find_roots(poly))


def _log_unity_product(poly: Polynomial, p: int) -> float:
    moduli = eval_roots_of_unity(poly, p).moduli
    if np.any(moduli == 0):
        return -math.inf
    return math.fsum(np.log(moduli).tolist())


def product_bound_check(
    poly: Polynomial, p: Union[int, Prime], *, m0: Optional[float] = None
) -> InequalityCheck:
    """Check (prod_j |Q(zeta_p^j)|)^(1/p) <= 2 M_0(Q)."""
    p = int(as_prime(p))
    if degree_of(poly) > p:
        raise DomainError("the product bound needs deg(Q) <= p")
    lhs = math.exp(_log_unity_product(poly, p) / p)
    rhs = 2 * (_root_m0(poly) if m0 is None else m0)
    return InequalityCheck(lhs, rhs)


def _root_m0(poly: Polynomial) -> float:
    if degree_of(poly) == 0:
        return abs(complex(coefficients(poly)[0]))
    return mahler_measure(poly).value


def forbidden_distance(angle: float, p: int) -> float:
    """Get the distance from angle to the nearest odd multiple of pi/p."""
    centre = (2 * math.floor((angle * p / math.pi - 1) / 2 + 0.5) + 1) * math.pi / p
    return abs(angle - centre)


def zero_product_bound_check(
    poly: Polynomial,
    p: Union[int, Prime],
    eta: float,
    zero_angles: Sequence[float],
    *,
    zero_tol: float = 1e-8,
    margin: float = 0.0,
    m0: Optional[float] = None
) -> InequalityCheck:
    """Check the product bound improved by k zeros outside the forbidden arcs."""
    p = int(as_prime(p))
    if not 0 < eta <= math.pi / 2:
        raise DomainError("eta must lie in (0, pi/2]")
    if degree_of(poly) > p:
        raise DomainError("the product bound needs deg(Q) <= p")
    angles = [float(angle) % (2 * math.pi) for angle in zero_angles]
    if angles:
        scale = float(np.abs(coefficients(poly)).sum())
        values = np.abs(eval_points(poly, np.exp(1j * np.array(angles))))
        for angle, value in zip(angles, values):
            if value >= zero_tol * scale:
                raise PreconditionError(
                    angle, "angle {!r} is not a zero (|Q| = {:.3e})".format(angle, value)
                )
            if forbidden_distance(angle, p) < eta / p + margin:
                raise PreconditionError(
                    angle, "angle {!r} lies in a forbidden arc".format(angle)
                )
    k = len(angles)
    lhs = math.exp(_log_unity_product(poly, p) / p)
    if m0 is None:
        m0 = _root_m0(poly)
    rhs = 2 * math.cos(eta / 2) ** (k / p) * m0
    return InequalityCheck(lhs, rhs, k_used=k)


class EnsembleResult:
    """Define the outcome of a seeded Littlewood ensemble average."""

    def __init__(self, n: int, q: float, ratios: np.ndarray, seed: int, **extra):
        """Init the result from per-sample ratios M_q(f)/sqrt(n)."""
        self._n = n  # type: int
        self._q = q  # type: float
        self._seed = seed  # type: int
        self._samples = len(ratios)  # type: int
        self._mean = math.fsum(ratios.tolist()) / len(ratios)  # type: float
        spread = math.fsum(((ratios - self._mean) ** 2).tolist()) / (len(ratios) - 1)
        self._stderr = math.sqrt(spread / len(ratios))  # type: float
        self._extra = extra

    def __iter__(self):
        """Unpack as (mean_ratio, stderr)."""
        return iter((self._mean, self._stderr))

    def to_dict(self) -> dict:
        """Get a JSON-ready representation."""
        data = {
            "n": self._n,
            "q": self._q,
            "samples": self._samples,
            "seed": self._seed,
            "generator": const.GENERATOR_ID,
            "mean_ratio": self._mean,
            "stderr": self._stderr,
            "limit": ensemble_limit(self._q),
        }
        data.update(self._extra)
        return data

    @property
    def n(self) -> int:
        """Get the degree."""
        return self._n

    @property
    def q(self) -> float:
        """Get the exponent."""
        return self._q

    @property
    def samples(self) -> int:
        """Get the sample count."""
        return self._samples

    @property
    def mean_ratio(self) -> float:
        """Get the mean of M_q(f)/sqrt(n)."""
        return self._mean

    @property
    def stderr(self) -> float:
        """Get the standard error of the mean."""
        return self._stderr

    @property
    def mean_power(self) -> Optional[float]:
        """Get the mean of M_q(f)^q / n^(q/2) (q > 0)."""
        return self._extra.get("mean_power")

    @property
    def mean_log_truncated(self) -> Optional[float]:
        """Get the mean of log(M_0(max(|f|, 1/n)) / sqrt(n)) (q = 0)."""
        return self._extra.get("mean_log_truncated")


def ensemble_limit(q: float) -> float:
    """Get the large-degree limit of the mean of M_q(f)/sqrt(n)."""
    if q == 0:
        return math.exp(-np.euler_gamma / 2)
    return float(special.gamma(1 + q / 2)) ** (1 / q)


def littlewood_ensemble(
    n: int,
    q: float,
    samples: int,
    seed: int,
    *,
    quadrature: Optional[int] = None
) -> EnsembleResult:
    """Average M_q(f)/sqrt(n) over seeded random Littlewood polynomials."""
    if samples < const.MIN_ENSEMBLE_SAMPLES:
        raise DomainError(
            "at least {} samples are required".format(const.MIN_ENSEMBLE_SAMPLES)
        )
    if q < 0:
        raise DomainError("q must be nonnegative")
    quadrature = quadrature or default_m0_samples(n)
    seeds = np.random.SeedSequence(int(seed)).generate_state(samples, dtype=np.uint64)
    ratios = np.empty(samples)
    extra = np.empty(samples)
    root = math.sqrt(n)
    for index, child in enumerate(seeds):
        poly = random_littlewood(n, int(child))
        moduli = eval_roots_of_unity(poly, quadrature, math.pi).moduli
        if q == 0:
            logs = np.log(np.maximum(moduli, const.DEGENERATE_MODULUS))
            ratios[index] = math.exp(math.fsum(logs.tolist()) / quadrature) / root
            truncated = np.log(np.maximum(moduli, 1.0 / n))
            extra[index] = math.fsum(truncated.tolist()) / quadrature - math.log(root)
        else:
            power = math.fsum((moduli ** q).tolist()) / quadrature
            ratios[index] = power ** (1 / q) / root
            extra[index] = power / root ** q
    key = "mean_log_truncated" if q == 0 else "mean_power"
    _LOGGER.debug("Ensemble n=%d q=%s over %d samples", n, q, samples)
    return EnsembleResult(
        n, q, ratios, seed, **{key: math.fsum(extra.tolist()) / samples}
    )


def subarc_measures(
    p: Union[int, Prime],
    q: float,
    width: float,
    arcs: int = 8,
    *,
    samples: Optional[int] = None
) -> List[MahlerEstimate]:
    """Get M_q(f_p) on `arcs` evenly spaced arcs of the given width."""
    p = as_prime(p)
    if not 0 < width <= 2 * math.pi:
        raise DomainError("arc width must lie in (0, 2 pi]")
    poly = fekete(p)
    samples = samples or max(const.MIN_QUADRATURE_SAMPLES, 64 * int(p))
    results = []
    for index in range(arcs):
        alpha = 2 * math.pi * index / arcs
        arc = (alpha, alpha + width)
        if q == 0:
            results.append(m0_uniform(poly, arc, samples))
        else:
            results.append(mq_uniform(poly, q, arc, samples))
    return results


def random_product_suite(
    instances: int, max_degree: int, p: Union[int, Prime], seed: int
) -> List[InequalityCheck]:
    """Run the product bound on seeded random Littlewood polynomials."""
    rng = littlewood_generator(seed)
    checks = []
    for _ in range(instances):
        degree = int(rng.integers(1, max_degree + 1))
        poly = random_littlewood(degree, int(rng.integers(0, 2 ** 63)))
        checks.append(product_bound_check(poly, p))
    return checks
