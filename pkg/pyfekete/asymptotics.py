"""Define the asymptotics module: C(x), c_delta and the midpoint distribution."""
import functools
import logging
import math
from typing import Callable, List, Optional, Tuple, Union

import numpy as np
from scipy import special

from . import const
from .error import DomainError, NumericalFailureError
from .numtheory import Prime, as_prime
from .polybase import eval_roots_of_unity, fekete

_LOGGER = logging.getLogger(__name__)

# bound on the remainder of log cos^2 u after its u^2 and u^4 terms, |u| <= 1
_TAIL_REMAINDER = 0.448
_LOG2 = math.log(2.0)


class CdeltaResult:
    """Define the value of c_delta together with its numerical settings."""

    def __init__(
        self,
        delta: float,
        value: float,
        truncation: int,
        cutoff: float,
        quad_tol: float,
        evaluations: int,
    ):
        """Init the result."""
        self._delta = delta  # type: float
        self._value = value  # type: float
        self._truncation = truncation  # type: int
        self._cutoff = cutoff  # type: float
        self._quad_tol = quad_tol  # type: float
        self._evaluations = evaluations  # type: int

    def __float__(self) -> float:
        """Get the value as a float."""
        return self._value

    def __repr__(self):
        """Get a debug representation of the result."""
        return "<CdeltaResult delta={} value={!r}>".format(self._delta, self._value)

    def to_dict(self) -> dict:
        """Get a JSON-ready representation."""
        return {
            "delta": self._delta,
            "value": self._value,
            "truncation_K": self._truncation,
            "cutoff_X": self._cutoff,
            "quad_tol": self._quad_tol,
            "evaluations": self._evaluations,
        }

    @property
    def delta(self) -> float:
        """Get delta."""
        return self._delta

    @property
    def value(self) -> float:
        """Get c_delta."""
        return self._value

    @property
    def truncation_k(self) -> int:
        """Get the product truncation K used for the integrand."""
        return self._truncation

    @property
    def cutoff_x(self) -> float:
        """Get the upper limit X of the integral."""
        return self._cutoff

    @property
    def quad_tol(self) -> float:
        """Get the requested tolerance."""
        return self._quad_tol

    @property
    def evaluations(self) -> int:
        """Get the number of integrand evaluations."""
        return self._evaluations


def truncation_for(x: float, tol: float) -> int:
    """Get the truncation K for C(x) whose corrected tail error is below tol."""
    size = max(const.MIN_TRUNCATION, math.ceil(const.TRUNCATION_PER_UNIT * x))
    while (
        _TAIL_REMAINDER * x ** 6 / (2 * size + 1) ** 5 >= tol
        or 2 * x / (2 * size + 3) > 1
    ):
        size *= 2
    return size


def _log_product(x: float, size: int) -> float:
    """Get log C(x) from K + 1 factors and the series of the remaining ones."""
    if x == 0:
        return 0.0
    factors = np.cos(2 * x / (2 * np.arange(size + 1) + 1)) ** 2
    if not factors.all():
        return -math.inf
    # sum_{k > K} log cos^2(2x/(2k+1)) ~ -x^2 psi'(K + 3/2) - x^4 psi'''(K + 3/2) / 36
    shift = size + 1.5
    tail = x * x * float(special.polygamma(1, shift))
    tail += x ** 4 * float(special.polygamma(3, shift)) / 36
    return math.fsum(np.log(factors).tolist()) - tail


def c_product(
    x: float, tol: float = const.DEFAULT_PRODUCT_TOL, *, truncation: Optional[int] = None
) -> float:
    """Get C(x) = prod_{k >= 0} cos^2(2x / (2k + 1))."""
    if x < 0:
        raise DomainError("C(x) is evaluated for x >= 0 only")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    size = truncation if truncation is not None else truncation_for(x, tol)
    if 2 * x / (2 * size + 3) > 1:
        raise DomainError("truncation {} is too short for x = {}".format(size, x))
    return math.exp(_log_product(x, size))


@functools.lru_cache(maxsize=None)
def envelope_constant() -> float:
    """Get c_1 with C(x) <= c_1 2^(-3x/pi), calibrated at x = 1."""
    return c_product(1.0, 1e-14) * 2 ** (3 / math.pi)


def integral_cutoff(tol: float) -> float:
    """Get the smallest half-integer X whose envelope tail is below tol / 2."""
    c1 = envelope_constant()
    cutoff = 1.0
    while c1 * 2 ** (-3 * cutoff / math.pi) / (3 * cutoff * _LOG2) >= tol / 2:
        cutoff += 0.5
    return cutoff


def _simpson(
    func: Callable[[float], float], lo: float, hi: float, eps: float
) -> Tuple[float, int]:
    """Integrate with adaptive Simpson's rule; return the value and evaluations."""
    f_lo, f_hi = func(lo), func(hi)
    mid = 0.5 * (lo + hi)
    f_mid = func(mid)
    evaluations = 3
    whole = (hi - lo) * (f_lo + 4 * f_mid + f_hi) / 6
    stack = [(lo, hi, f_lo, f_mid, f_hi, whole, eps, 0)]
    pieces = []  # type: List[float]
    while stack:
        lo, hi, f_lo, f_mid, f_hi, whole, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left_mid, right_mid = 0.5 * (lo + mid), 0.5 * (mid + hi)
        f_left, f_right = func(left_mid), func(right_mid)
        evaluations += 2
        left = (mid - lo) * (f_lo + 4 * f_left + f_mid) / 6
        right = (hi - mid) * (f_mid + 4 * f_right + f_hi) / 6
        error = left + right - whole
        if abs(error) <= 15 * eps:
            pieces.append(left + right + error / 15)
            continue
        if depth >= const.SIMPSON_MAX_DEPTH or evaluations > const.SIMPSON_MAX_EVALUATIONS:
            raise NumericalFailureError(
                "c_delta",
                "adaptive quadrature did not converge on [{}, {}]".format(lo, hi),
                abs(error),
            )
        # right half first so the left half is refined next
        stack.append((mid, hi, f_mid, f_right, f_hi, right, eps / 2, depth + 1))
        stack.append((lo, mid, f_lo, f_left, f_mid, left, eps / 2, depth + 1))
    return math.fsum(pieces), evaluations


def c_delta(delta: float, tol: float = const.DEFAULT_CDELTA_TOL) -> CdeltaResult:
    """Get c_delta = 1/2 + (1/pi) int_0^inf sin(delta pi x) C(x) / x dx."""
    if delta == 0:
        raise DomainError("c_delta is defined for delta != 0")
    if not const.MIN_CDELTA_TOL < tol < const.MAX_CDELTA_TOL:
        raise DomainError(
            "tolerance must lie in ({}, {})".format(
                const.MIN_CDELTA_TOL, const.MAX_CDELTA_TOL
            )
        )
    cutoff = integral_cutoff(tol)
    size = truncation_for(cutoff, tol)
    frequency = delta * math.pi

    def integrand(x: float) -> float:
        if x == 0:
            return frequency
        return math.sin(frequency * x) * math.exp(_log_product(x, size)) / x

    # panel ends at the half periods of sin(delta pi x)
    half_period = 1 / abs(delta)
    edges = list(np.arange(0.0, cutoff, half_period)) + [cutoff]
    if len(edges) > 2 and edges[-1] - edges[-2] < 1e-12:
        edges.pop(-2)
    budget = 0.5 * tol * math.pi
    parts, evaluations = [], 0
    for lo, hi in zip(edges, edges[1:]):
        part, count = _simpson(integrand, lo, hi, budget * (hi - lo) / cutoff)
        parts.append(part)
        evaluations += count
    value = 0.5 + math.fsum(parts) / math.pi
    _LOGGER.debug(
        "c_delta(%s) = %.10f with K = %d, X = %s, %d evaluations",
        delta, value, size, cutoff, evaluations,
    )
    return CdeltaResult(delta, value, size, cutoff, tol, evaluations)


def small_delta_bound(delta: float) -> float:
    """Get the bound pi sqrt(delta) (1 + c_1 / (3 log 2)) on pi |c_delta - 1/2|."""
    if not 0 < abs(delta) <= 1:
        raise DomainError("the small-delta bound needs 0 < |delta| <= 1")
    return math.pi * math.sqrt(abs(delta)) * (1 + envelope_constant() / (3 * _LOG2))


def midpoint_h_values(p: Union[int, Prime]) -> np.ndarray:
    """Get H_p((k + 1/2) / p) for k = 1..p."""
    p = as_prime(p)
    n = int(p)
    grid = eval_roots_of_unity(fekete(p), n, math.pi)
    # exp(-i pi (j + 1/2)) = -i (-1)^j
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    rotation = 1.0 if n % 4 == 1 else -1j
    values = (rotation * -1j * signs * grid.values).real
    # H_p((p + 1/2) / p) = -H_p(1 / (2p))
    return np.concatenate((values[1:], -values[:1]))


def empirical_midpoint_fraction(p: Union[int, Prime], delta: float) -> float:
    """Get the fraction of midpoints k = 1..p with H_p((k+1/2)/p) < delta sqrt(p)."""
    p = as_prime(p)
    if int(p) < const.MIN_DISTRIBUTION_PRIME:
        raise DomainError(
            "the midpoint distribution needs p >= {}".format(
                const.MIN_DISTRIBUTION_PRIME
            )
        )
    values = midpoint_h_values(p)
    threshold = delta * math.sqrt(int(p))
    return int(np.count_nonzero(values < threshold)) / int(p)


def midpoint_ties(p: Union[int, Prime], delta: float) -> int:
    """Count midpoints whose H_p value equals delta sqrt(p) in floating point."""
    p = as_prime(p)
    values = midpoint_h_values(p)
    return int(np.count_nonzero(values == delta * math.sqrt(int(p))))


def riemann_c_delta(
    delta: float,
    step: float = const.ORACLE_STEP,
    cutoff: float = const.ORACLE_CUTOFF,
    truncation: int = const.ORACLE_TRUNCATION,
    chunk_size: int = const.ORACLE_CHUNK,
) -> float:
    """Get c_delta from a plain midpoint sum, independent of the adaptive rule.

    The product keeps truncation + 1 factors; the factors beyond it enter through
    their x^2 and x^4 terms, which needs 2 cutoff < 2 truncation + 3.
    """
    if not 2 * cutoff < 2 * truncation + 3:
        raise DomainError("the oracle truncation is too short for its cutoff")
    xs = (np.arange(int(round(cutoff / step))) + 0.5) * step
    odd = 2 * np.arange(truncation + 1) + 1
    square_tail = float(special.polygamma(1, truncation + 1.5))
    quartic_tail = float(special.polygamma(3, truncation + 1.5)) / 36
    sums = []
    for chunk in np.array_split(xs, max(1, len(xs) // chunk_size)):
        product = np.prod(np.cos(2 * chunk[:, None] / odd[None, :]) ** 2, axis=1)
        tail = np.exp(-(chunk ** 2) * square_tail - chunk ** 4 * quartic_tail)
        values = np.sin(delta * math.pi * chunk) * product * tail
        sums.append(float((values / chunk).sum()))
    return 0.5 + step * math.fsum(sums) / math.pi
