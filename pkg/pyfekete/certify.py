"""Define the certify module: per-prime replay of the M_0(f_p) lower bound."""
import logging
import math
from typing import Callable, Dict, Iterable, List, Optional, Union

from . import const
from .circlezeros import circle_zero_angles, locate_zeros, select_arc_parameters
from .error import DomainError, FeketeError, format_error_message
from .mahler import (
    FULL_CIRCLE,
    InequalityCheck,
    MahlerEstimate,
    find_roots,
    forbidden_distance,
    m0_from_roots,
    m0_uniform,
    zero_product_bound_check,
)
from .numtheory import Prime, as_prime, primes_in_range
from .polybase import deflate_at_one, eval_roots_of_unity, fekete

_LOGGER = logging.getLogger(__name__)


class Certificate:
    """Define the certified lower bound for M_0(f_p) and its measured value."""

    def __init__(
        self,
        p: Prime,
        m: int,
        eta: float,
        k_zeros: int,
        gauss_product: float,
        direct_m0: MahlerEstimate,
        *,
        delta: Optional[float] = None,
        gamma: Optional[float] = None,
        n_qualifying: Optional[int] = None,
        g_one: int = 0,
        zero_check: Optional[InequalityCheck] = None,
        estimator_gap: Optional[float] = None
    ):
        """Init the certificate and assemble the bound."""
        self._p = p  # type: Prime
        self._m = m  # type: int
        self._eta = eta  # type: float
        self._k_zeros = k_zeros  # type: int
        self._gauss_product = gauss_product  # type: float
        self._direct_m0 = direct_m0  # type: MahlerEstimate
        self._delta = delta  # type: Optional[float]
        self._gamma = gamma  # type: Optional[float]
        self._n_qualifying = n_qualifying  # type: Optional[int]
        self._g_one = g_one  # type: int
        self._zero_check = zero_check  # type: Optional[InequalityCheck]
        self._estimator_gap = estimator_gap  # type: Optional[float]
        n = int(p)
        self._bound = (
            n ** ((n - 1) / (2 * n))
            * n ** (-m / n)
            / (2 * math.cos(eta / 2) ** (k_zeros / n))
        )  # type: float

    def __repr__(self):
        """Get a debug representation of the certificate."""
        return "<Certificate p={} bound={:.6g} direct_m0={:.6g} holds={}>".format(
            self._p, self._bound, self.direct_m0, self.holds
        )

    def to_dict(self) -> dict:
        """Get a JSON-ready representation."""
        return {
            "p": int(self._p),
            "m": self._m,
            "eta": self._eta,
            "delta": self._delta,
            "gamma": self._gamma,
            "n_qualifying": self._n_qualifying,
            "k_zeros": self._k_zeros,
            "gauss_product": self._gauss_product,
            "gauss_expected": self.gauss_expected,
            "bound": self._bound,
            "direct_m0": self.direct_m0,
            "direct_method": self._direct_m0.method,
            "ratio": self.ratio,
            "holds": self.holds,
            "jensen": self.jensen,
            "degenerate": self.degenerate,
            "g_one": self._g_one,
            "zero_check_holds": self._zero_check.holds if self._zero_check else None,
            "estimator_gap": self._estimator_gap,
        }

    @property
    def p(self) -> Prime:
        """Get the prime."""
        return self._p

    @property
    def m(self) -> int:
        """Get the multiplicity of the zero of f_p at 1."""
        return self._m

    @property
    def eta(self) -> float:
        """Get the half-width factor of the forbidden arcs."""
        return self._eta

    @property
    def delta(self) -> Optional[float]:
        """Get delta when eta was selected automatically."""
        return self._delta

    @property
    def gamma(self) -> Optional[float]:
        """Get gamma when eta was selected automatically."""
        return self._gamma

    @property
    def n_qualifying(self) -> Optional[int]:
        """Get the number of nonvanishing arcs behind the automatic eta."""
        return self._n_qualifying

    @property
    def k_zeros(self) -> int:
        """Get the number of circle zeros outside the forbidden arcs."""
        return self._k_zeros

    @property
    def gauss_product(self) -> float:
        """Get (prod_{j=1}^{p-1} |f_p(zeta_p^j)|)^(1/p)."""
        return self._gauss_product

    @property
    def gauss_expected(self) -> float:
        """Get p^((p-1)/(2p))."""
        n = int(self._p)
        return n ** ((n - 1) / (2 * n))

    @property
    def bound(self) -> float:
        """Get the certified lower bound for M_0(f_p)."""
        return self._bound

    @property
    def bound_estimate(self) -> MahlerEstimate:
        """Get the bound as an estimate of M_0(f_p) from below."""
        return MahlerEstimate(
            self._bound, const.METHOD_PRODUCT_BOUND, FULL_CIRCLE, int(self._p), 0.0
        )

    @property
    def direct_m0(self) -> float:
        """Get the measured M_0(f_p)."""
        return self._direct_m0.value

    @property
    def direct_estimate(self) -> MahlerEstimate:
        """Get the estimate behind direct_m0."""
        return self._direct_m0

    @property
    def ratio(self) -> float:
        """Get M_0(f_p) / sqrt(p)."""
        return self.direct_m0 / math.sqrt(int(self._p))

    @property
    def holds(self) -> bool:
        """Return True if the measured M_0 dominates the bound."""
        return self.direct_m0 >= self._bound * (1 - const.CERTIFICATE_SLACK)

    @property
    def jensen(self) -> bool:
        """Return True if M_0(f_p) <= M_2(f_p) = sqrt(p - 1)."""
        return self.direct_m0 <= math.sqrt(int(self._p) - 1) * (
            1 + const.CERTIFICATE_SLACK
        )

    @property
    def degenerate(self) -> bool:
        """Return True if no zero improved the bound."""
        return self._k_zeros == 0

    @property
    def g_one(self) -> int:
        """Get g_p(1) where f_p = (z - 1)^m g_p."""
        return self._g_one

    @property
    def zero_check(self) -> Optional[InequalityCheck]:
        """Get the product bound with zeros applied to g_p."""
        return self._zero_check

    @property
    def estimator_gap(self) -> Optional[float]:
        """Get the relative gap between the root and quadrature estimators."""
        return self._estimator_gap


def _gauss_product(poly, p: int) -> float:
    moduli = eval_roots_of_unity(poly, p).moduli[1:]
    return math.exp(math.fsum([math.log(value) for value in moduli]) / p)


def build_certificate(
    p: Union[int, Prime],
    eta: Optional[float] = None,
    *,
    epsilon: float = const.DEFAULT_EPSILON,
    gamma: float = const.DEFAULT_GAMMA,
    refinement: int = const.DEFAULT_REFINEMENT,
    bisect_tol: float = const.DEFAULT_BISECT_TOL,
    root_max_prime: int = const.ROOT_M0_MAX_PRIME
) -> Certificate:
    """Replay the lower bound for M_0(f_p) and measure M_0(f_p) directly."""
    p = as_prime(p)
    n = int(p)
    if n < const.MIN_CERTIFICATE_PRIME:
        raise DomainError(
            "certificates need p >= {}".format(const.MIN_CERTIFICATE_PRIME)
        )
    poly = fekete(p)
    quotient, multiplicity = deflate_at_one(poly)
    zeros = locate_zeros(p, refinement, bisect_tol)
    delta = n_qualifying = None
    if eta is None:
        summary = select_arc_parameters(p, epsilon, gamma, zeros=zeros)
        eta, delta, n_qualifying = summary.eta, summary.delta, summary.n_qualifying
    elif not 0 < eta < math.pi / 2:
        raise DomainError("eta must lie in (0, pi/2)")
    else:
        gamma = None

    margin = 2 * bisect_tol * 2 * math.pi
    kept = []
    for t in zeros:
        if min(t, 1 - t) < 2 * bisect_tol:
            # z = 1 is divided out
            continue
        angle = 2 * math.pi * t
        if forbidden_distance(angle, n) >= eta / n + margin:
            kept.append(angle)

    quadrature = m0_uniform(
        poly, circle_zeros=circle_zero_angles(p, zeros, bisect_tol=bisect_tol)
    )
    direct = quadrature
    gap = None
    if n <= root_max_prime:
        direct = m0_from_roots(find_roots(poly))
        gap = abs(direct.value - quadrature.value) / direct.value
    zero_check = zero_product_bound_check(
        quotient, p, eta, kept, margin=margin, m0=direct.value
    )
    certificate = Certificate(
        p,
        multiplicity,
        eta,
        len(kept),
        _gauss_product(poly, n),
        direct,
        delta=delta,
        gamma=gamma,
        n_qualifying=n_qualifying,
        g_one=sum(quotient.to_list()),
        zero_check=zero_check,
        estimator_gap=gap,
    )
    if certificate.degenerate:
        _LOGGER.warning("Certificate for p = %s uses no circle zeros", p)
    _LOGGER.debug("Built %r", certificate)
    return certificate


def try_certificate(p: Union[int, Prime], eta: Optional[float] = None, **options):
    """Build a certificate, returning the error instead of raising it."""
    try:
        return build_certificate(p, eta, **options)
    except FeketeError as error:
        _LOGGER.warning("Certificate for p = %s failed: %s", p, error)
        return error


class CertificateSweep:
    """Define the certificates for a range of primes."""

    def __init__(self, certificates: List[Certificate], failures: Dict[int, str]):
        """Init the sweep."""
        self._certificates = certificates  # type: List[Certificate]
        self._failures = failures  # type: Dict[int, str]

    @classmethod
    def from_results(cls, primes: Iterable[Prime], results: Iterable) -> "CertificateSweep":
        """Collect per-prime results in prime order."""
        certificates = []
        failures = {}
        for prime, result in zip(primes, results):
            if isinstance(result, Certificate):
                certificates.append(result)
            else:
                failures[int(prime)] = format_error_message(result)
        return cls(certificates, failures)

    def __iter__(self):
        """Iterate over the certificates."""
        return iter(self._certificates)

    def __len__(self) -> int:
        """Get the number of certificates."""
        return len(self._certificates)

    def to_dict(self) -> dict:
        """Get the JSON-ready summary statistics."""
        return {
            "count": len(self._certificates),
            "failures": {str(p): message for p, message in self._failures.items()},
            "min_ratio": self.min_ratio,
            "min_k_fraction": self.min_k_fraction,
            "max_m": self.max_m,
            "all_hold": self.all_hold,
        }

    @property
    def certificates(self) -> List[Certificate]:
        """Get the certificates ordered by prime."""
        return self._certificates

    @property
    def failures(self) -> Dict[int, str]:
        """Get the error message per prime whose certificate failed."""
        return self._failures

    @property
    def min_ratio(self) -> Optional[float]:
        """Get the smallest M_0(f_p)/sqrt(p)."""
        return min((cert.ratio for cert in self._certificates), default=None)

    @property
    def min_k_fraction(self) -> Optional[float]:
        """Get the smallest k_zeros / p."""
        return min(
            (cert.k_zeros / int(cert.p) for cert in self._certificates), default=None
        )

    @property
    def max_m(self) -> Optional[int]:
        """Get the largest multiplicity at 1."""
        return max((cert.m for cert in self._certificates), default=None)

    @property
    def all_hold(self) -> bool:
        """Return True if every prime produced a certificate that holds."""
        return not self._failures and all(cert.holds for cert in self._certificates)


def certificate_primes(pmin: int, pmax: int) -> List[Prime]:
    """Get the primes in [pmin, pmax] that admit a certificate."""
    if pmin > pmax:
        raise DomainError("pmin must not exceed pmax")
    lo = max(pmin, const.MIN_CERTIFICATE_PRIME)
    if lo > pmax:
        return []
    return primes_in_range(lo, pmax)


def certificate_sweep(
    pmin: int,
    pmax: int,
    eta: Optional[float] = None,
    *,
    mapper: Callable = map,
    **options
) -> CertificateSweep:
    """Build one certificate per prime in [pmin, pmax]; failures are recorded."""
    primes = certificate_primes(pmin, pmax)
    results = list(mapper(lambda prime: try_certificate(prime, eta, **options), primes))
    sweep = CertificateSweep.from_results(primes, results)
    _LOGGER.debug("Certificate sweep [%d, %d]: %s", pmin, pmax, sweep.to_dict())
    return sweep
