"""Define the circle zeros module: H_p, zero location, arcs and the large sieve."""
import logging
import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import const
from .error import DomainError
from .mahler import InequalityCheck
from .numtheory import Prime, as_prime, legendre_symbols
from .polybase import (
    deflate_linear,
    derivative,
    eval_points,
    eval_roots_of_unity,
    fekete,
    littlewood_generator,
)

_LOGGER = logging.getLogger(__name__)


def _rotation(p: int) -> complex:
    return 1.0 if p % 4 == 1 else -1j


def h_eval(p: Union[int, Prime], t: float) -> float:
    """Evaluate H_p(t) from its real cosine (p = 1 mod 4) or sine sum."""
    p = int(as_prime(p))
    # H_p(t + 1) = -H_p(t); the true period is 2
    t = math.fmod(float(t), 2.0)
    half = (p - 1) // 2
    symbols = legendre_symbols(p)[1 : half + 1]
    frequencies = (2 * np.arange(1, half + 1) - p) * math.pi * t
    waves = np.cos(frequencies) if p % 4 == 1 else np.sin(frequencies)
    return 2.0 * math.fsum((symbols * waves).tolist())


def h_values(p: Union[int, Prime], ts: Sequence[float]) -> np.ndarray:
    """Evaluate H_p at many points through the complex route."""
    return _h_complex(int(as_prime(p)), np.asarray(ts, dtype=np.float64)).real


def _h_complex(p: int, ts: np.ndarray) -> np.ndarray:
    ts = np.fmod(ts, 2.0)
    values = eval_points(fekete(p), np.exp(2j * math.pi * ts))
    return _rotation(p) * np.exp(-1j * math.pi * p * ts) * values


class HGrid:
    """Define H_p sampled at t = j/(N p)."""

    def __init__(
        self, p: Prime, refinement: int, values: np.ndarray, max_imag: float
    ):
        """Init the grid."""
        values = np.asarray(values, dtype=np.float64)
        values.setflags(write=False)
        self._p = p  # type: Prime
        self._refinement = refinement  # type: int
        self._values = values  # type: np.ndarray
        self._max_imag = max_imag  # type: float

    def __len__(self) -> int:
        """Get the number of nodes N p."""
        return len(self._values)

    def __repr__(self):
        """Get a debug representation of the grid."""
        return "<HGrid p={} refinement={}>".format(self._p, self._refinement)

    @property
    def p(self) -> Prime:
        """Get the prime."""
        return self._p

    @property
    def refinement(self) -> int:
        """Get the refinement N."""
        return self._refinement

    @property
    def values(self) -> np.ndarray:
        """Get H_p(j/(N p))."""
        return self._values

    @property
    def nodes(self) -> np.ndarray:
        """Get the node positions t."""
        return np.arange(len(self._values)) / len(self._values)

    @property
    def max_imag(self) -> float:
        """Get the largest discarded imaginary part."""
        return self._max_imag

    @property
    def tol_zero(self) -> float:
        """Get the threshold below which a node counts as an exact zero."""
        return const.ZERO_NODE_TOL * math.sqrt(int(self._p))


def h_grid(p: Union[int, Prime], refinement: int) -> HGrid:
    """Sample H_p on the N p-point grid."""
    p = as_prime(p)
    if refinement < 1:
        raise DomainError("refinement must be at least 1")
    size = refinement * int(p)
    grid = eval_roots_of_unity(fekete(p), size)
    # exp(-i pi p t_j) = exp(-i pi j / N), reduced exactly mod 2N
    index = np.arange(size) % (2 * refinement)
    phase = np.exp(-1j * math.pi * index / refinement) * _rotation(int(p))
    complex_values = phase * grid.values
    max_imag = float(np.abs(complex_values.imag).max())
    if max_imag >= const.H_CONSISTENCY_TOL * math.sqrt(int(p)):
        _LOGGER.warning("H_%s grid has imaginary residue %.3e", p, max_imag)
    return HGrid(p, refinement, complex_values.real, max_imag)


def sign_agreements(p: Union[int, Prime]) -> int:
    """Count k in 1..p-2 with (k|p) = (k+1|p)."""
    p = as_prime(p)
    if int(p) < 5:
        raise DomainError("sign_agreements requires p >= 5")
    symbols = legendre_symbols(p)[1:]
    return int(np.count_nonzero(symbols[:-1] == symbols[1:]))


def locate_zeros(
    p: Union[int, Prime],
    refinement: int = const.DEFAULT_REFINEMENT,
    bisect_tol: float = const.DEFAULT_BISECT_TOL,
) -> List[float]:
    """Locate the sign changes of H_p on [0, 1) and refine them by bisection.

    Nodes with |H_p| below 1e-8 sqrt(p) are reported as zeros themselves.
    Zeros without a sign change between nodes are not found.
    """
    p = as_prime(p)
    if refinement < 2:
        raise DomainError("locate_zeros requires refinement >= 2")
    grid = h_grid(p, refinement)
    values = grid.values
    size = len(values)
    on_node = np.abs(values) < grid.tol_zero
    # one zero per run of consecutive tiny nodes
    run_start = on_node & ~np.roll(on_node, 1)
    if on_node.all():
        run_start[:] = False
        run_start[0] = True
    node_zeros = np.nonzero(run_start)[0] / size

    signs = np.where(on_node, 0.0, np.sign(values))
    following = np.roll(signs, -1)
    following[-1] = -signs[0]
    brackets = np.nonzero(signs * following < 0)[0]
    lo = brackets / size
    hi = (brackets + 1) / size
    lo_sign = signs[brackets]
    steps = 0
    while len(brackets) and steps < const.MAX_BISECT_STEPS:
        if (hi - lo).max() < bisect_tol:
            break
        mid = 0.5 * (lo + hi)
        mid_values = h_values(p, mid)
        exact = mid_values == 0
        keep_lo = np.sign(mid_values) == lo_sign
        lo = np.where(keep_lo | exact, mid, lo)
        hi = np.where(keep_lo & ~exact, hi, mid)
        steps += 1
    refined = 0.5 * (lo + hi)
    zeros = np.sort(np.concatenate((refined, node_zeros)) % 1.0)
    if len(zeros) > 1:
        distinct = np.concatenate(([True], np.diff(zeros) >= bisect_tol))
        zeros = zeros[distinct]
        if len(zeros) > 1 and 1.0 - zeros[-1] + zeros[0] < bisect_tol:
            zeros = zeros[:-1]
    _LOGGER.debug(
        "Located %d zeros of H_%s (%d brackets, %d bisection steps)",
        len(zeros), p, len(brackets), steps,
    )
    return zeros.tolist()


def circle_zero_angles(
    p: Union[int, Prime],
    zeros: Optional[Sequence[float]] = None,
    *,
    refinement: int = const.DEFAULT_REFINEMENT,
    bisect_tol: float = const.DEFAULT_BISECT_TOL
) -> List[float]:
    """Get the angles of the located zeros of f_p on the unit circle.

    z = 1 and z = -1 are repeated by their exact multiplicity; zeros are the
    located t values, computed when not given.
    """
    p = as_prime(p)
    if zeros is None:
        zeros = locate_zeros(p, refinement, bisect_tol)
    poly = fekete(p)
    _, at_one = deflate_linear(poly, 1)
    _, at_minus_one = deflate_linear(poly, -1)
    snap = max(2 * bisect_tol, 1e-10)
    angles = [0.0] * at_one + [math.pi] * at_minus_one
    for t in zeros:
        if min(t, 1 - t) < snap or abs(t - 0.5) < snap:
            continue
        angles.append(2 * math.pi * t)
    return angles


class ArcReport:
    """Define the classification of one arc centred at (2k+1) pi / p."""

    def __init__(
        self,
        k: int,
        center_value: float,
        deriv_max: float,
        deriv_argmax: float,
        nonvanishing: bool,
        has_zero_in_arc: bool,
        zero_near_center: bool,
    ):
        """Init the arc report."""
        self._k = k  # type: int
        self._center_value = center_value  # type: float
        self._deriv_max = deriv_max  # type: float
        self._deriv_argmax = deriv_argmax  # type: float
        self._nonvanishing = nonvanishing  # type: bool
        self._has_zero_in_arc = has_zero_in_arc  # type: bool
        self._zero_near_center = zero_near_center  # type: bool

    def __repr__(self):
        """Get a debug representation of the arc."""
        return "<ArcReport k={} center={:.4g} deriv_max={:.4g} nonvanishing={}>".format(
            self._k, self._center_value, self._deriv_max, self._nonvanishing
        )

    def to_dict(self) -> dict:
        """Get a JSON-ready representation."""
        return {
            "k": self._k,
            "center_value": self._center_value,
            "deriv_max": self._deriv_max,
            "nonvanishing": self._nonvanishing,
            "has_zero_in_arc": self._has_zero_in_arc,
        }

    @property
    def k(self) -> int:
        """Get the arc index."""
        return self._k

    @property
    def center_value(self) -> float:
        """Get |f_p| at the arc centre."""
        return self._center_value

    @property
    def deriv_max(self) -> float:
        """Get the sampled maximum of |f_p'| on the half-width pi/(2p) arc."""
        return self._deriv_max

    @property
    def deriv_argmax(self) -> float:
        """Get the sampled angle where |f_p'| is largest on the arc."""
        return self._deriv_argmax

    @property
    def nonvanishing(self) -> bool:
        """Return True if f_p is certified not to vanish within eta/p of the centre."""
        return self._nonvanishing

    @property
    def has_zero_in_arc(self) -> bool:
        """Return True if a located zero of H_p lies between k/p and (k+1)/p."""
        return self._has_zero_in_arc

    @property
    def zero_near_center(self) -> bool:
        """Return True if a located zero lies within eta/p of the centre."""
        return self._zero_near_center


class ArcSummary:
    """Define the classification of all p arcs for one (delta, gamma, eta)."""

    def __init__(
        self,
        p: Prime,
        delta: float,
        gamma: float,
        eta: float,
        reports: List[ArcReport],
        samples_per_arc: int,
    ):
        """Init the summary."""
        self._p = p  # type: Prime
        self._delta = delta  # type: float
        self._gamma = gamma  # type: float
        self._eta = eta  # type: float
        self._reports = reports  # type: List[ArcReport]
        self._samples_per_arc = samples_per_arc  # type: int

    def __iter__(self):
        """Iterate over the arc reports."""
        return iter(self._reports)

    def __len__(self) -> int:
        """Get the number of arcs."""
        return len(self._reports)

    def __repr__(self):
        """Get a debug representation of the summary."""
        return "<ArcSummary p={} delta={} qualifying={}>".format(
            self._p, self._delta, self.n_qualifying
        )

    def to_dict(self) -> dict:
        """Get a JSON-ready summary without the per-arc records."""
        return {
            "p": int(self._p),
            "delta": self._delta,
            "gamma": self._gamma,
            "eta": self._eta,
            "samples_per_arc": self._samples_per_arc,
            "n_big_center": self.n_big_center,
            "n_small_deriv": self.n_small_deriv,
            "n_qualifying": self.n_qualifying,
            "n_inconsistent": self.n_inconsistent,
        }

    @property
    def p(self) -> Prime:
        """Get the prime."""
        return self._p

    @property
    def delta(self) -> float:
        """Get the centre threshold factor."""
        return self._delta

    @property
    def gamma(self) -> float:
        """Get the derivative threshold factor."""
        return self._gamma

    @property
    def eta(self) -> float:
        """Get the half-width factor of the nonvanishing arcs."""
        return self._eta

    @property
    def samples_per_arc(self) -> int:
        """Get the derivative sampling density."""
        return self._samples_per_arc

    @property
    def reports(self) -> List[ArcReport]:
        """Get the per-arc reports ordered by k."""
        return self._reports

    @property
    def n_big_center(self) -> int:
        """Get the number of arcs with centre value above delta sqrt(p)."""
        bound = self._delta * math.sqrt(int(self._p))
        return sum(1 for arc in self._reports if arc.center_value > bound)

    @property
    def n_small_deriv(self) -> int:
        """Get the number of arcs with derivative maximum at most gamma p^(3/2)."""
        bound = self._gamma * int(self._p) ** 1.5
        return sum(1 for arc in self._reports if arc.deriv_max <= bound)

    @property
    def n_qualifying(self) -> int:
        """Get the number of arcs satisfying both thresholds."""
        return sum(1 for arc in self._reports if arc.nonvanishing)

    @property
    def n_inconsistent(self) -> int:
        """Get the number of nonvanishing arcs that contain a located zero."""
        return sum(
            1 for arc in self._reports if arc.nonvanishing and arc.zero_near_center
        )


def arc_centers(p: int) -> np.ndarray:
    """Get the centre angles (2k+1) pi / p."""
    return (2 * np.arange(int(p)) + 1) * math.pi / int(p)


def _derivative_samples(
    p: int, samples_per_arc: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Sample |f_p'| on every arc of half-width pi/(2p); return max and argmax."""
    slope = derivative(fekete(p))
    offsets = np.linspace(-math.pi / (2 * p), math.pi / (2 * p), samples_per_arc)
    moduli = np.empty((samples_per_arc, p))
    for row, offset in enumerate(offsets):
        moduli[row] = eval_roots_of_unity(slope, p, math.pi + p * offset).moduli
    best = moduli.argmax(axis=0)
    return moduli.max(axis=0), arc_centers(p) + offsets[best]


def _nearest_arc(angles: np.ndarray, p: int) -> Tuple[np.ndarray, np.ndarray]:
    index = np.floor((angles * p / math.pi - 1) / 2 + 0.5)
    distance = np.abs(angles - (2 * index + 1) * math.pi / p)
    return index.astype(np.int64) % p, distance


def arc_classify(
    p: Union[int, Prime],
    delta: float,
    gamma: float,
    eta: float,
    *,
    samples_per_arc: int = const.ARC_SAMPLES,
    zeros: Optional[Sequence[float]] = None,
    refinement: int = const.DEFAULT_REFINEMENT,
    bisect_tol: float = const.DEFAULT_BISECT_TOL
) -> ArcSummary:
    """Classify the p arcs by centre value and derivative maximum."""
    p = as_prime(p)
    if delta <= 0 or gamma <= 0:
        raise DomainError("delta and gamma must be positive")
    if not 0 < eta < min(delta / gamma, math.pi / 2):
        raise DomainError(
            "eta = {} must lie in (0, min(delta/gamma, pi/2))".format(eta)
        )
    if samples_per_arc < 2:
        raise DomainError("at least two derivative samples per arc are required")
    n = int(p)
    centers = eval_roots_of_unity(fekete(p), n, math.pi).moduli
    deriv_max, deriv_argmax = _derivative_samples(n, samples_per_arc)
    if zeros is None:
        zeros = locate_zeros(p, refinement, bisect_tol)
    zero_ts = np.asarray(zeros, dtype=np.float64)
    in_arc = np.zeros(n, dtype=bool)
    near_center = np.zeros(n, dtype=bool)
    if len(zero_ts):
        in_arc[np.floor(zero_ts * n).astype(np.int64) % n] = True
        nearest, distance = _nearest_arc(2 * math.pi * zero_ts, n)
        near_center[nearest[distance < eta / n]] = True
    big = centers > delta * math.sqrt(n)
    small = deriv_max <= gamma * n ** 1.5
    reports = [
        ArcReport(
            k,
            float(centers[k]),
            float(deriv_max[k]),
            float(deriv_argmax[k]),
            bool(big[k] and small[k]),
            bool(in_arc[k]),
            bool(near_center[k]),
        )
        for k in range(n)
    ]
    summary = ArcSummary(p, delta, gamma, eta, reports, samples_per_arc)
    _LOGGER.debug("Classified arcs: %s", summary.to_dict())
    return summary


def auto_eta(delta: float, gamma: float) -> float:
    """Get eta = 0.9 delta / gamma capped below pi/2."""
    return min(const.ETA_FACTOR * delta / gamma, const.ETA_CAP)


def select_arc_parameters(
    p: Union[int, Prime],
    epsilon: float = const.DEFAULT_EPSILON,
    gamma: float = const.DEFAULT_GAMMA,
    *,
    zeros: Optional[Sequence[float]] = None,
    samples_per_arc: int = const.ARC_SAMPLES
) -> ArcSummary:
    """Pick the largest scheduled delta with enough large arc centres."""
    p = as_prime(p)
    n = int(p)
    centers = eval_roots_of_unity(fekete(p), n, math.pi).moduli
    needed = (1 - epsilon / 2) * n
    chosen = None
    for delta in const.DELTA_SCHEDULE:
        if np.count_nonzero(centers > delta * math.sqrt(n)) >= needed:
            chosen = delta
            break
    if chosen is None:
        chosen = const.DELTA_SCHEDULE[-1]
        _LOGGER.warning("No scheduled delta reaches %.1f large centres for p = %s",
                        needed, p)
    return arc_classify(
        p,
        chosen,
        gamma,
        auto_eta(chosen, gamma),
        samples_per_arc=samples_per_arc,
        zeros=zeros,
    )


class SieveCheck(InequalityCheck):
    """Define one instance of the large sieve inequality."""

    def __init__(self, lhs: float, rhs: float, delta_sep: float, degree: int):
        """Init the check."""
        super().__init__(lhs, rhs)
        self._delta_sep = delta_sep  # type: float
        self._degree = degree  # type: int

    def __iter__(self):
        """Unpack as (lhs, rhs, delta_sep, holds)."""
        return iter((self.lhs, self.rhs, self._delta_sep, self.holds))

    @property
    def delta_sep(self) -> float:
        """Get the minimal cyclic gap between the angles."""
        return self._delta_sep

    @property
    def degree(self) -> int:
        """Get the trigonometric degree n."""
        return self._degree


def large_sieve_check(
    coeffs: Sequence[complex], angles: Sequence[float]
) -> SieveCheck:
    """Check sum_j |P(e^{i t_j})|^2 against the large sieve bound.

    coeffs holds a_{-n}, ..., a_n.
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    if len(coeffs) % 2 != 1:
        raise DomainError("a trigonometric polynomial needs 2n + 1 coefficients")
    angles = np.asarray(angles, dtype=np.float64)
    if len(angles) < 1:
        raise DomainError("at least one angle is required")
    if angles[0] < 0 or angles[-1] > 2 * math.pi or np.any(np.diff(angles) <= 0):
        raise DomainError("angles must increase strictly within [0, 2 pi]")
    degree = (len(coeffs) - 1) // 2
    if len(angles) == 1:
        delta_sep = 2 * math.pi
    else:
        gaps = np.diff(angles).tolist() + [2 * math.pi - (angles[-1] - angles[0])]
        delta_sep = min(gaps)
    if delta_sep <= 0:
        raise DomainError("the first and last angles coincide on the circle")
    # |P(e^{it})| = |sum_k a_k e^{i(k+n)t}|
    values = eval_points(coeffs, np.exp(1j * angles))
    lhs = math.fsum((np.abs(values) ** 2).tolist())
    energy = 2 * math.pi * math.fsum((np.abs(coeffs) ** 2).tolist())
    rhs = ((2 * degree + 1) / (2 * math.pi) + 1 / delta_sep) * energy
    return SieveCheck(lhs, rhs, delta_sep, degree)


def shifted_derivative_coefficients(p: Union[int, Prime]) -> np.ndarray:
    """Get a_{-n..n} of z^{(3-p)/2} f_p'(z) with n = (p-1)/2."""
    slope = derivative(fekete(p))
    return np.concatenate(([0], slope.coeffs)).astype(np.complex128)


class SieveChain:
    """Define the large sieve chain bounding the arcs with a large derivative."""

    def __init__(
        self,
        p: Prime,
        gamma: float,
        m_bad: int,
        centre_check: SieveCheck,
        bad_check: Optional[SieveCheck],
    ):
        """Init the chain."""
        self._p = p  # type: Prime
        self._gamma = gamma  # type: float
        self._m_bad = m_bad  # type: int
        self._centre_check = centre_check  # type: SieveCheck
        self._bad_check = bad_check  # type: Optional[SieveCheck]

    def to_dict(self) -> dict:
        """Get a JSON-ready representation."""
        bad = self._bad_check
        return {
            "p": int(self._p),
            "gamma": self._gamma,
            "m_bad": self._m_bad,
            "m_bound": self.m_bound,
            "centre_lhs": self._centre_check.lhs,
            "centre_rhs": self._centre_check.rhs,
            "bad_lhs": bad.lhs if bad else 0.0,
            "bad_rhs": bad.rhs if bad else 0.0,
            "parseval_bound": self.parseval_bound,
            "final_bound": self.final_bound,
            "final_link_holds": self.final_link_holds,
            "holds": self.holds,
        }

    @property
    def p(self) -> Prime:
        """Get the prime."""
        return self._p

    @property
    def m_bad(self) -> int:
        """Get the number of arcs with max |f_p'| >= gamma p^(3/2)."""
        return self._m_bad

    @property
    def m_bound(self) -> float:
        """Get gamma^-2 p / 2."""
        return int(self._p) / (2 * self._gamma ** 2)

    @property
    def centre_check(self) -> SieveCheck:
        """Get the sieve inequality at the p arc centres."""
        return self._centre_check

    @property
    def bad_check(self) -> Optional[SieveCheck]:
        """Get the sieve inequality at the maximisers of the bad arcs."""
        return self._bad_check

    @property
    def parseval_bound(self) -> float:
        """Get 3p (p-1)p(2p-1)/6, the sieve bound at separation pi/p."""
        p = int(self._p)
        return 3 * p * (p - 1) * p * (2 * p - 1) / 6

    @property
    def final_bound(self) -> float:
        """Get p^4 / 2."""
        return int(self._p) ** 4 / 2

    @property
    def final_link_holds(self) -> bool:
        """Return True if the Parseval bound is at most p^4 / 2.

        The left side is p^2 (p - 1)(2p - 1) / 2, so this is False for every p.
        """
        return self.parseval_bound <= self.final_bound

    @property
    def holds(self) -> bool:
        """Return True if every valid link of the chain holds."""
        p = int(self._p)
        links = [self._centre_check.holds, self._m_bad <= self.m_bound]
        if self._bad_check is not None:
            floor = self._m_bad * self._gamma ** 2 * p ** 3
            links.extend(
                [
                    self._bad_check.holds,
                    floor <= self._bad_check.lhs * (1 + const.INEQUALITY_SLACK),
                    self._bad_check.rhs
                    <= self.parseval_bound * (1 + const.INEQUALITY_SLACK),
                ]
            )
        return all(links)


def derivative_sieve_chain(
    p: Union[int, Prime],
    gamma: float = const.DEFAULT_GAMMA,
    *,
    samples_per_arc: int = const.ARC_SAMPLES
) -> SieveChain:
    """Run the large sieve on z^{(3-p)/2} f_p'(z) at the arc centres and bad arcs."""
    p = as_prime(p)
    n = int(p)
    coeffs = shifted_derivative_coefficients(p)
    centre_check = large_sieve_check(coeffs, arc_centers(n))
    deriv_max, deriv_argmax = _derivative_samples(n, samples_per_arc)
    bad = np.nonzero(deriv_max >= gamma * n ** 1.5)[0]
    bad_check = None
    if len(bad):
        bad_check = large_sieve_check(coeffs, np.sort(deriv_argmax[bad]))
    return SieveChain(p, gamma, len(bad), centre_check, bad_check)


def random_sieve_suite(
    instances: int, max_degree: int, seed: int
) -> List[SieveCheck]:
    """Run the large sieve on seeded random polynomials at separated angles."""
    rng = littlewood_generator(seed)
    checks = []
    for _ in range(instances):
        degree = int(rng.integers(0, max_degree + 1))
        coeffs = rng.normal(size=2 * degree + 1) + 1j * rng.normal(size=2 * degree + 1)
        count = int(rng.integers(1, 4 * degree + 3))
        angles = np.sort(rng.uniform(0, 2 * math.pi, size=count))
        angles = angles[np.concatenate(([True], np.diff(angles) > 1e-9))]
        checks.append(large_sieve_check(coeffs, angles))
    return checks


def max_modulus(p: Union[int, Prime], samples: int) -> Tuple[float, float]:
    """Get max and min of |f_p| on the midpoint grid of the given size."""
    p = as_prime(p)
    if samples < 4 * int(p):
        raise DomainError("max_modulus needs at least 4p samples")
    moduli = eval_roots_of_unity(fekete(p), samples, math.pi).moduli
    return float(moduli.max()), float(moduli.min())
