"""Define the polynomial module: constructors, evaluation kernels, deflation."""
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import const
from .error import DomainError, ExactArithmeticError, SizeError
from .numtheory import Prime, as_prime, legendre_symbols

_LOGGER = logging.getLogger(__name__)


class IntPolynomial:
    """Define an immutable polynomial with 64-bit integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        """Init the polynomial from coefficients ordered by ascending power."""
        values = [int(c) for c in coeffs]
        if not values:
            raise DomainError("a polynomial needs at least one coefficient")
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        for value in values:
            if value > const.INT64_MAX or value < const.INT64_MIN:
                raise ExactArithmeticError(
                    "coefficient {} does not fit in 64 bits".format(value)
                )
        array = np.array(values, dtype=np.int64)
        array.setflags(write=False)
        self._coeffs = array  # type: np.ndarray

    def __len__(self) -> int:
        """Get the number of stored coefficients (degree + 1)."""
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        """Compare coefficient-wise."""
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return np.array_equal(self._coeffs, other.coeffs)

    def __hash__(self) -> int:
        """Hash the coefficient bytes."""
        return hash(self._coeffs.tobytes())

    def __call__(self, z: complex) -> complex:
        """Evaluate at a single point."""
        return eval_point(self, z)

    def __str__(self):
        """Get a user-readable representation of the polynomial."""
        terms = []
        for power, coeff in enumerate(self.to_list()):
            if coeff:
                terms.append("{}*z^{}".format(coeff, power) if power else str(coeff))
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        """Get a debug representation of the polynomial."""
        return "IntPolynomial({})".format(self.to_list())

    def to_list(self) -> List[int]:
        """Get the coefficients as plain integers."""
        return [int(c) for c in self._coeffs]

    @property
    def coeffs(self) -> np.ndarray:
        """Get the read-only coefficient array (index i holds z^i)."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Get the index of the last nonzero coefficient."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        """Return True for the zero polynomial."""
        return len(self._coeffs) == 1 and self._coeffs[0] == 0

    @property
    def leading(self) -> int:
        """Get the leading coefficient."""
        return int(self._coeffs[-1])

    @property
    def valuation(self) -> int:
        """Get the multiplicity of the root at the origin."""
        nonzero = np.nonzero(self._coeffs)[0]
        return int(nonzero[0]) if len(nonzero) else 0

    @property
    def l1_norm(self) -> int:
        """Get the sum of the absolute coefficient values."""
        return int(np.abs(self._coeffs).sum())

    @property
    def l2_norm_squared(self) -> int:
        """Get the sum of squared coefficients."""
        return sum(c * c for c in self.to_list())


Polynomial = Union[IntPolynomial, Sequence[complex], np.ndarray]


def coefficients(poly: Polynomial) -> np.ndarray:
    """Get the ascending coefficient array of any supported polynomial input."""
    if isinstance(poly, IntPolynomial):
        return poly.coeffs
    array = np.asarray(poly)
    if array.ndim != 1 or len(array) == 0:
        raise DomainError("coefficients must be a nonempty 1-d sequence")
    return array


def degree_of(poly: Polynomial) -> int:
    """Get the degree of any supported polynomial input."""
    array = coefficients(poly)
    nonzero = np.nonzero(array)[0]
    return int(nonzero[-1]) if len(nonzero) else 0


class ComplexSampleGrid:
    """Define the values of a polynomial at equally spaced points of the circle."""

    def __init__(self, values: np.ndarray, start: float, step: float, method: str):
        """Init the grid; values[j] is taken at the angle start + j*step."""
        values = np.asarray(values, dtype=np.complex128)
        values.setflags(write=False)
        self._values = values  # type: np.ndarray
        self._start = start  # type: float
        self._step = step  # type: float
        self._method = method  # type: str

    def __len__(self) -> int:
        """Get the grid cardinality."""
        return len(self._values)

    def __repr__(self):
        """Get a debug representation of the grid."""
        return "<ComplexSampleGrid size={} offset={} method={}>".format(
            self.size, self.offset, self._method
        )

    @property
    def size(self) -> int:
        """Get the grid cardinality M."""
        return len(self._values)

    @property
    def offset(self) -> float:
        """Get the phase offset phi of a roots-of-unity grid."""
        return self._start * self.size

    @property
    def start(self) -> float:
        """Get the angle of the first node."""
        return self._start

    @property
    def step(self) -> float:
        """Get the angular spacing."""
        return self._step

    @property
    def method(self) -> str:
        """Get the evaluation path used (direct or chirp)."""
        return self._method

    @property
    def values(self) -> np.ndarray:
        """Get the read-only sample values."""
        return self._values

    @property
    def angles(self) -> np.ndarray:
        """Get the node angles in radians."""
        return self._start + self._step * np.arange(self.size)

    @property
    def moduli(self) -> np.ndarray:
        """Get |values|."""
        return np.abs(self._values)


def fekete(p: Union[int, Prime]) -> IntPolynomial:
    """Build the Fekete polynomial sum_{k<p} (k|p) z^k."""
    p = as_prime(p)
    return IntPolynomial(legendre_symbols(p))


def rudin_shapiro(n: int) -> Tuple[IntPolynomial, IntPolynomial]:
    """Build the Rudin-Shapiro pair (P_n, Q_n)."""
    if n < 0:
        raise DomainError("Rudin-Shapiro order must be nonnegative")
    if n > const.MAX_RUDIN_SHAPIRO_ORDER:
        raise SizeError("n", n, const.MAX_RUDIN_SHAPIRO_ORDER)
    first = np.ones(1, dtype=np.int64)
    second = np.ones(1, dtype=np.int64)
    for _ in range(n):
        # z^(2^k) Q_k starts right after the last coefficient of P_k
        first, second = (
            np.concatenate((first, second)),
            np.concatenate((first, -second)),
        )
    return IntPolynomial(first), IntPolynomial(second)


def littlewood_generator(seed: int) -> np.random.Generator:
    """Get the seeded generator used for every random Littlewood polynomial."""
    return np.random.Generator(np.random.PCG64(int(seed) & 0xFFFFFFFFFFFFFFFF))


def random_littlewood(n: int, seed: int) -> IntPolynomial:
    """Draw a degree-n polynomial with independent uniform +-1 coefficients."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    signs = littlewood_generator(seed).integers(0, 2, size=n + 1, dtype=np.int64)
    return IntPolynomial(2 * signs - 1)


def eval_point(poly: Polynomial, z: complex) -> complex:
    """Evaluate by Horner's rule from the highest degree down."""
    acc = 0j
    z = complex(z)
    for coeff in reversed(coefficients(poly).tolist()):
        acc = acc * z + coeff
    return acc


def eval_points(poly: Polynomial, points: np.ndarray) -> np.ndarray:
    """Evaluate by vectorised Horner's rule at many points."""
    points = np.asarray(points, dtype=np.complex128)
    return np.polyval(coefficients(poly)[::-1], points).astype(np.complex128)


def chirp_z(
    x: np.ndarray,
    m: int,
    step: float,
    start: float = 0.0,
    *,
    modulus: Optional[int] = None
) -> np.ndarray:
    """Compute X_j = sum_k x_k exp(i k (start + j step)) for j < m (Bluestein).

    Passing modulus = M asserts step = 2 pi / M and reduces the chirp phases
    exactly in integer arithmetic.
    """
    x = np.asarray(x, dtype=np.complex128)
    n = len(x)
    index = np.arange(max(m, n), dtype=np.int64)
    if modulus:
        phase = np.pi * ((index * index) % (2 * modulus)) / modulus
    else:
        phase = 0.5 * step * index.astype(np.float64) ** 2
    chirp = np.exp(1j * phase)
    weighted = x * np.exp(1j * start * np.arange(n)) * chirp[:n]
    length = 1 << int(math.ceil(math.log2(n + m - 1))) if n + m > 2 else 1
    kernel = np.zeros(length, dtype=np.complex128)
    kernel[:m] = np.conj(chirp[:m])
    if n > 1:
        kernel[length - n + 1 :] = np.conj(chirp[1:n])[::-1]
    convolved = np.fft.ifft(np.fft.fft(weighted, length) * np.fft.fft(kernel))
    return chirp[:m] * convolved[:m]


def eval_roots_of_unity(
    poly: Polynomial,
    size: int,
    offset: float = 0.0,
    *,
    threshold: int = const.DIRECT_EVAL_THRESHOLD
) -> ComplexSampleGrid:
    """Evaluate at exp(i (2 pi j + offset) / size) for j < size."""
    if size < 1:
        raise DomainError("grid size must be positive")
    start = offset / size
    step = 2 * math.pi / size
    coeffs = coefficients(poly)
    if size <= threshold:
        points = np.exp(1j * (start + step * np.arange(size)))
        return ComplexSampleGrid(
            eval_points(coeffs, points), start, step, const.EVAL_DIRECT
        )
    folded = coeffs.astype(np.complex128)
    if len(folded) > size:
        # z^size == exp(i offset) on this grid
        blocks = -(-len(folded) // size)
        padded = np.zeros(blocks * size, dtype=np.complex128)
        padded[: len(folded)] = folded
        twist = np.exp(1j * offset * np.arange(blocks))
        folded = (padded.reshape(blocks, size) * twist[:, None]).sum(axis=0)
    values = chirp_z(folded, size, step, start, modulus=size)
    _LOGGER.debug("Chirp evaluation of degree %d on %d nodes", len(coeffs) - 1, size)
    return ComplexSampleGrid(values, start, step, const.EVAL_CHIRP)


def eval_arc(
    poly: Polynomial,
    alpha: float,
    beta: float,
    size: int,
    *,
    threshold: int = const.DIRECT_EVAL_THRESHOLD
) -> ComplexSampleGrid:
    """Evaluate at the midpoint nodes alpha + (beta - alpha)(j + 1/2)/size."""
    if size < 1:
        raise DomainError("grid size must be positive")
    if not alpha < beta <= alpha + 2 * math.pi + 1e-12:
        raise DomainError("arc [{}, {}] is not a valid arc".format(alpha, beta))
    step = (beta - alpha) / size
    start = alpha + 0.5 * step
    if abs(beta - alpha - 2 * math.pi) < 1e-12:
        return eval_roots_of_unity(
            poly, size, size * start, threshold=threshold
        )
    if size <= threshold:
        points = np.exp(1j * (start + step * np.arange(size)))
        values = eval_points(poly, points)
        return ComplexSampleGrid(values, start, step, const.EVAL_DIRECT)
    values = chirp_z(coefficients(poly), size, step, start)
    return ComplexSampleGrid(values, start, step, const.EVAL_CHIRP)


def derivative(poly: IntPolynomial) -> IntPolynomial:
    """Differentiate exactly."""
    coeffs = poly.to_list()
    if len(coeffs) == 1:
        return IntPolynomial([0])
    return IntPolynomial(k * c for k, c in enumerate(coeffs) if k)


def _checked(value: int) -> int:
    if value > const.INT64_MAX or value < const.INT64_MIN:
        raise ExactArithmeticError(
            "intermediate value {} overflows 64 bits".format(value)
        )
    return value


def deflate_linear(poly: IntPolynomial, root: int) -> Tuple[IntPolynomial, int]:
    """Divide out (z - root) as often as it divides exactly, root in {1, -1}."""
    if root not in (1, -1):
        raise DomainError("exact deflation supports the roots 1 and -1 only")
    if poly.is_zero:
        raise DomainError("cannot deflate the zero polynomial")
    coeffs = poly.to_list()
    multiplicity = 0
    while len(coeffs) > 1:
        # synthetic division, highest degree first
        quotient = [0] * (len(coeffs) - 1)
        carry = coeffs[-1]
        for index in range(len(coeffs) - 2, -1, -1):
            quotient[index] = carry
            carry = _checked(coeffs[index] + root * carry)
        if carry != 0:
            break
        coeffs = quotient
        multiplicity += 1
    return IntPolynomial(coeffs), multiplicity


def deflate_at_one(poly: IntPolynomial) -> Tuple[IntPolynomial, int]:
    """Split poly = (z - 1)^m g with g(1) != 0, exactly."""
    quotient, multiplicity = deflate_linear(poly, 1)
    _LOGGER.debug(
        "Deflated degree %d at z = 1 with multiplicity %d", poly.degree, multiplicity
    )
    return quotient, multiplicity


def expand_deflation(poly: IntPolynomial, multiplicity: int) -> IntPolynomial:
    """Multiply exactly by (z - 1)^multiplicity."""
    coeffs = poly.to_list()
    for _ in range(multiplicity):
        shifted = [0] + coeffs
        coeffs = [
            _checked(high - low) for high, low in zip(shifted, coeffs + [0])
        ]
    return IntPolynomial(coeffs)


def reciprocity_sign(poly: IntPolynomial, p: int) -> int:
    """Return +1 if z^p Q(1/z) = Q(z), -1 if it equals -Q(z), else 0."""
    coeffs = np.zeros(int(p) + 1, dtype=np.int64)
    if poly.degree > int(p):
        return 0
    coeffs[: len(poly)] = poly.coeffs
    reflected = coeffs[::-1]
    if np.array_equal(reflected, coeffs):
        return 1
    if np.array_equal(reflected, -coeffs):
        return -1
    return 0
