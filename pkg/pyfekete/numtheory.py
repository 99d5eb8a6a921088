"""Define the number theory module: primes and Legendre symbols."""
import functools
from typing import List, Union

import numpy as np

from .error import DomainError

# Deterministic for every n < 3.3e24, which covers the 64-bit range.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Return True if n is prime (deterministic Miller-Rabin)."""
    n = int(n)
    if n < 2:
        raise DomainError("is_prime requires n >= 2, got {}".format(n))
    for witness in _WITNESSES:
        if n == witness:
            return True
        if n % witness == 0:
            return False
    exponent = n - 1
    shift = 0
    while exponent % 2 == 0:
        exponent //= 2
        shift += 1
    for witness in _WITNESSES:
        x = pow(witness, exponent, n)
        if x in (1, n - 1):
            continue
        for _ in range(shift - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime:
    """Define an odd prime, checked on construction."""

    __slots__ = ("_value",)

    def __init__(self, value: Union[int, "Prime"]):
        """Init the prime, validating primality."""
        value = int(value)
        if value < 3 or not is_prime(value):
            raise DomainError("{} is not an odd prime".format(value))
        self._value = value  # type: int

    def __int__(self) -> int:
        """Get the prime as an int."""
        return self._value

    def __index__(self) -> int:
        """Allow use as a sequence index or range bound."""
        return self._value

    def __eq__(self, other) -> bool:
        """Compare against primes and plain integers."""
        if isinstance(other, (Prime, int)):
            return self._value == int(other)
        return NotImplemented

    def __lt__(self, other) -> bool:
        """Order primes by value."""
        return self._value < int(other)

    def __hash__(self) -> int:
        """Hash as the underlying integer."""
        return hash(self._value)

    def __str__(self):
        """Get a user-readable representation of the prime."""
        return str(self._value)

    def __repr__(self):
        """Get a debug representation of the prime."""
        return "Prime({})".format(self._value)

    @property
    def value(self) -> int:
        """Get the prime value."""
        return self._value

    @property
    def residue_mod_4(self) -> int:
        """Get p mod 4 (1 or 3)."""
        return self._value % 4

    @property
    def minus_one_symbol(self) -> int:
        """Get the Legendre symbol (-1|p)."""
        return 1 if self._value % 4 == 1 else -1


def as_prime(p: Union[int, Prime]) -> Prime:
    """Coerce an integer to a Prime."""
    return p if isinstance(p, Prime) else Prime(p)


def legendre(k: int, p: Union[int, Prime]) -> int:
    """Get the Legendre symbol (k|p) by Euler's criterion."""
    p = int(as_prime(p))
    residue = pow(int(k) % p, (p - 1) // 2, p)
    if residue == 0:
        return 0
    return 1 if residue == 1 else -1


@functools.lru_cache(maxsize=64)
def _symbol_table(p: int) -> np.ndarray:
    table = np.fromiter(
        (legendre(k, p) for k in range(p)), dtype=np.int64, count=p
    )
    table.setflags(write=False)
    return table


def legendre_symbols(p: Union[int, Prime]) -> np.ndarray:
    """Get the read-only table [(0|p), (1|p), ..., (p-1|p)]."""
    return _symbol_table(int(as_prime(p)))


def primes_in_range(lo: int, hi: int) -> List[Prime]:
    """Get all primes in [lo, hi] in ascending order."""
    lo, hi = int(lo), int(hi)
    if lo < 2:
        raise DomainError("primes_in_range requires lo >= 2, got {}".format(lo))
    if lo > hi:
        raise DomainError("empty interval [{}, {}]".format(lo, hi))
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for n in range(2, int(hi ** 0.5) + 1):
        if sieve[n]:
            sieve[n * n :: n] = False
    found = np.nonzero(sieve[lo:])[0] + lo
    # 2 is prime but not a valid Fekete modulus
    return [Prime(int(n)) for n in found if n != 2]
