"""Define tests for the number theory module."""
import pytest

from pyfekete.error import DomainError
from pyfekete.numtheory import (
    Prime,
    is_prime,
    legendre,
    legendre_symbols,
    primes_in_range,
)

from . import get_fixture


@pytest.mark.parametrize(
    "n,expected",
    [(2, True), (3, True), (9, False), (561, False), (1009, True), (10007, True)],
)
def test_is_prime(n, expected):
    """Tests primality on primes, squares and a Carmichael number."""
    assert is_prime(n) is expected


def test_is_prime_large():
    """Tests a 64-bit prime and a nearby strong pseudoprime base 2."""
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(3215031751)


@pytest.mark.parametrize("n", [1, 0, -7])
def test_is_prime_domain(n):
    """Tests values below 2 are rejected."""
    with pytest.raises(DomainError):
        is_prime(n)


def test_prime_construction():
    """Tests the checked prime wrapper."""
    # Act
    seven = Prime(7)
    thirteen = Prime(13)
    # Assert
    assert int(seven) == 7
    assert seven == 7
    assert seven.residue_mod_4 == 3
    assert seven.minus_one_symbol == -1
    assert thirteen.residue_mod_4 == 1
    assert thirteen.minus_one_symbol == 1
    assert sorted([thirteen, seven]) == [7, 13]
    assert repr(seven) == "Prime(7)"
    assert list(range(Prime(3))) == [0, 1, 2]


@pytest.mark.parametrize("value", [2, 4, 9, 1])
def test_prime_rejects(value):
    """Tests 2 and composites are not valid moduli."""
    with pytest.raises(DomainError):
        Prime(value)


@pytest.mark.asyncio
async def test_legendre_fixture():
    """Tests Legendre symbols against tabulated values."""
    # Arrange
    rows = await get_fixture("legendre.symbols")
    # Act / Assert
    for row in rows:
        assert legendre(row["k"], row["p"]) == row["symbol"], row


def test_legendre_symbols_table():
    """Tests the symbol table is balanced, read-only and multiplicative."""
    # Act
    table = legendre_symbols(31)
    # Assert
    assert len(table) == 31
    assert table[0] == 0
    assert table.sum() == 0
    assert table[6] == table[2] * table[3]
    with pytest.raises(ValueError):
        table[1] = 5


def test_legendre_rejects_composite():
    """Tests a composite modulus is rejected."""
    with pytest.raises(DomainError):
        legendre(2, 15)


def test_primes_in_range():
    """Tests the sieve excludes 2 and includes both endpoints."""
    # Act
    primes = primes_in_range(2, 31)
    # Assert
    assert primes == [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert all(isinstance(p, Prime) for p in primes)
    assert primes_in_range(24, 28) == []


@pytest.mark.parametrize("lo,hi", [(1, 10), (20, 10)])
def test_primes_in_range_domain(lo, hi):
    """Tests invalid intervals."""
    with pytest.raises(DomainError):
        primes_in_range(lo, hi)
