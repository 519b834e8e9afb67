import pytest

from pispec.arithmetic import sieve_primes
from pispec.enumerator import enumerate_groups


@pytest.fixture(scope="session")
def full_result():
    """One full census for primes <= 1000, shared across the suite."""
    return enumerate_groups(sieve_primes(1000))


@pytest.fixture(scope="session")
def primes_1000():
    return sieve_primes(1000)
