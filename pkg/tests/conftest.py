import pytest

from primelab.sieve import build_prime_table


@pytest.fixture(scope="session")
def table_2m():
    """Covers Goldbach centers to 1e6 (needs primes to 2n - 2)."""
    return build_prime_table(2 * 10**6)


@pytest.fixture(scope="session")
def table_10m():
    return build_prime_table(10**7)


@pytest.fixture(scope="session")
def table_small():
    return build_prime_table(10**4)
