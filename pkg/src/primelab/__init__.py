"""primelab: a computational laboratory for prime densities, gap statistics,
Goldbach representation counts, and truncated Euler products."""

from .logdomain import LogValue
from .sieve import HAVE_COMPILED_CORE, PrimeTable, build_prime_table, shared_table

__version__ = "0.1.0"

__all__ = [
    "LogValue",
    "PrimeTable",
    "build_prime_table",
    "shared_table",
    "HAVE_COMPILED_CORE",
    "__version__",
]
