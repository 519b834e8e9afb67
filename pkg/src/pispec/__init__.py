"""Orders, prime spectra, and bounded-spectrum censuses of nonabelian
finite simple groups."""

from .arithmetic import Factorization, PrimeSet, sieve_primes
from .catalog import GroupId, canonical_id, order_int, parse_name, spectrum
from .enumerator import enumerate_groups, naive_enumerate, partition_sp
from .report import render, verify_against_paper

__all__ = [
    "Factorization", "PrimeSet", "sieve_primes",
    "GroupId", "canonical_id", "order_int", "parse_name", "spectrum",
    "enumerate_groups", "naive_enumerate", "partition_sp",
    "render", "verify_against_paper",
]
