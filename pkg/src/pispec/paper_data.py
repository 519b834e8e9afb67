"""Embedded expected data for the published census of simple groups with
all order primes below 1000.

Ellipsis conventions of the source tables are expanded here once, so all
comparisons downstream are exact set comparisons.  "a..b" expands to the
consecutive primes from a to b for prime-valued rows and to consecutive
integers for integer-valued rows.
"""

from __future__ import annotations

from .arithmetic import sieve_primes

EXPECTED_TOTAL_CLASSES = 1972

# Primes p in [100, 1000] whose S_p contains only the generic members.
TABLE2_GENERIC_PRIMES = (
    107, 131, 167, 197, 223, 227, 311, 317, 347, 359, 379,
    383, 389, 397, 419, 461, 479, 503, 541, 569, 587, 617,
    643, 647, 691, 761, 797, 827, 839, 887, 967, 977, 983,
)


def _primes(a: int, b: int) -> list[int]:
    return [p for p in sieve_primes(b) if p >= a]


def _q(*specs) -> tuple[int, ...]:
    """Prime powers written as (p, k) pairs or plain ints."""
    out = []
    for s in specs:
        out.append(s[0] ** s[1] if isinstance(s, tuple) else s)
    return tuple(sorted(out))


def _row(series: str, kind: str, values) -> dict:
    return {"series": series, "kind": kind, "values": tuple(sorted(values))}


# Series rows keyed the way the census table splits them.  Row keys:
#   ("A",)                      alternating, value n
#   ("Spor",) / ("T",)          sporadic names / Tits presence
#   (family, n, k-selector)     classical, value p (selector 1,2,3) or q ("k>=c")
#   (family, n)                 classical with all field sizes pooled, value q
#   (family,)                   exceptional families, value q (or k for Sz/2G2/2F4)
TABLE4_ROWS: dict[tuple, dict] = {}


def _add(key, series, kind, values):
    TABLE4_ROWS[key] = _row(series, kind, values)


_add(("A",), "A_n", "n", range(5, 1009))
_add(("L", 2, 1), "L2(p)", "p", _primes(5, 997))
_add(("L", 2, 2), "L2(p^2)", "p", _primes(2, 53) + [
    67, 73, 83, 89, 97, 107, 109, 149, 151, 157, 173, 179, 191, 193, 211]
    + _primes(233, 251) + [269] + _primes(293, 317) + [
    337, 353, 401, 421, 431, 439, 443, 463, 467, 487, 491, 499, 509, 557,
    577, 593, 599, 601, 613, 659, 701, 743, 757, 787, 811, 829, 853, 857,
    863, 911, 919])
_add(("L", 2, 3), "L2(p^3)", "p", _primes(2, 37) + [
    43, 47, 53, 61, 107, 109, 211, 227, 263, 283, 373, 431, 521, 821])
_add(("L", 2, "k>=4"), "L2(p^k), k>=4", "q", _q(
    (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (2, 10), (2, 11), (2, 12),
    (2, 14), (2, 15), (2, 18), (2, 24),
    (3, 4), (3, 5), (3, 6), (3, 8), (3, 9),
    (5, 4), (5, 5), (5, 6), (7, 6), (19, 6), (29, 6), (43, 4)))
_add(("L", 3, 1), "L3(p)", "p", _primes(2, 37) + [
    43, 47, 53, 61, 67, 79, 83, 107, 109, 113, 137, 139, 149, 163, 181, 191,
    211, 227, 229, 263, 269, 277, 281, 283, 307, 313, 337, 359, 373, 379,
    431, 439, 461, 499, 521, 547, 571, 587, 631, 653, 787]
    + _primes(809, 823) + [877, 919, 947, 971, 991, 997])
_add(("L", 3, 2), "L3(p^2)", "p", _primes(2, 37) + [43, 47, 53, 107, 109, 211, 431])
_add(("L", 3, "k>=3"), "L3(p^k), k>=3", "q", _q(
    (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 10), (2, 12),
    (3, 3), (3, 4), (3, 6), (5, 3), (5, 4)))
_add(("L", 4, 1), "L4(p)", "p", _primes(2, 37) + [
    43, 47, 53, 67, 83, 107, 109, 149, 191, 211, 269, 307, 313, 337, 431,
    439, 499, 787, 811, 919])
_add(("L", 4, "k>=2"), "L4(p^k), k>=2", "q", _q(
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 12),
    (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (43, 2)))
for _n in (5, 6):
    _add(("L", _n), f"L{_n}(q)", "q", _q(2, (2, 2), (2, 3), (2, 4), (2, 6), 3, (3, 2), 5, (5, 2), 19))
_add(("L", 7), "L7(q)", "q", _q(2, (2, 2), (2, 3), (2, 4)))
_add(("L", 8), "L8(q)", "q", _q(2, (2, 2), (2, 3)))
for _n in (9, 10, 11, 12):
    _add(("L", _n), f"L{_n}(q)", "q", _q(2, (2, 2)))
_add(("U", 3, 1), "U3(p)", "p", _primes(3, 61) + [73] + _primes(89, 109) + [
    131, 173, 179, 197, 199, 211, 227, 233, 239, 257, 263, 283, 293, 353,
    367, 373] + _primes(397, 419) + [
    431, 463, 467, 491, 521, 523, 563, 577, 593, 599, 619, 641, 677, 719,
    739, 773, 821, 829, 857, 859, 863, 881, 929, 941, 953])
_add(("U", 3, "k>=2"), "U3(p^k), k>=2", "q", _q(
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 8),
    (3, 2), (3, 3), (3, 5), (3, 8), (5, 2), (7, 2), (13, 3), (19, 2), (29, 2)))
_add(("U", 4, 1), "U4(p)", "p", _primes(2, 53) + [
    73, 89, 97, 107, 109, 173, 179, 211, 233, 239, 293, 353, 401, 431, 463,
    467, 491, 577, 593, 599, 829, 857, 863])
_add(("U", 4, "k>=2"), "U4(p^k), k>=2", "q", _q(
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2)))
for _n in (5, 6):
    _add(("U", _n), f"U{_n}(q)", "q", _q(2, (2, 2), (2, 3), 3, (3, 3), 5, 7, 17, 23, 29))
_add(("U", 7), "U7(q)", "q", _q(2, (2, 2), 3, 5, 7))
_add(("U", 8), "U8(q)", "q", _q(2, (2, 2), 3, 5))
for _n in (9, 10):
    _add(("U", _n), f"U{_n}(q)", "q", _q(2, (2, 2), 3))
for _n in (11, 12):
    _add(("U", _n), f"U{_n}(q)", "q", _q(2, 3))
_add(("S", 4, 1), "S4(p)", "p", _primes(3, 53) + [
    67, 73, 83, 89, 97, 107, 109, 149, 151, 157, 173, 179, 191, 193, 211]
    + _primes(233, 251) + [269] + _primes(293, 317) + [
    337, 353, 401, 421, 431, 439, 443, 463, 467, 487, 491, 499, 509, 557,
    577, 593, 599, 601, 613, 659, 701, 743, 757, 787, 811, 829, 853, 857,
    863, 911, 919])
_add(("S", 4, "k>=2"), "S4(p^k), k>=2", "q", _q(
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 9), (2, 12),
    (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 3), (19, 3), (29, 3), (43, 2)))
_add(("S", 6, 1), "S6(p)", "p", _primes(2, 37) + [43, 47, 53, 107, 109, 211, 431])
_add(("S", 6, "k>=2"), "S6(p^k), k>=2", "q", _q(
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2)))
_add(("S", 8), "S8(q)", "q", _q(2, (2, 2), (2, 3), (2, 6), 3, (3, 2), 5, 43))
for _n in (10, 12):
    _add(("S", _n), f"S{_n}(q)", "q", _q(2, (2, 2), (2, 3), 3, 5))
_add(("S", 14), "S14(q)", "q", _q(2, (2, 2)))
for _n in (16, 18, 20, 22, 24):
    _add(("S", _n), f"S{_n}(q)", "q", (2,))
_add(("O", 7, 1), "O7(p)", "p", _primes(3, 37) + [43, 47, 53, 107, 109, 211, 431])
_add(("O", 7, "k>=2"), "O7(p^k), k>=2", "q", _q((3, 2), (3, 3), (5, 2)))
_add(("O", 9), "O9(q)", "q", _q(3, (3, 2), 5, 43))
for _n in (11, 13):
    _add(("O", _n), f"O{_n}(q)", "q", (3, 5))
_add(("O+", 8, 1), "O+8(p)", "p", _primes(2, 37) + [43, 47, 53, 107, 109, 211, 431])
_add(("O+", 8, "k>=2"), "O+8(p^k), k>=2", "q", _q(
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2)))
_add(("O+", 10), "O+10(q)", "q", _q(2, (2, 2), (2, 3), (2, 6), 3, (3, 2), 5))
_add(("O+", 12), "O+12(q)", "q", _q(2, (2, 2), (2, 3), 3, 5))
_add(("O+", 14), "O+14(q)", "q", _q(2, (2, 2), (2, 3)))
_add(("O+", 16), "O+16(q)", "q", _q(2, (2, 2)))
for _n in (18, 20, 22, 24):
    _add(("O+", _n), f"O+{_n}(q)", "q", (2,))
_add(("O-", 8), "O-8(q)", "q", _q(2, (2, 2), (2, 3), (2, 6), 3, (3, 2), 5, 43))
for _n in (10, 12):
    _add(("O-", _n), f"O-{_n}(q)", "q", _q(2, (2, 2), (2, 3), 3, 5))
_add(("O-", 14), "O-14(q)", "q", _q(2, (2, 2), 3, 5))
for _n in (16, 18, 20, 22, 24):
    _add(("O-", _n), f"O-{_n}(q)", "q", (2,))
_add(("G2", 1), "G2(p)", "p", _primes(3, 37) + [
    43, 47, 53, 61, 107, 109, 211, 227, 263, 283, 373, 431, 521, 821])
_add(("G2", "k>=2"), "G2(p^k), k>=2", "q", _q(
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 8),
    (3, 2), (3, 3), (5, 2), (7, 2), (19, 2), (29, 2)))
_add(("F4",), "F4(q)", "q", _q(2, (2, 2), (2, 3), 3, 5))
_add(("E6",), "E6(q)", "q", _q(2, (2, 2), 3, 5))
_add(("E7",), "E7(q)", "q", _q(2, (2, 2)))
_add(("E8",), "E8(q)", "q", (2,))
_add(("3D4",), "3D4(q)", "q", _q(2, (2, 2), (2, 3), (2, 4), 3, 5, 7, (7, 2), 19, 29))
_add(("2E6",), "2E6(q)", "q", _q(2, (2, 2), 3))
_add(("Sz",), "Sz(2^k)", "k", (3, 5, 7, 9))
_add(("2G2",), "2G2(3^k)", "k", (3, 5))
_add(("2F4",), "2F4(2^k), k>=3", "k", (3,))
_add(("T",), "2F4(2)'", "name", ("2F4(2)'",))
_add(("Spor",), "Sporadic", "name", (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4",
    "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL", "He",
    "Ru", "Suz", "ON", "HN", "Ly", "Th", "B", "M"))
