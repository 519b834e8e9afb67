"""The nonabelian finite simple groups: names, orders, prime spectra.

Lie-type orders are kept in cyclotomic form (a power of q times a multiset
of Phi_e(q) values over a small divisor), so that smoothness of an order can
be decided factor piece by factor piece.  Alternating and sporadic orders
are explicit integers.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .arithmetic import (
    Factorization,
    PhiCache,
    PrimeSet,
    cyclotomic_value,
    divisors_of,
    factor_over,
    factor_small,
    is_prime,
    sieve_primes,
)

# Family tags.  "A" alternating, classical L/U/S/O/O+/O-, exceptional and
# twisted families by their usual symbols, "T" the Tits group, "Spor" sporadic.
FAMILIES = (
    "A", "L", "U", "S", "O", "O+", "O-",
    "G2", "F4", "E6", "E7", "E8",
    "2E6", "3D4", "Sz", "2G2", "2F4",
    "T", "Spor",
)

_FAMILY_RANK = {f: i for i, f in enumerate(FAMILIES)}

SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24",
    "J1", "J2", "J3", "J4",
    "Co1", "Co2", "Co3",
    "Fi22", "Fi23", "Fi24'",
    "HS", "McL", "He", "Ru", "Suz",
    "ON", "HN", "Ly", "Th", "B", "M",
)


class GroupNameError(ValueError):
    """Unparseable group name; carries the offending position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class GroupId:
    family: str
    n: int | None = None
    p: int | None = None
    k: int | None = None
    sporadic: str | None = None

    @property
    def q(self) -> int | None:
        if self.p is None:
            return None
        return self.p**self.k

    @property
    def name(self) -> str:
        f = self.family
        if f == "A":
            return f"A{self.n}"
        if f == "Spor":
            return self.sporadic
        if f == "T":
            return "2F4(2)'"
        if f in ("L", "U", "S", "O", "O+", "O-"):
            return f"{f}{self.n}({self.q})"
        return f"{f}({self.q})"

    def sort_key(self):
        return (
            _FAMILY_RANK[self.family],
            self.n or 0,
            self.p or 0,
            self.k or 0,
            self.sporadic or "",
        )

    def __str__(self):
        return self.name


def _prime_power(q: int) -> tuple[int, int]:
    """Split q = p^k with p prime, or raise."""
    if q < 2:
        raise GroupNameError(f"{q} is not a prime power")
    for p, e in factor_small(q):
        if p**e != q:
            raise GroupNameError(f"{q} is not a prime power")
        return p, e
    raise GroupNameError(f"{q} is not a prime power")  # pragma: no cover


_CLASSICAL_RE = re.compile(r"^(O\+|O-|L|U|S|O)(\d+)\((\d+)\)$")
_EXCEPTIONAL_RE = re.compile(r"^(G2|F4|E6|E7|E8|2E6|3D4|Sz|2B2|2G2|2F4)\((\d+)\)$")
_ALTERNATING_RE = re.compile(r"^A(\d+)$")


def parse_name(text: str) -> GroupId:
    """Parse an ATLAS-style group name into an unvalidated GroupId."""
    if not text:
        raise GroupNameError("empty group name")
    if text in SPORADIC_NAMES:
        return GroupId("Spor", sporadic=text)
    if text == "2F4(2)'":
        return GroupId("T")
    m = _ALTERNATING_RE.match(text)
    if m:
        return GroupId("A", n=int(m.group(1)))
    m = _CLASSICAL_RE.match(text)
    if m:
        fam, n, q = m.group(1), int(m.group(2)), int(m.group(3))
        p, k = _prime_power(q)
        return GroupId(fam, n=n, p=p, k=k)
    m = _EXCEPTIONAL_RE.match(text)
    if m:
        fam, q = m.group(1), int(m.group(2))
        if fam == "2B2":
            fam = "Sz"
        p, k = _prime_power(q)
        return GroupId(fam, p=p, k=k)
    # Point at the first character that cannot start a valid tail.
    for i, ch in enumerate(text):
        if not (ch.isalnum() or ch in "+-()'"):
            raise GroupNameError(f"bad character {ch!r} in group name", position=i)
    raise GroupNameError(f"unrecognized group name {text!r}", position=0)


@dataclass(frozen=True)
class Canonicality:
    kind: str  # "canonical" | "alias" | "not-simple"
    group: GroupId | None = None
    reason: str | None = None

    @property
    def canonical(self) -> bool:
        return self.kind == "canonical"


def _not_simple(reason: str) -> Canonicality:
    return Canonicality("not-simple", reason=reason)


# The five accidental coincidence classes.
_ACCIDENTAL_ALIASES = {
    ("L", 2, 2, 2): GroupId("A", n=5),
    ("L", 2, 5, 1): GroupId("A", n=5),
    ("L", 2, 3, 2): GroupId("A", n=6),
    ("L", 4, 2, 1): GroupId("A", n=8),
    ("L", 3, 2, 1): GroupId("L", n=2, p=7, k=1),
    ("S", 4, 3, 1): GroupId("U", n=4, p=2, k=1),
}


def _canonical_step(g: GroupId) -> Canonicality:
    f = g.family
    if f == "A":
        if g.n < 5:
            return _not_simple(f"A{g.n} is solvable")
        return Canonicality("canonical", g)
    if f == "Spor":
        if g.sporadic not in SPORADIC_NAMES:
            return _not_simple(f"unknown sporadic name {g.sporadic!r}")
        return Canonicality("canonical", g)
    if f == "T":
        return Canonicality("canonical", g)

    q = g.q
    key = (f, g.n, g.p, g.k)
    if key in _ACCIDENTAL_ALIASES:
        return Canonicality("alias", _ACCIDENTAL_ALIASES[key])

    if f == "L":
        if g.n < 2:
            return _not_simple("L needs dimension >= 2")
        if g.n == 2 and q in (2, 3):
            return _not_simple(f"L2({q}) is solvable")
        return Canonicality("canonical", g)
    if f == "U":
        if g.n < 2:
            return _not_simple("U needs dimension >= 2")
        if g.n == 2:
            return Canonicality("alias", GroupId("L", n=2, p=g.p, k=g.k))
        if g.n == 3 and q == 2:
            return _not_simple("U3(2) is solvable")
        return Canonicality("canonical", g)
    if f == "S":
        if g.n % 2 or g.n < 2:
            return _not_simple("symplectic dimension must be even and >= 4")
        if g.n == 2:
            return Canonicality("alias", GroupId("L", n=2, p=g.p, k=g.k))
        if g.n == 4 and q == 2:
            return _not_simple("S4(2) has a simple derived subgroup of index 2 (A6)")
        return Canonicality("canonical", g)
    if f == "O":
        if g.n % 2 == 0 or g.n < 3:
            return _not_simple("odd orthogonal dimension must be odd and >= 7")
        if g.n == 3:
            return Canonicality("alias", GroupId("L", n=2, p=g.p, k=g.k))
        if g.n == 5:
            return Canonicality("alias", GroupId("S", n=4, p=g.p, k=g.k))
        if g.p == 2:
            # In characteristic 2 the odd orthogonal group is the symplectic one.
            return Canonicality("alias", GroupId("S", n=g.n - 1, p=g.p, k=g.k))
        return Canonicality("canonical", g)
    if f in ("O+", "O-"):
        if g.n % 2 or g.n < 4:
            return _not_simple("even orthogonal dimension must be even and >= 8")
        if g.n == 4:
            if f == "O+":
                return _not_simple("O+4(q) is not simple")
            return Canonicality("alias", GroupId("L", n=2, p=g.p, k=2 * g.k))
        if g.n == 6:
            target = "L" if f == "O+" else "U"
            return Canonicality("alias", GroupId(target, n=4, p=g.p, k=g.k))
        return Canonicality("canonical", g)
    if f == "G2":
        if q == 2:
            return _not_simple("G2(2) has a simple derived subgroup of index 2 (U3(3))")
        return Canonicality("canonical", g)
    if f == "Sz":
        if g.p != 2 or g.k % 2 == 0 or g.k < 3:
            return _not_simple("Sz is defined and simple only for q = 2^k, odd k >= 3")
        return Canonicality("canonical", g)
    if f == "2G2":
        if g.p != 3 or g.k % 2 == 0 or g.k < 3:
            return _not_simple("2G2 is defined and simple only for q = 3^k, odd k >= 3")
        return Canonicality("canonical", g)
    if f == "2F4":
        if g.p != 2 or g.k % 2 == 0:
            return _not_simple("2F4 is defined only for q = 2^k, odd k")
        if g.k == 1:
            return _not_simple("2F4(2) is not simple; its derived subgroup is the Tits group 2F4(2)'")
        return Canonicality("canonical", g)
    if f in ("F4", "E6", "E7", "E8", "2E6", "3D4"):
        return Canonicality("canonical", g)
    return _not_simple(f"unknown family {f!r}")


def canonical_id(g: GroupId) -> Canonicality:
    """Resolve a GroupId to its canonical representative.

    Returns "canonical", "alias" (with the deterministic representative,
    alternating preferred), or "not-simple"; never raises for in-grammar ids.
    """
    seen = set()
    current = g
    was_alias = False
    while True:
        res = _canonical_step(current)
        if res.kind != "alias":
            if res.kind == "canonical" and was_alias:
                return Canonicality("alias", current)
            return res
        was_alias = True
        current = res.group
        if current in seen:  # pragma: no cover
            raise AssertionError("alias cycle in canonical table")
        seen.add(current)


@dataclass(frozen=True)
class FactoredOrder:
    """Order of a group: q^power * prod Phi_e(q)^mult / divisor, or explicit."""

    kind: str  # "lie" | "explicit"
    p: int | None = None
    k: int | None = None
    power: int = 0
    phis: tuple[tuple[int, int], ...] = ()  # (cyclotomic index e, multiplicity)
    divisor: int = 1
    value: int | None = None


def _minus(counter: Counter, i: int):
    """Account a q^i - 1 factor."""
    for e in divisors_of(i):
        counter[e] += 1


def _plus(counter: Counter, i: int):
    """Account a q^i + 1 factor."""
    for e in divisors_of(2 * i):
        if i % e:
            counter[e] += 1


# Exceptional family data: power of q, list of (exponent, sign) factors
# where sign +1 means q^i - 1 and -1 means q^i + 1, and a divisor rule.
_EXCEPTIONAL_SHAPES = {
    "G2": (6, [(6, 1), (2, 1)], None),
    "F4": (24, [(12, 1), (8, 1), (6, 1), (2, 1)], None),
    "E6": (36, [(12, 1), (9, 1), (8, 1), (6, 1), (5, 1), (2, 1)], ("-", 3)),
    "E7": (63, [(18, 1), (14, 1), (12, 1), (10, 1), (8, 1), (6, 1), (2, 1)], ("-", 2)),
    "E8": (120, [(30, 1), (24, 1), (20, 1), (18, 1), (14, 1), (12, 1), (8, 1), (2, 1)], None),
    "2E6": (36, [(12, 1), (9, -1), (8, 1), (6, 1), (5, -1), (2, 1)], ("+", 3)),
    "Sz": (2, [(2, -1), (1, 1)], None),
    "2G2": (3, [(3, -1), (1, 1)], None),
    "2F4": (12, [(6, -1), (4, 1), (3, -1), (1, 1)], None),
}


def order_shape(g: GroupId) -> FactoredOrder:
    """The factored order of a canonical group."""
    f = g.family
    if f == "A":
        return FactoredOrder("explicit", value=math.factorial(g.n) // 2)
    if f in ("Spor", "T"):
        return FactoredOrder("explicit", value=_SPORADIC_ORDERS[g.name][1])

    q = g.q
    phis: Counter = Counter()
    if f == "L":
        n = g.n
        power = n * (n - 1) // 2
        for i in range(2, n + 1):
            _minus(phis, i)
        d = math.gcd(n, q - 1)
    elif f == "U":
        n = g.n
        power = n * (n - 1) // 2
        for i in range(2, n + 1):
            if i % 2:
                _plus(phis, i)
            else:
                _minus(phis, i)
        d = math.gcd(n, q + 1)
    elif f in ("S", "O"):
        m = g.n // 2
        power = m * m
        for i in range(1, m + 1):
            _minus(phis, 2 * i)
        d = math.gcd(2, q - 1)
    elif f == "O+":
        m = g.n // 2
        power = m * (m - 1)
        _minus(phis, m)
        for i in range(1, m):
            _minus(phis, 2 * i)
        d = math.gcd(4, q**m - 1)
    elif f == "O-":
        m = g.n // 2
        power = m * (m - 1)
        _plus(phis, m)
        for i in range(1, m):
            _minus(phis, 2 * i)
        d = math.gcd(4, q**m + 1)
    elif f == "3D4":
        power = 12
        phis.update({3: 1, 6: 1, 12: 1})  # q^8 + q^4 + 1
        _minus(phis, 6)
        _minus(phis, 2)
        d = 1
    elif f in _EXCEPTIONAL_SHAPES:
        power, factors, d_rule = _EXCEPTIONAL_SHAPES[f]
        for i, sign in factors:
            if sign == 1:
                _minus(phis, i)
            else:
                _plus(phis, i)
        if d_rule is None:
            d = 1
        else:
            side, mod = d_rule
            d = math.gcd(mod, q - 1 if side == "-" else q + 1)
    else:
        raise ValueError(f"no order formula for family {f!r}")

    return FactoredOrder(
        "lie", p=g.p, k=g.k, power=power,
        phis=tuple(sorted(phis.items())), divisor=d,
    )


def order_int(g: GroupId) -> int:
    """The exact order of a canonical group."""
    shape = order_shape(g)
    if shape.kind == "explicit":
        return shape.value
    q = g.q
    value = q**shape.power
    for e, mult in shape.phis:
        value *= cyclotomic_value(e, q) ** mult
    quot, rem = divmod(value, shape.divisor)
    assert rem == 0, "order divisor must divide exactly"
    return quot


_PRIMES_UP_TO = sieve_primes(1100)


def _alternating_spectrum(n: int, prime_set: PrimeSet) -> Factorization:
    """Factor n!/2 over the set via Legendre's formula, no big integers."""
    small = _PRIMES_UP_TO if n <= _PRIMES_UP_TO.max else sieve_primes(n)
    parts = []
    cofactor = 1
    for r in small:
        if r > n:
            break
        exp = 0
        power = r
        while power <= n:
            exp += n // power
            power *= r
        if r == 2:
            exp -= 1
        if r in prime_set:
            parts.append((r, exp))
        else:
            cofactor *= r**exp
    return Factorization(tuple(parts), cofactor)


def spectrum(g: GroupId, prime_set: PrimeSet, cache: PhiCache | None = None) -> Factorization:
    """Exact factorization of |G| over the prime set, built piecewise.

    The p-power part, every Phi_e(q) piece, and the small divisor are
    accounted separately; the divisor is subtracted from the exponent
    multiset, which must never underflow.
    """
    if g.family == "A":
        return _alternating_spectrum(g.n, prime_set)
    shape = order_shape(g)
    if shape.kind == "explicit":
        if g.family in ("Spor", "T"):
            stored = _SPORADIC_ORDERS[g.name][0]
            parts = []
            cofactor = 1
            for r, e in stored:
                if r in prime_set:
                    parts.append((r, e))
                else:
                    cofactor *= r**e
            return Factorization(tuple(parts), cofactor)
        return factor_over(shape.value, prime_set)

    parts: Counter = Counter()
    cofactor = 1
    if g.p in prime_set:
        parts[g.p] += g.k * shape.power
    else:
        cofactor *= g.q**shape.power
    for e, mult in shape.phis:
        if cache is not None:
            piece = cache.factor(e, g.k)
        else:
            piece = factor_over(cyclotomic_value(e, g.q), prime_set)
        for r, exp in piece.parts:
            parts[r] += exp * mult
        cofactor *= piece.cofactor**mult
    if shape.divisor > 1:
        fd = factor_over(shape.divisor, prime_set)
        for r, exp in fd.parts:
            parts[r] -= exp
            assert parts[r] >= 0, f"divisor underflow at {r} for {g.name}"
        cofactor, rem = divmod(cofactor, fd.cofactor)
        assert rem == 0, f"divisor cofactor must divide exactly for {g.name}"
    return Factorization(
        tuple(sorted((r, e) for r, e in parts.items() if e > 0)), cofactor
    )


# Sporadic (and Tits) orders: {name: (((prime, exponent), ...), order)}.
# The product is re-checked against the order at import time.
_SPORADIC_DATA = {
    "M11": "2^4 3^2 5 11",
    "M12": "2^6 3^3 5 11",
    "M22": "2^7 3^2 5 7 11",
    "M23": "2^7 3^2 5 7 11 23",
    "M24": "2^10 3^3 5 7 11 23",
    "J1": "2^3 3 5 7 11 19",
    "J2": "2^7 3^3 5^2 7",
    "J3": "2^7 3^5 5 17 19",
    "J4": "2^21 3^3 5 7 11^3 23 29 31 37 43",
    "Co1": "2^21 3^9 5^4 7^2 11 13 23",
    "Co2": "2^18 3^6 5^3 7 11 23",
    "Co3": "2^10 3^7 5^3 7 11 23",
    "Fi22": "2^17 3^9 5^2 7 11 13",
    "Fi23": "2^18 3^13 5^2 7 11 13 17 23",
    "Fi24'": "2^21 3^16 5^2 7^3 11 13 17 23 29",
    "HS": "2^9 3^2 5^3 7 11",
    "McL": "2^7 3^6 5^3 7 11",
    "He": "2^10 3^3 5^2 7^3 17",
    "Ru": "2^14 3^3 5^3 7 13 29",
    "Suz": "2^13 3^7 5^2 7 11 13",
    "ON": "2^9 3^4 5 7^3 11 19 31",
    "HN": "2^14 3^6 5^6 7 11 19",
    "Ly": "2^8 3^7 5^6 7 11 31 37 67",
    "Th": "2^15 3^10 5^3 7^2 13 19 31",
    "B": "2^41 3^13 5^6 7^2 11 13 17 19 23 31 47",
    "M": "2^46 3^20 5^9 7^6 11^2 13^3 17 19 23 29 31 41 47 59 71",
    "2F4(2)'": "2^11 3^3 5^2 13",
}


def _parse_sporadic(spec: str) -> tuple[tuple[int, int], ...]:
    parts = []
    for token in spec.split():
        if "^" in token:
            base, exp = token.split("^")
            parts.append((int(base), int(exp)))
        else:
            parts.append((int(token), 1))
    return tuple(parts)


def _build_sporadic_orders():
    out = {}
    for name, spec in _SPORADIC_DATA.items():
        parts = _parse_sporadic(spec)
        order = 1
        for r, e in parts:
            assert is_prime(r)
            order *= r**e
        out[name] = (parts, order)
    return out


_SPORADIC_ORDERS = _build_sporadic_orders()


@lru_cache(maxsize=1)
def sporadic_catalog() -> tuple[tuple[GroupId, Factorization], ...]:
    """The 26 sporadic groups plus the Tits group, with factored orders."""
    out = []
    for name in SPORADIC_NAMES:
        gid = GroupId("Spor", sporadic=name)
        out.append((gid, Factorization(_SPORADIC_ORDERS[name][0])))
    tits = GroupId("T")
    out.append((tits, Factorization(_SPORADIC_ORDERS["2F4(2)'"][0])))
    return tuple(out)


@dataclass(frozen=True)
class IsomorphismClass:
    representative: GroupId
    aliases: tuple[GroupId, ...]


@lru_cache(maxsize=1)
def coincidence_classes() -> tuple[IsomorphismClass, ...]:
    """The five accidental coincidence classes among distinct series."""
    table = [
        ("A5", ("L2(4)", "L2(5)")),
        ("A6", ("L2(9)",)),
        ("A8", ("L4(2)",)),
        ("L2(7)", ("L3(2)",)),
        ("U4(2)", ("S4(3)",)),
    ]
    classes = []
    for rep, aliases in table:
        rep_id = parse_name(rep)
        alias_ids = tuple(parse_name(a) for a in aliases)
        rep_order = order_int(rep_id)
        for a in alias_ids:
            assert order_int(a) == rep_order, f"{a.name} does not match {rep}"
        classes.append(IsomorphismClass(rep_id, alias_ids))
    return tuple(classes)
