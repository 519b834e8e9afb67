"""Enumeration of all nonabelian simple groups with spectrum inside a prime set.

The candidate space is sporadic groups, alternating groups up to the first
prime missing from the set, and groups of Lie type over q = p^k for p in the
set with bounded field exponent and rank.  A smoothness sieve on cyclotomic
values Phi_e(p) cuts the field-exponent loop down to the handful of
admissible exponents, and dimension loops abort at the first nonsmooth
cyclotomic piece (larger dimensions only ever add pieces).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool

from .arithmetic import (
    Factorization,
    PhiCache,
    PrimeSet,
    divisors_of,
    factor_over,
    is_prime,
    mult_order,
    sieve_primes,
)
from .catalog import GroupId, canonical_id, order_int, order_shape, spectrum, sporadic_catalog

# Exceptional cyclotomic values Phi_e(p) can collapse to a single prime
# dividing e; since Phi_e(p) >= 2^(phi(e)-1), that forces e <= 30.  The
# sieve therefore always scans at least up to this bound.
_INTRINSIC_SCAN = 30


@dataclass(frozen=True)
class EnumerationBounds:
    p: int
    t: int
    rank_cap: int
    field_cap: int
    margin: int


def char_bound(prime_set: PrimeSet, p: int, margin: int = 0) -> EnumerationBounds:
    """Field and rank caps for characteristic p: t = max ord_r(p) over the set."""
    orders = [mult_order(p, r) for r in prime_set if r != p]
    t = max(orders, default=1)
    return EnumerationBounds(p, t, max(8, t) + margin, t + margin, margin)


def _ord_table(prime_set: PrimeSet, p: int) -> dict[int, int]:
    return {r: mult_order(p, r) for r in prime_set if r != p}


def smooth_phi_indices(
    p: int, prime_set: PrimeSet, t: int, ord_table: dict[int, int] | None = None
) -> set[int]:
    """Indices e <= max(t, 30) for which Phi_e(p) is smooth over the set.

    Only e that is a multiplicative order of p modulo a set prime, or small
    enough for the intrinsic-prime collapse, can qualify; other indices have
    a primitive prime divisor outside the set.
    """
    if ord_table is None:
        ord_table = _ord_table(prime_set, p)
    limit = max(t, _INTRINSIC_SCAN)
    candidates = {e for e in ord_table.values() if e <= limit}
    candidates.update(range(1, min(limit, _INTRINSIC_SCAN) + 1))
    cache = PhiCache(p, prime_set, ord_table)
    return {e for e in candidates if cache.smooth(e)}


def admissible_exponents(p: int, prime_set: PrimeSet, t: int, cap: int) -> set[int]:
    """Exponents m <= cap with p^m - 1 smooth: every divisor of m must be
    a smooth cyclotomic index."""
    smooth = smooth_phi_indices(p, prime_set, t)
    out = set()
    for m in sorted(smooth):
        if m <= cap and all(d in smooth for d in divisors_of(m)):
            out.add(m)
    return out


@dataclass(frozen=True)
class ClassRecord:
    group: GroupId
    spectrum: Factorization
    aliases: tuple[GroupId, ...] = ()

    @property
    def max_prime(self) -> int:
        return self.spectrum.max_prime()


@dataclass(frozen=True)
class EnumerationResult:
    pi: PrimeSet
    classes: tuple[ClassRecord, ...]
    names: tuple[GroupId, ...]
    stats: dict


def _lie_smooth(shape, cache: PhiCache) -> bool:
    """All cyclotomic pieces of a Lie-type order smooth, cheapest first."""
    for e, _ in shape.phis:
        if not cache.smooth(e, shape.k):
            return False
    return True


def _alternating_members(prime_set: PrimeSet):
    """A_n while every prime <= n lies in the set."""
    if not (2 in prime_set and 3 in prime_set and 5 in prime_set):
        return
    n = 5
    while True:
        if is_prime(n) and n not in prime_set:
            return
        yield GroupId("A", n=n)
        n += 1


def _classical_dims(family: str, rank_cap: int):
    if family == "L":
        return range(2, rank_cap + 2)
    if family == "U":
        return range(3, rank_cap + 2)
    if family == "S":
        return range(4, 2 * rank_cap + 1, 2)
    if family == "O":
        return range(7, 2 * rank_cap + 2, 2)
    return range(8, 2 * rank_cap + 1, 2)  # O+, O-


def _enumerate_characteristic(args):
    """All smooth Lie-type groups in one characteristic.

    Returns (accepted, stats) where accepted is a list of
    (candidate GroupId, spectrum Factorization).
    """
    primes, p, margin = args
    prime_set = PrimeSet(primes)
    ords = _ord_table(prime_set, p)
    t = max(ords.values(), default=1)
    field_cap = t + margin
    rank_cap = max(8, t) + margin
    admissible = admissible_exponents(p, prime_set, t + margin, field_cap)
    cache = PhiCache(p, prime_set, ords)
    stats = Counter()
    accepted = []

    def consider(gid: GroupId) -> bool:
        """Test one candidate; returns False on a nonsmooth cyclotomic piece."""
        res = canonical_id(gid)
        if res.kind == "not-simple":
            return True
        stats["candidates"] += 1
        shape = order_shape(gid)
        if not _lie_smooth(shape, cache):
            stats["pruned"] += 1
            return False
        spec = spectrum(gid, prime_set, cache)
        assert spec.smooth, f"smooth pieces but nonsmooth spectrum for {gid.name}"
        accepted.append((gid, spec))
        stats["accepted"] += 1
        return True

    for k in sorted(m for m in admissible if m <= field_cap):
        for family in ("L", "U", "S", "O+", "O-"):
            for n in _classical_dims(family, rank_cap):
                gid = GroupId(family, n=n, p=p, k=k)
                if not consider(gid):
                    break
        if p != 2:
            # In characteristic 2 the odd orthogonal groups coincide with
            # the symplectic ones; skip the duplicate notation entirely.
            for n in _classical_dims("O", rank_cap):
                if not consider(GroupId("O", n=n, p=p, k=k)):
                    break
        for family in ("G2", "F4", "E6", "E7", "E8", "2E6", "3D4"):
            consider(GroupId(family, p=p, k=k))
        if p == 2 and k % 2 and k >= 3:
            consider(GroupId("Sz", p=p, k=k))
            consider(GroupId("2F4", p=p, k=k))
        if p == 3 and k % 2 and k >= 3:
            consider(GroupId("2G2", p=p, k=k))

    stats["t"] = t
    stats["admissible_exponents"] = len(admissible)
    return accepted, dict(stats)


def enumerate_groups(prime_set: PrimeSet, margin: int = 0, jobs: int = 1) -> EnumerationResult:
    """All nonabelian simple groups G with spectrum inside the prime set."""
    if not len(prime_set):
        raise ValueError("the prime set must be nonempty")
    stats: Counter = Counter()
    found: list[tuple[GroupId, Factorization]] = []

    for gid, fact in sporadic_catalog():
        stats["sporadic_candidates"] += 1
        if all(r in prime_set for r in fact.primes()):
            found.append((gid, spectrum(gid, prime_set)))

    for gid in _alternating_members(prime_set):
        found.append((gid, spectrum(gid, prime_set)))
        stats["alternating"] += 1

    char_args = [(prime_set.primes, p, margin) for p in prime_set]
    if jobs > 1:
        with Pool(jobs) as pool:
            per_char = pool.map(_enumerate_characteristic, char_args)
    else:
        per_char = [_enumerate_characteristic(a) for a in char_args]
    for accepted, char_stats in per_char:
        found.extend(accepted)
        for key in ("candidates", "pruned", "accepted"):
            stats[key] += char_stats.get(key, 0)

    by_class: dict[GroupId, tuple[Factorization, list[GroupId]]] = {}
    names: set[GroupId] = set()
    for gid, spec in found:
        res = canonical_id(gid)
        if res.kind == "canonical":
            rep = gid
            names.add(gid)
        else:
            rep = res.group
            names.add(gid)
        entry = by_class.get(rep)
        if entry is None:
            by_class[rep] = (spec, [gid] if gid != rep else [])
        elif gid != rep:
            by_class[rep][1].append(gid)

    classes = tuple(
        ClassRecord(rep, spec, tuple(sorted(aliases, key=GroupId.sort_key)))
        for rep, (spec, aliases) in sorted(by_class.items(), key=lambda kv: kv[0].sort_key())
    )
    # Every class must have been seen under its own canonical name.
    for rec in classes:
        assert rec.group in names, f"class {rec.group.name} found only via aliases"
    return EnumerationResult(
        pi=prime_set,
        classes=classes,
        names=tuple(sorted(names, key=GroupId.sort_key)),
        stats=dict(stats),
    )


def naive_enumerate(prime_set: PrimeSet, dim_cap: int, field_cap: int) -> frozenset[GroupId]:
    """Independent oracle: same candidate grid, but each whole order is
    computed as an integer and factored directly.  No cyclotomic sieve,
    no pruning."""
    reps: set[GroupId] = set()

    def consider(gid: GroupId):
        res = canonical_id(gid)
        if res.kind == "not-simple":
            return
        if factor_over(order_int(gid), prime_set).smooth:
            reps.add(gid if res.kind == "canonical" else res.group)

    for gid, _ in sporadic_catalog():
        if factor_over(order_int(gid), prime_set).smooth:
            reps.add(gid)
    for gid in _alternating_members(prime_set):
        consider(gid)
    for p in prime_set:
        for k in range(1, field_cap + 1):
            for family in ("L", "U", "S", "O", "O+", "O-"):
                if family == "O" and p == 2:
                    continue
                for n in _classical_dims(family, dim_cap):
                    consider(GroupId(family, n=n, p=p, k=k))
            for family in ("G2", "F4", "E6", "E7", "E8", "2E6", "3D4"):
                consider(GroupId(family, p=p, k=k))
            if p == 2 and k % 2 and k >= 3:
                consider(GroupId("Sz", p=p, k=k))
                consider(GroupId("2F4", p=p, k=k))
            if p == 3 and k % 2 and k >= 3:
                consider(GroupId("2G2", p=p, k=k))
    return frozenset(reps)


def next_prime(p: int) -> int:
    n = p + 1
    while not is_prime(n):
        n += 1
    return n


@dataclass(frozen=True)
class SpRecord:
    """The groups whose maximal spectrum prime is exactly p."""

    p: int
    next_prime: int
    members: tuple[ClassRecord, ...]
    is_generic: bool

    @property
    def count(self) -> int:
        return len(self.members)


def generic_class_set(p: int) -> frozenset[GroupId]:
    """Canonical representatives of L2(p), A_p, ..., A_(p'-1)."""
    if p < 5:
        return frozenset()
    members = {GroupId("A", n=n) for n in range(p, next_prime(p))}
    res = canonical_id(GroupId("L", n=2, p=p, k=1))
    members.add(res.group if res.kind == "alias" else GroupId("L", n=2, p=p, k=1))
    return frozenset(members)


def partition_sp(result: EnumerationResult) -> list[SpRecord]:
    """Partition classes by their maximal spectrum prime.

    Defined only when the prime set is an initial segment of the primes.
    """
    pi = result.pi
    if pi.primes != sieve_primes(pi.max).primes:
        raise ValueError("S_p partitioning needs an initial segment of primes")
    buckets: dict[int, list[ClassRecord]] = {p: [] for p in pi}
    for rec in result.classes:
        assert rec.spectrum.smooth
        buckets[rec.max_prime].append(rec)
    records = []
    for p in pi:
        members = tuple(
            sorted(buckets[p], key=lambda r: (len(r.spectrum.parts), r.group.sort_key()))
        )
        generic = generic_class_set(p)
        is_generic = p >= 5 and {m.group for m in members} == generic
        records.append(SpRecord(p, next_prime(p), members, is_generic))
    return records
