"""Rendering and verification of enumeration results.

Three output styles: flat (one record per group), sp-table (groups bucketed
by their maximal spectrum prime), and series-table (parameter values pooled
per series, long runs abbreviated).  The verifier diffs a full run against
the embedded expected data.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .arithmetic import PrimeSet, is_prime, sieve_primes
from .catalog import GroupId, order_int, parse_name
from .enumerator import EnumerationResult, SpRecord, partition_sp
from .paper_data import EXPECTED_TOTAL_CLASSES, TABLE2_GENERIC_PRIMES, TABLE4_ROWS

FORMATS = ("text", "json", "csv")
STYLES = ("flat", "sp-table", "series-table")


def series_key(g: GroupId) -> tuple[tuple, object]:
    """Row of the series table a named group belongs to, plus its value."""
    f = g.family
    if f == "A":
        return ("A",), g.n
    if f == "Spor":
        return ("Spor",), g.sporadic
    if f == "T":
        return ("T",), g.name
    if f in ("Sz", "2G2", "2F4"):
        return (f,), g.k
    if f in ("G2",):
        return (("G2", 1), g.p) if g.k == 1 else (("G2", "k>=2"), g.q)
    if f in ("F4", "E6", "E7", "E8", "2E6", "3D4"):
        return (f,), g.q
    if f == "L" and g.n == 2:
        return (("L", 2, g.k), g.p) if g.k <= 3 else (("L", 2, "k>=4"), g.q)
    if f == "L" and g.n == 3:
        return (("L", 3, g.k), g.p) if g.k <= 2 else (("L", 3, "k>=3"), g.q)
    if f == "L" and g.n == 4:
        return (("L", 4, 1), g.p) if g.k == 1 else (("L", 4, "k>=2"), g.q)
    if f == "U" and g.n == 3:
        return (("U", 3, 1), g.p) if g.k == 1 else (("U", 3, "k>=2"), g.q)
    if f == "U" and g.n == 4:
        return (("U", 4, 1), g.p) if g.k == 1 else (("U", 4, "k>=2"), g.q)
    if f == "S" and g.n in (4, 6):
        return ((f, g.n, 1), g.p) if g.k == 1 else ((f, g.n, "k>=2"), g.q)
    if f == "O" and g.n == 7:
        return (("O", 7, 1), g.p) if g.k == 1 else (("O", 7, "k>=2"), g.q)
    if f == "O+" and g.n == 8:
        return (("O+", 8, 1), g.p) if g.k == 1 else (("O+", 8, "k>=2"), g.q)
    return (f, g.n), g.q


def computed_series(names) -> dict[tuple, set]:
    out: dict[tuple, set] = {}
    for g in names:
        key, value = series_key(g)
        out.setdefault(key, set()).add(value)
    return out


def collapse_runs(values, prime_steps: bool) -> str:
    """Abbreviate runs of consecutive integers (or consecutive primes) with
    an ellipsis; runs shorter than three values are written out."""
    values = sorted(values)
    if not values:
        return "---"
    succ = (lambda x: _next_prime(x)) if prime_steps else (lambda x: x + 1)
    pieces = []
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[j + 1] == succ(values[j]):
            j += 1
        if j - i >= 2:
            pieces.append(f"{values[i]},...,{values[j]}")
        else:
            pieces.extend(str(v) for v in values[i : j + 1])
        i = j + 1
    return ", ".join(pieces)


def expand_runs(text: str, prime_steps: bool) -> list[int]:
    """Inverse of collapse_runs."""
    if text == "---":
        return []
    out = []
    for piece in text.split(", "):
        if ",...," in piece:
            a, b = piece.split(",...,")
            a, b = int(a), int(b)
            x = a
            while x <= b:
                out.append(x)
                x = _next_prime(x) if prime_steps else x + 1
        else:
            out.append(int(piece))
    return out


def _next_prime(p: int) -> int:
    n = p + 1
    while not is_prime(n):
        n += 1
    return n


def _flat_records(result: EnumerationResult, dedup: str = "classes"):
    by_rep = {rec.group: rec for rec in result.classes}
    if dedup == "classes":
        gids = [rec.group for rec in result.classes]
    else:
        gids = list(result.names)
    records = []
    for g in gids:
        from .catalog import canonical_id

        res = canonical_id(g)
        rep = g if res.kind == "canonical" else res.group
        rec = by_rep[rep]
        records.append(
            {
                "name": g.name,
                "family": g.family,
                "n": g.n,
                "p": g.p,
                "k": g.k,
                "order": str(order_int(rep)),
                "spectrum": [r for r, _ in rec.spectrum.parts],
                "max_prime": rec.max_prime,
            }
        )
    records.sort(key=lambda r: (r["max_prime"], len(r["spectrum"]), r["name"]))
    return records


def render(result: EnumerationResult, fmt: str = "text", style: str = "flat",
           dedup: str = "classes") -> str:
    """Deterministic document for a result; bytes depend only on the result."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}")
    if style == "flat":
        return _render_flat(result, fmt, dedup)
    if style == "sp-table":
        return _render_sp(result, fmt)
    return _render_series(result, fmt)


def _render_flat(result, fmt, dedup):
    records = _flat_records(result, dedup)
    if fmt == "json":
        return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "family", "n", "p", "k", "order", "spectrum", "max_prime"])
        for r in records:
            w.writerow([
                r["name"], r["family"], r["n"] or "", r["p"] or "", r["k"] or "",
                r["order"], ";".join(map(str, r["spectrum"])), r["max_prime"],
            ])
        return buf.getvalue()
    lines = [
        f"{r['name']:<12} |G| = {r['order']}  pi(G) = {{{', '.join(map(str, r['spectrum']))}}}"
        for r in records
    ]
    return "\n".join(lines) + "\n"


def _render_sp(result, fmt):
    records = partition_sp(result)
    if fmt == "json":
        out = [
            {
                "p": rec.p,
                "next_prime": rec.next_prime,
                "count": rec.count,
                "generic": rec.is_generic,
                "members": [m.group.name for m in rec.members],
            }
            for rec in records
        ]
        return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in out)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "count", "generic", "member"])
        for rec in records:
            for m in rec.members:
                w.writerow([rec.p, rec.count, rec.is_generic, m.group.name])
        return buf.getvalue()
    lines = []
    for rec in records:
        tag = " (generic)" if rec.is_generic else ""
        lines.append(f"S_{rec.p}  #{rec.count}{tag}")
        for m in rec.members:
            spec = "".join(
                f" {r}^{e}" if e > 1 else f" {r}" for r, e in m.spectrum.parts
            )
            lines.append(f"  {m.group.name:<12}{spec}")
    return "\n".join(lines) + "\n"


def _render_series(result, fmt):
    computed = computed_series(result.names)
    rows = []
    for key, fixture in TABLE4_ROWS.items():
        values = computed.get(key, set())
        rows.append((fixture["series"], fixture["kind"], values))
    for key in sorted(set(computed) - set(TABLE4_ROWS), key=repr):
        values = computed[key]
        rows.append((repr(key), "q", values))
    if fmt == "json":
        out = [
            {"series": series, "param": kind, "values": sorted(values)}
            for series, kind, values in rows
        ]
        return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in out)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["series", "param", "values"])
        for series, kind, values in rows:
            w.writerow([series, kind, ";".join(map(str, sorted(values)))])
        return buf.getvalue()
    lines = []
    for series, kind, values in rows:
        if kind == "name":
            body = ", ".join(sorted(map(str, values))) or "---"
        elif kind in ("n", "p"):
            body = f"{kind} = " + collapse_runs(values, prime_steps=(kind == "p"))
        else:
            body = f"{kind} = " + (", ".join(map(str, sorted(values))) or "---")
        lines.append(f"{series}: {body}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VerificationReport:
    total_classes: int
    total_names: int
    expected_total: int
    table2_missing: tuple[int, ...]
    table2_extra: tuple[int, ...]
    table4_diffs: dict  # series label -> (missing values, extra values)
    passed: bool

    def summary(self) -> str:
        lines = [
            f"classes: {self.total_classes} (expected {self.expected_total})",
            f"names (aliases included): {self.total_names}",
        ]
        if self.table2_missing or self.table2_extra:
            lines.append(
                f"generic-prime diffs: missing {list(self.table2_missing)}, "
                f"extra {list(self.table2_extra)}"
            )
        else:
            lines.append("generic primes in [100,1000]: exact match (33)")
        if self.table4_diffs:
            for series, (missing, extra) in sorted(self.table4_diffs.items()):
                lines.append(f"series {series}: missing {missing}, extra {extra}")
        else:
            lines.append("series table: exact match")
        lines.append("PASSED" if self.passed else "FAILED")
        return "\n".join(lines) + "\n"


def verify_against_paper(result: EnumerationResult) -> VerificationReport:
    """Diff a full run (primes up to 1000) against the embedded expectations."""
    expected_pi = sieve_primes(1000)
    if result.pi.primes != expected_pi.primes:
        raise ValueError("verification is defined for the prime set {p <= 1000}")

    generic = tuple(
        rec.p for rec in partition_sp(result) if rec.is_generic and 100 <= rec.p <= 1000
    )
    t2_missing = tuple(p for p in TABLE2_GENERIC_PRIMES if p not in generic)
    t2_extra = tuple(p for p in generic if p not in TABLE2_GENERIC_PRIMES)

    computed = computed_series(result.names)
    diffs = {}
    for key, fixture in TABLE4_ROWS.items():
        have = computed.get(key, set())
        want = set(fixture["values"])
        missing = tuple(sorted(want - have))
        extra = tuple(sorted(have - want))
        if missing or extra:
            diffs[fixture["series"]] = (missing, extra)
    for key in set(computed) - set(TABLE4_ROWS):
        diffs[repr(key)] = ((), tuple(sorted(computed[key])))

    passed = (
        len(result.classes) == EXPECTED_TOTAL_CLASSES
        and not t2_missing
        and not t2_extra
        and not diffs
    )
    return VerificationReport(
        total_classes=len(result.classes),
        total_names=len(result.names),
        expected_total=EXPECTED_TOTAL_CLASSES,
        table2_missing=t2_missing,
        table2_extra=t2_extra,
        table4_diffs=diffs,
        passed=passed,
    )
