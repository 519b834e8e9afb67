"""Command-line front end.

Exit codes: 0 success/verified, 1 usage error, 2 group-name or
non-simple-group error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys

from .arithmetic import PrimeSet, is_prime, sieve_primes
from .catalog import GroupNameError, canonical_id, order_int, parse_name, spectrum
from .enumerator import enumerate_groups, partition_sp
from .report import FORMATS, STYLES, render, verify_against_paper

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NAME = 2
EXIT_MISMATCH = 3


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pispec",
        description="Orders, prime spectra, and bounded-spectrum censuses of "
        "nonabelian finite simple groups.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_order = sub.add_parser("order", help="print the decimal order of a group")
    p_order.add_argument("name")

    p_spec = sub.add_parser("spectrum", help="factor a group order over primes <= bound")
    p_spec.add_argument("name")
    p_spec.add_argument("--bound", type=int, default=1000)

    p_enum = sub.add_parser("enumerate", help="all simple groups with spectrum in a prime set")
    src = p_enum.add_mutually_exclusive_group(required=True)
    src.add_argument("--max-prime", type=int)
    src.add_argument("--primes", help="comma-separated explicit prime list")
    p_enum.add_argument("--format", choices=FORMATS, default="text")
    p_enum.add_argument("--style", choices=STYLES, default="flat")
    p_enum.add_argument("--dedup", choices=("classes", "names"), default="classes")
    p_enum.add_argument("--out")
    p_enum.add_argument("--jobs", type=int, default=1)
    p_enum.add_argument("--margin", type=int, default=0)

    p_sp = sub.add_parser("sp", help="the S_p record for the initial segment of primes <= p")
    p_sp.add_argument("p", type=int)
    p_sp.add_argument("--format", choices=FORMATS, default="text")

    p_ver = sub.add_parser("verify-paper", help="run the full census for primes <= 1000 "
                           "and diff it against the published tables")
    p_ver.add_argument("--jobs", type=int, default=1)
    return ap


def _resolve(name: str):
    gid = parse_name(name)
    res = canonical_id(gid)
    if res.kind == "not-simple":
        raise GroupNameError(f"{name}: not a simple group ({res.reason})")
    return res.group if res.kind == "alias" else gid


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        if args.command == "order":
            print(order_int(_resolve(args.name)))
            return EXIT_OK

        if args.command == "spectrum":
            gid = _resolve(args.name)
            fact = spectrum(gid, sieve_primes(args.bound))
            body = " * ".join(
                f"{r}^{e}" if e > 1 else str(r) for r, e in fact.parts
            ) or "1"
            if fact.cofactor != 1:
                body += f"  (cofactor {fact.cofactor})"
            print(body)
            return EXIT_OK

        if args.command == "enumerate":
            if args.jobs < 1 or args.margin < 0:
                print("jobs must be >= 1 and margin >= 0", file=sys.stderr)
                return EXIT_USAGE
            if args.max_prime is not None:
                prime_set = sieve_primes(args.max_prime)
            else:
                try:
                    prime_set = PrimeSet.of(int(x) for x in args.primes.split(","))
                except ValueError as exc:
                    print(f"bad prime list: {exc}", file=sys.stderr)
                    return EXIT_USAGE
            result = enumerate_groups(prime_set, margin=args.margin, jobs=args.jobs)
            _emit(render(result, args.format, args.style, args.dedup), args.out)
            return EXIT_OK

        if args.command == "sp":
            if not is_prime(args.p):
                print(f"{args.p} is not prime", file=sys.stderr)
                return EXIT_USAGE
            result = enumerate_groups(sieve_primes(args.p))
            record = next(rec for rec in partition_sp(result) if rec.p == args.p)
            if args.format == "json":
                import json

                print(json.dumps({
                    "p": record.p,
                    "next_prime": record.next_prime,
                    "count": record.count,
                    "generic": record.is_generic,
                    "members": [m.group.name for m in record.members],
                }, separators=(",", ":")))
            elif args.format == "csv":
                print("p,count,generic,member")
                for m in record.members:
                    print(f"{record.p},{record.count},{record.is_generic},{m.group.name}")
            else:
                tag = " (generic)" if record.is_generic else ""
                print(f"S_{record.p}  #{record.count}{tag}")
                for m in record.members:
                    spec = " ".join(
                        f"{r}^{e}" if e > 1 else str(r) for r, e in m.spectrum.parts
                    )
                    print(f"  {m.group.name:<12} {spec}")
            return EXIT_OK

        if args.command == "verify-paper":
            result = enumerate_groups(sieve_primes(1000), jobs=args.jobs)
            report = verify_against_paper(result)
            sys.stdout.write(report.summary())
            return EXIT_OK if report.passed else EXIT_MISMATCH

    except GroupNameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NAME
    raise AssertionError("unreachable")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
