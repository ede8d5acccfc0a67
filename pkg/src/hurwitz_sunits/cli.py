"""Command line entry point: ``hurwitz-sunits <command> ...``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .analysis import CapExceeded, abelianization
from .congruence import InvalidPrime, PrimeInS, congruence_image
from .hurwitz import NoOddPrimes, SPrimeSet
from .io import export, fixture_names, from_json, load_fixture
from .norms import elements_of_norm
from .presentation import SizeLimitExceeded, build_main, build_oracle, verify_presentation
from .tietze import SimplifyBudget, simplify


class UsageError(Exception):
    pass


def _primes(text: str) -> SPrimeSet:
    try:
        return SPrimeSet.parse(text)
    except NoOddPrimes as exc:
        raise UsageError(str(exc)) from None
    except ValueError:
        raise UsageError(f"cannot read primes from {text!r}") from None


def _source(args) -> "object":
    if getattr(args, "fixture", None):
        try:
            return load_fixture(args.fixture)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if getattr(args, "file", None):
        path = Path(args.file)
        if not path.exists():
            raise UsageError(f"no such file: {path}")
        try:
            return from_json(path.read_text())
        except (ValueError, KeyError) as exc:
            raise UsageError(f"{path}: {exc}") from None
    if getattr(args, "primes", None):
        primes = _primes(args.primes)
        if not len(primes):
            raise UsageError("at least one odd prime is required")
        if getattr(args, "oracle", False):
            return build_oracle(primes)
        return build_main(primes)
    raise UsageError("give --primes, --fixture or --file")


def cmd_present(args) -> int:
    pres = _source(args)
    if args.simplify:
        pres = simplify(pres, SimplifyBudget())
    text = export(pres, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    counts = pres.provenance.get("type_counts")
    if counts:
        print(
            f"Type 1+2: {counts['1'] + counts['2']}\nType 3: {counts['3']}\nType 4: {counts['4']}",
            file=sys.stderr,
        )
    return 0


def cmd_enumerate(args) -> int:
    if args.norm < 1:
        raise UsageError("norm must be positive")
    elems = elements_of_norm(args.norm)
    print(len(elems))
    if not args.count_only:
        for e in elems:
            print(" ".join(map(str, e)))
    return 0


def cmd_verify(args) -> int:
    pres = _source(args)
    report = verify_presentation(pres)
    for i, s in enumerate(report.scalars, start=1):
        print(f"r{i}: {'not scalar' if s is None else s}")
    for g in report.bad_witnesses:
        print(f"generator {g}: norm {pres.generators[g - 1].witness.norm} is not S-smooth")
    print(report.summary())
    return 0 if report.passed else 1


def cmd_abelianize(args) -> int:
    pres = _source(args)
    inv = abelianization(pres)
    print(f"torsion: {list(inv.torsion)}")
    print(f"free rank: {inv.free_rank}")
    print(inv)
    return 0


def cmd_congruence(args) -> int:
    pres = _source(args)
    try:
        report = congruence_image(pres, args.q, args.power, cap=args.cap, raise_on_cap=False)
    except (PrimeInS, InvalidPrime) as exc:
        raise UsageError(str(exc)) from None
    print(report.summary())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-sunits",
        description="Presentations of projective S-unit groups of the Hurwitz order.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p, fixtures=True, files=True):
        p.add_argument("--primes", help="comma separated odd primes, e.g. 3,5")
        p.add_argument("--oracle", action="store_true", help="use the one-generator-per-class builder")
        if fixtures:
            p.add_argument("--fixture", choices=fixture_names())
        if files:
            p.add_argument("--file", help="presentation in JSON form")

    p = sub.add_parser("present", help="build and export a presentation")
    add_source(p, fixtures=True, files=True)
    p.add_argument("--simplify", action="store_true")
    p.add_argument("--format", choices=["json", "gap", "magma"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("enumerate", help="list Hurwitz elements of a given norm")
    p.add_argument("--norm", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check every relator evaluates to a scalar")
    add_source(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("abelianize", help="abelian invariants of a presentation")
    add_source(p)
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("congruence", help="reduce a presentation modulo q^r")
    add_source(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=cmd_congruence)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (SizeLimitExceeded, CapExceeded) as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
