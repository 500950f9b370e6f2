"""Command-line interface.

Subcommands:
  invariant  evaluate one invariant of one braid closure
  kauffman   the two-variable Kauffman/Dubrovnik trace of a braid closure
  table      recompute the x = 2a invariant over the embedded catalog
  verify     run the verification suites

Exit code 0 means every strict comparison passed.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .braids import BraidWord, parity_invariant, parse_braid
from .coxeter import T0Invariant, ThmTraceConfig
from .hecke import HeckeRing, OcneanuTrace, hecke_trace_qa
from .qa import QA
from .rings import RingError, spec_ax_point
from .skein import kauffman_at_point, markov_trace_pm
from .verify import run_suite, table_report

AT_SPECS = {
    "x2a": "2*a",
    "xa": "a",
    "xm2a": "-2*a",
}


def _braid_from_args(args) -> BraidWord:
    if args.braid is None or args.strands is None:
        raise SystemExit("--braid and --strands are required")
    return parse_braid(args.braid, args.strands)


def cmd_invariant(args) -> int:
    braid = _braid_from_args(args)
    which = args.which
    if which == "t0x2a":
        value = T0Invariant(ThmTraceConfig(base=Fraction(args.base))).value(braid)
        print(value.render())
    elif which == "hecke":
        if args.at is None:
            print(OcneanuTrace().of_braid(braid).render())
        elif args.at == "x2a":
            print(hecke_trace_qa(braid, OcneanuTrace(HeckeRing.at_parity_point())).render())
        else:
            raise SystemExit("hecke supports --at x2a only")
    elif which in ("kauffman+", "kauffman-"):
        variant = which[-1]
        if args.at is None:
            print(markov_trace_pm(braid, variant).render())
        else:
            print(kauffman_at_point(braid, spec_ax_point(AT_SPECS[args.at])).render())
    elif which == "parity":
        print(parity_invariant(braid).render())
    else:
        raise SystemExit(f"unknown invariant {which!r}")
    return 0


def cmd_kauffman(args) -> int:
    braid = _braid_from_args(args)
    if args.at is not None:
        spec_text = AT_SPECS.get(args.at)
        if spec_text is None:
            raise SystemExit(f"unknown point {args.at!r}; choose from {sorted(AT_SPECS)}")
        try:
            value = kauffman_at_point(braid, spec_ax_point(spec_text))
        except RingError as exc:
            raise SystemExit(str(exc))
        print(value.render())
    else:
        print(markov_trace_pm(braid, args.variant).render())
    return 0


def cmd_table(args) -> int:
    rep = table_report(path=args.input)
    print(rep.render(timings=args.timings))
    return 0 if rep.ok else 1


def cmd_verify(args) -> int:
    rep = run_suite(args.suite, seed=args.seed, pit_points=args.pit_points,
                    symbolic_gram=args.symbolic_gram)
    print(rep.render(timings=args.timings))
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubictrace", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariant", help="evaluate one invariant of a braid closure")
    inv.add_argument("--which", required=True,
                     choices=["t0x2a", "hecke", "kauffman+", "kauffman-", "parity"])
    inv.add_argument("--braid", help="whitespace-separated signed generator indices")
    inv.add_argument("--strands", type=int)
    inv.add_argument("--at", choices=sorted(AT_SPECS), default=None)
    inv.add_argument("--base", type=int, default=0,
                     help="base value of the theorem trace (provably irrelevant)")
    inv.set_defaults(func=cmd_invariant)

    kau = sub.add_parser("kauffman", help="two-variable Kauffman/Dubrovnik trace")
    kau.add_argument("--braid", required=True)
    kau.add_argument("--strands", type=int, required=True)
    kau.add_argument("--variant", choices=["+", "-"], required=True)
    kau.add_argument("--at", choices=sorted(AT_SPECS), default=None)
    kau.set_defaults(func=cmd_kauffman)

    tab = sub.add_parser("table", help="recompute the x = 2a invariant catalog")
    tab.add_argument("--input", default=None, help="alternate TSV path")
    tab.add_argument("--column", default="x2a", choices=["x2a"],
                     help="which tabulated column to compare (only x2a is computable)")
    tab.add_argument("--timings", action="store_true")
    tab.set_defaults(func=cmd_table)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", default="all",
                     choices=["h3", "braid", "skein", "hecke", "coxeter", "tl", "all"])
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--pit-points", type=int, default=7, dest="pit_points")
    ver.add_argument("--symbolic-gram", action="store_true", dest="symbolic_gram",
                     help="also run the fully symbolic Gram determinants (slow)")
    ver.add_argument("--timings", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
