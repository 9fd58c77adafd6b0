"""Command-line front end.

Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error,
3 input parse error, 4 resource limit hit.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import digraph as dg
from . import family as fam
from . import io as pio
from . import search
from .errors import ParseError, PosatError, TooLarge
from .poset import Poset, dot_extension, dual, has_legs


def _load_poset(spec: str) -> Poset:
    """Specs containing `=` are catalog references (`name=chain:3`); anything
    else is a file path."""
    if "=" in spec:
        key, value = spec.split("=", 1)
        if key != "name":
            raise ParseError(f"bad poset spec {spec!r}")
        return pio.parse_poset_spec(value)
    return pio.parse_poset(Path(spec).read_text())


def _load_family(path: str) -> fam.SetFamily:
    return pio.parse_family(Path(path).read_text())


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _default_time_limit() -> float | None:
    raw = os.environ.get("POSAT_TIME_LIMIT_SECS")
    return float(raw) if raw else None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="posat", description=__doc__)
    ap.add_argument("--pretty", action="store_true", help="human-readable tables")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-saturated", help="saturation verdict for a family")
    p.add_argument("--family", required=True)
    p.add_argument("--poset", action="append", required=True)

    p = sub.add_parser("satstar", help="bounds / exact minimum saturated size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poset", action="append", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--bounds", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--time-limit", type=float, default=_default_time_limit())
    p.add_argument("--jobs", type=int, default=1, help="reserved; runs single-process")
    p.add_argument("--out")

    p = sub.add_parser("construct", help="write a named family construction")
    p.add_argument(
        "--name",
        required=True,
        choices=["unique-pairs", "y-upper", "x-upper", "wedge", "xell"],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--out")

    p = sub.add_parser("blowup", help="lift a family from [n] to [n+1]")
    p.add_argument("--family", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("digraph", help="digraph operations")
    p.add_argument("action", choices=["aux", "tc-check", "contract", "turan", "brute-max"])
    p.add_argument("--family")
    p.add_argument("--digraph")
    p.add_argument("--cycle", help="comma-separated 1-based vertices")
    p.add_argument("--n", type=int)
    p.add_argument("--out")

    p = sub.add_parser("legs", help="legs witness of a poset")
    p.add_argument("--poset", required=True)

    p = sub.add_parser("dual", help="order-reversed poset")
    p.add_argument("--poset", required=True)
    p.add_argument("--out")

    p = sub.add_parser("dot", help="poset plus a new maximum element")
    p.add_argument("--poset", required=True)
    p.add_argument("--out")

    p = sub.add_parser("export-dot", help="DOT export")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--poset")
    g.add_argument("--family")
    g.add_argument("--digraph")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="re-run the full self-check suite")
    p.add_argument("--fast", action="store_true")
    p.add_argument("--slow", action="store_true")
    return ap


def _cmd_check_saturated(args) -> int:
    F = _load_family(args.family)
    posets = [_load_poset(s) for s in args.poset]
    report = fam.is_induced_saturated(F, posets)
    print(f"saturated={str(report.saturated).lower()}")
    if report.forbidden_copy is not None:
        idx, mapping = report.forbidden_copy
        copy = " ".join(pio.format_member(F.members[j]) for j in sorted(mapping))
        print(f"violating_copy poset={idx + 1} members={copy}")
    if report.addable is not None:
        print(f"addable={pio.format_member(report.addable)}")
    return 0 if report.saturated else 1


def _cmd_satstar(args) -> int:
    posets = [_load_poset(s) for s in args.poset]
    config = search.SearchConfig(
        time_limit=args.time_limit,
        ordering="random" if args.seed is not None else "lex",
        seed=args.seed,
    )
    if args.bounds:
        greedy = search.greedy_saturate(args.n, posets, config=search.SearchConfig())
        lower, kind = 1, "trivial"
        if len(posets) == 1 and args.n >= 3:
            cert = search.legs_lower_bound(posets[0], args.n)
            if cert is not None:
                lower, kind = cert.bound, cert.kind
        result = search.SatStarResult(
            args.n, tuple(posets), min(lower, len(greedy)), kind, len(greedy), greedy, exact=False
        )
    else:
        result = search.exact_sat_star(args.n, posets, config)
    _emit(pio.format_result(result), args.out)
    return 0 if result.exact or args.bounds else 4


def _cmd_construct(args) -> int:
    if args.name == "unique-pairs":
        F = fam.unique_pair_family(args.n)
    elif args.name == "y-upper":
        F = fam.y_upper_family(args.n)
    elif args.name == "x-upper":
        F = fam.x_upper_family(args.n)
    else:
        if args.l is None:
            print("--l required for this construction", file=sys.stderr)
            return 2
        if args.name == "wedge":
            F = fam.wedge_upper_family(args.n, args.l)
        else:
            F = fam.xell_upper_family(args.n, args.l)
    _emit(pio.format_family(F), args.out)
    return 0


def _cmd_digraph(args) -> int:
    if args.action == "aux":
        F = _load_family(args.family)
        _emit(pio.format_digraph(dg.auxiliary_digraph(F)), args.out)
        return 0
    if args.action == "turan":
        _emit(pio.format_digraph(dg.turan_bipartite(args.n)), args.out)
        return 0
    if args.action == "brute-max":
        count, witness = dg.max_tc_free_edges_bruteforce(args.n)
        print(f"max_edges={count}")
        _emit(pio.format_digraph(witness), args.out)
        return 0
    D = pio.parse_digraph(Path(args.digraph).read_text())
    if args.action == "tc-check":
        witness = dg.has_transitive_cycle(D)
        if witness is None:
            print("transitive_cycle=none")
            print(f"edges={D.edge_count()}")
            return 0
        print("transitive_cycle=" + ",".join(str(v + 1) for v in witness))
        return 1
    # contract
    cycle = [int(v) - 1 for v in args.cycle.split(",")]
    _emit(pio.format_digraph(dg.contract_cycle(D, cycle)), args.out)
    return 0


def _cmd_verify(args) -> int:
    from .verify import run_checks

    checks = run_checks(fast=args.fast, slow=args.slow)
    failed = 0
    for label, ok, detail in checks:
        tag = "PASS" if ok else "FAIL"
        suffix = f"  ({detail})" if detail else ""
        print(f"{tag} {label}{suffix}")
        failed += not ok
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check-saturated":
            return _cmd_check_saturated(args)
        if args.command == "satstar":
            return _cmd_satstar(args)
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "blowup":
            F = _load_family(args.family)
            _emit(pio.format_family(fam.blow_up(F, args.i)), args.out)
            return 0
        if args.command == "digraph":
            return _cmd_digraph(args)
        if args.command == "legs":
            w = has_legs(_load_poset(args.poset))
            if w is None:
                print("legs=none")
                return 1
            print(f"legs={w.leg1 + 1},{w.leg2 + 1} hip={w.hip + 1}")
            return 0
        if args.command == "dual":
            _emit(pio.format_poset(dual(_load_poset(args.poset))), args.out)
            return 0
        if args.command == "dot":
            _emit(pio.format_poset(dot_extension(_load_poset(args.poset))), args.out)
            return 0
        if args.command == "export-dot":
            if args.poset:
                _emit(pio.poset_dot(_load_poset(args.poset)), args.out)
            elif args.family:
                _emit(pio.family_dot(_load_family(args.family)), args.out)
            else:
                D = pio.parse_digraph(Path(args.digraph).read_text())
                _emit(pio.digraph_dot(D), args.out)
            return 0
        if args.command == "verify":
            return _cmd_verify(args)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except TooLarge as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4
    except FileNotFoundError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 3
    except PosatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
