"""Command-line front end.

Exit codes: 0 success, 1 a property or verification failure, 2 a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, Sequence

from . import counting, seqfile
from .construct import (
    ConstructionError,
    maximal_os2,
    nos2_construction1,
    nos_construction2,
    nos_construction3,
)
from .core import RingSequence
from .lempel import (
    build_os_n,
    delete_from_uniform_run,
    find_unit_adjustment,
    inverse_lift,
    make_unit_weight,
    recursive_tower,
)
from .verify import check, is_negative_orientable, is_orientable

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(seq: RingSequence, n: int, out: Optional[str], trailer: Sequence[str] = ()) -> None:
    if out:
        seqfile.write(out, seq, n)
    else:
        sys.stdout.write(seqfile.dumps(seq, n))
    for line in trailer:
        print(line)


def _load(path: str):
    try:
        return seqfile.read(path)
    except (OSError, seqfile.SequenceFileError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_generate(args) -> int:
    method, q = args.method, args.q
    if method in ("os2", "nos2"):
        if args.n not in (None, 2):
            raise UsageError(f"method {method} fixes n=2")
        n = 2
    else:
        if args.n is None:
            raise UsageError(f"method {method} needs --n")
        n = args.n
    try:
        if method == "os2":
            seq, report = maximal_os2(q)
        elif method == "nos2":
            seq, report = nos2_construction1(q)
        elif method == "nos-pw":
            seq, report = nos_construction2(q, n)
        else:
            seq, report = nos_construction3(q, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(seq, n, args.out, [report.line()])
    return EXIT_OK


def cmd_lift(args) -> int:
    seq, n = _load(args.inp)
    if not is_negative_orientable(seq, n):
        print(f"input is not negative orientable at order {n}", file=sys.stderr)
        return EXIT_FAIL
    if args.ensure_unit:
        try:
            seq, deleted = make_unit_weight(seq, n)
        except ValueError as exc:
            print(f"cannot reach a unit weight: {exc}", file=sys.stderr)
            return EXIT_FAIL
        if deleted:
            print(f"deleted {','.join(map(str, deleted))} -> period {seq.period}", file=sys.stderr)
    lift = inverse_lift(seq, start=args.start)
    out = lift.sequence
    status = "orientable" if is_orientable(out, n + 1) else "not-orientable"
    _emit(out, n + 1, args.out, [f"lift {out.period} {out.weight_mod_q()} h={lift.order} {status}"])
    if lift.order == seq.q and status != "orientable":
        return EXIT_FAIL
    return EXIT_OK


def cmd_recurse(args) -> int:
    seq, n = _load(args.inp)
    try:
        final, trace = recursive_tower(seq, n, args.target_n)
    except ValueError as exc:
        print(f"seed rejected: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ConstructionError as exc:
        print(f"recursion failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rows = [f"{r.order} {r.period} {r.weight} {r.parity}" for r in trace.rows]
    if args.out:
        seqfile.write(args.out, final, args.target_n)
    for row in rows:
        print(row)
    return EXIT_OK


_PROPS = {
    "n-window": "n_window",
    "orientable": "orientable",
    "negative-orientable": "negative_orientable",
    "good": "good",
}


def cmd_verify(args) -> int:
    seq, n = _load(args.inp)
    n = args.n if args.n is not None else n
    verdict = check(seq, n, _PROPS[args.property])
    print(verdict)
    return EXIT_OK if verdict.holds else EXIT_FAIL


_BOUNDS: dict[str, Callable[[int, int], int]] = {
    "nos": counting.nos_bound,
    "simple-nos": counting.simple_nos_bound,
    "os2": lambda q, n: counting.os2_max_period(q),
    "construction2": counting.construction2_period,
    "construction3": counting.construction3_period,
    "os3": lambda q, n: counting.os3_lower_bound(q),
    "osn": counting.osn_lower_bound,
}


def cmd_bound(args) -> int:
    try:
        print(_BOUNDS[args.kind](args.q, args.n))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_enum(args) -> int:
    q, n = args.q, args.n
    if q < 2 or n < 1:
        raise UsageError("need q >= 2 and n >= 1")
    if args.weights == "pseudo":
        row = counting.count_table(counting.PSEUDOWEIGHT, q).row(n)
        for d in sorted(row):
            print(f"{d / 2:g} {row[d]}")
    else:
        row = counting.count_table(counting.ZEROFREE, q).row(n)
        for d in sorted(row):
            print(f"{d // 2} {row[d]}")
    return EXIT_OK


def format_table(max_q: int, max_n: int) -> str:
    qs = range(2, max_q + 1)
    cells = {(q, n): str(counting.nos_bound(q, n)) for q in qs for n in range(2, max_n + 1)}
    width = max([len(c) for c in cells.values()] + [len(f"q={max_q}")])
    lines = ["Order " + " ".join(f"q={q}".rjust(width) for q in qs)]
    for n in range(2, max_n + 1):
        lines.append(f"n={n}".ljust(6) + " ".join(cells[q, n].rjust(width) for q in qs))
    return "\n".join(lines)


def cmd_table(args) -> int:
    if args.max_q < 2 or args.max_n < 2:
        raise UsageError("need --max-q >= 2 and --max-n >= 2")
    print(format_table(args.max_q, args.max_n))
    return EXIT_OK


def demo_checks() -> list[tuple[str, str, Callable[[], tuple[int, bool]], Callable[[int], bool]]]:
    """(name, expected, producer of (period, verdict), acceptance test on the period)."""

    def nos(gen, q, n):
        def run():
            seq, _ = gen(q, n)
            return seq.period, bool(is_negative_orientable(seq, n))
        return run

    def lift32():
        seq, _ = nos_construction2(3, 2)
        out = inverse_lift(seq, order=2).sequence
        return out.period, bool(is_orientable(out, 3))

    def osn(q, n):
        def run():
            seq, _ = build_os_n(q, n)
            return seq.period, bool(is_orientable(seq, n))
        return run

    def tower33():
        seed, _ = nos_construction3(3, 3)
        out, _ = recursive_tower(seed, 3, 4)
        return out.period, bool(is_orientable(out, 4))

    def tower42():
        seed, _ = nos_construction3(4, 2)
        for i in find_unit_adjustment(4, seed.weight_mod_q()):
            seed = delete_from_uniform_run(seed, i, 2)
        out, _ = recursive_tower(seed, 2, 3)
        return out.period, bool(is_orientable(out, 3))

    def eq(x):
        return lambda p: p == x

    return [
        ("nos_pseudoweight_q3_n2", "3", nos(nos_construction2, 3, 2), eq(3)),
        ("nos_pseudoweight_q3_n3", "10", nos(nos_construction2, 3, 3), eq(10)),
        ("nos_pseudoweight_q4_n3", "22", nos(nos_construction2, 4, 3), eq(22)),
        ("nos_zerofree_q3_n3", "4", nos(nos_construction3, 3, 3), eq(4)),
        ("nos_zerofree_q4_n3", "10", nos(nos_construction3, 4, 3), eq(10)),
        ("os_lift_q3_n3", "9", lift32, eq(9)),
        ("os_lift_q3_n4", ">=27", osn(3, 4), lambda p: p >= 27),
        ("os_lift_q4_n4", "84", osn(4, 4), eq(84)),
        ("os_tower_q3_n4", "13", tower33, eq(13)),
        ("os_tower_q4_n3", "9", tower42, eq(9)),
    ]


def run_demo(write: Callable[[str], None] = print) -> bool:
    checks = demo_checks()
    passed = 0
    for name, expected, run, accept in checks:
        try:
            period, verdict = run()
            ok = verdict and accept(period)
            actual = str(period)
        except (ConstructionError, ValueError) as exc:
            ok, actual = False, f"error:{type(exc).__name__}"
        passed += ok
        write(f"{name} {expected} {actual} {'pass' if ok else 'FAIL'}")
    write(f"{passed}/{len(checks)} checks passed")
    return passed == len(checks)


def cmd_demo(args) -> int:
    return EXIT_OK if run_demo() else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orientseq",
        description="Construct, lift and verify orientable and negative orientable sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a sequence with one of the constructions")
    p.add_argument("--method", required=True, choices=["os2", "nos2", "nos-pw", "nos-zf"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("lift", help="apply the inverse Lempel map to a negative orientable sequence")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--ensure-unit", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("recurse", help="grow a tower of good sequences from a seed")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--target-n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_recurse)

    p = sub.add_parser("verify", help="check a property of a sequence file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--property", required=True, choices=list(_PROPS))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="print a period bound or predicted period")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--kind", default="nos", choices=list(_BOUNDS))
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("enum", help="tuple counts by pseudoweight or zero-free weight")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", default="pseudo", choices=["pseudo", "zerofree"])
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("table", help="grid of negative orientable period bounds")
    p.add_argument("--max-q", type=int, default=5)
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("demo", help="rebuild the worked examples and check them")
    p.add_argument("--paper-examples", action="store_true")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except ConstructionError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
