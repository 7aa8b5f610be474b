"""Command-line front end.

Exit status contract: 0 success / property holds, 1 property violated
(witness printed), 2 resource or budget limit hit, 64 usage error.
"""

from __future__ import annotations

import argparse
import random
import sys

from .codes import (
    BudgetExceeded,
    Code,
    code_from_text,
    code_to_text,
    framed_witness_holds,
    make_code,
    read_code_file,
    write_code_file,
)
from .construct import (
    BASE_CODE_INFO,
    augment_infinity,
    base_code,
    oa_family_code,
    oa_lift,
    polynomial_lift,
)
from .oa import (
    build_oa_strength2,
    make_oa,
    oa_from_text,
    oa_to_text,
    read_oa_file,
    verify_oa,
    write_oa_file,
)
from .plan import (
    achieved_rate,
    bound_report,
    execute_plan,
    format_plan,
    plan_code,
)
from .verify import NAIVE_BUDGET, is_frameproof_cover, is_frameproof_naive, is_t_determined

_BASE_RECIPES = {f"base-{name}": name for name in BASE_CODE_INFO}
_RECIPES = sorted(_BASE_RECIPES) + ["poly-lift", "oa-lift", "oa-family"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="frameproof", description=__doc__)
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--budget", type=int, default=NAIVE_BUDGET,
                        help="work budget for the naive verifier")
    parser.add_argument("--jobs", type=int, default=1, help="verifier worker processes")
    parser.add_argument("--quiet", action="store_true", help="suppress per-item output")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("construct", help="build a code and write it to a file")
    p.add_argument("--recipe", required=True, choices=_RECIPES)
    p.add_argument("--m", type=int, help="lift field order")
    p.add_argument("--c", type=int, help="coalition bound")
    p.add_argument("--t", type=int, help="determinedness parameter (default 2)")
    p.add_argument("--s", type=int, help="array symbol count for oa-lift (default c+1)")
    p.add_argument("--in", dest="parent", metavar="PARENT",
                   help="parent .fpc file for poly-lift")
    p.add_argument("--augment-inf", action="store_true",
                   help="adjoin the all-infinity word afterwards")
    p.add_argument("--out", required=True)

    p = sub.add_parser("verify", help="check a code file for c-frameproofness")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--algorithm", choices=["naive", "cover", "both"], default="cover")
    p.add_argument("codefile")

    p = sub.add_parser("plan", help="plan (and optionally build) a family code")
    p.add_argument("--c", type=int, required=True, choices=[2, 3])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--execute", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("oa", help="emit a strength-2 orthogonal array")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("oa-verify", help="exhaustively check an .oa file")
    p.add_argument("oafile")

    p = sub.add_parser("bounds", help="cardinality and rate bounds for (c, l, q)")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--code", help=".fpc file whose size to compare against the bounds")

    sub.add_parser("selftest", help="run the built-in fixture and oracle battery")

    p = sub.add_parser("import", help="parse and validate a .fpc or .oa file")
    p.add_argument("file")

    p = sub.add_parser("export", help="re-emit a .fpc or .oa file in canonical form")
    p.add_argument("file")
    p.add_argument("--out")

    return parser


def _print_word(word, code: Code) -> str:
    return " ".join(
        "*" if code.inf_id is not None and v == code.inf_id else str(v) for v in word
    )


def _print_witness(witness, code: Code) -> None:
    if witness.kind == "framed":
        print("coalition:")
        for w in witness.coalition:
            print(f"  {_print_word(w, code)}")
        print("framed word:")
        print(f"  {_print_word(witness.framed_word, code)}")
    elif witness.kind in ("inf_count", "agreement"):
        for w in witness.pair:
            print(f"  {_print_word(w, code)}")
        print(f"  positions: {list(witness.positions)}")
    else:
        print(f"  rows {list(witness.rows)}: tuple {list(witness.symbols)} "
              f"appears {witness.count} times, expected {witness.expected}")


def _cmd_construct(args) -> int:
    recipe = args.recipe
    t = 2 if args.t is None else args.t
    if recipe in _BASE_RECIPES:
        for flag, name in ((args.m, "--m"), (args.s, "--s"), (args.parent, "--in")):
            if flag is not None:
                raise _UsageError(f"{name} does not apply to recipe {recipe}")
        code = base_code(_BASE_RECIPES[recipe])
        c = args.c if args.c is not None else BASE_CODE_INFO[_BASE_RECIPES[recipe]][3]
    elif recipe == "poly-lift":
        if args.parent is None or args.m is None or args.c is None:
            raise _UsageError("poly-lift needs --in, --m and --c")
        parent = read_code_file(args.parent)
        c = args.c
        code = polynomial_lift(parent, args.m, t, c)
    elif recipe == "oa-lift":
        if args.m is None or args.c is None:
            raise _UsageError("oa-lift needs --m and --c")
        c = args.c
        s = args.s if args.s is not None else c + 1
        code = oa_lift(s, t, s + 1, args.m, c)
    else:  # oa-family
        if args.m is None or args.c is None:
            raise _UsageError("oa-family needs --m and --c")
        c = args.c
        code = oa_family_code(c, args.m)
    if args.augment_inf:
        code = augment_infinity(code, c, t)
    write_code_file(code, args.out)
    if not args.quiet:
        print(f"wrote {args.out}: {code!r}")
    return 0


def _cmd_verify(args) -> int:
    code = read_code_file(args.codefile)
    algorithms = ["naive", "cover"] if args.algorithm == "both" else [args.algorithm]
    violated = False
    exceeded = False
    for name in algorithms:
        try:
            if name == "naive":
                report = is_frameproof_naive(code, args.c, budget=args.budget)
            else:
                report = is_frameproof_cover(code, args.c, jobs=args.jobs)
        except BudgetExceeded as exc:
            print(f"{name}: budget exceeded ({exc})")
            exceeded = True
            continue
        if report.verdict:
            if not args.quiet:
                print(f"{name}: frameproof (c={args.c}), "
                      f"examined={report.subsets_examined}, elapsed={report.elapsed:.3f}s")
        else:
            violated = True
            print(f"{name}: NOT frameproof (c={args.c})")
            _print_witness(report.witness, code)
    if violated:
        return 1
    if exceeded:
        return 2
    return 0


def _cmd_plan(args) -> int:
    plan = plan_code(args.c, args.q)
    print(format_plan(plan))
    if args.execute or args.out:
        code = execute_plan(plan)
        rate = achieved_rate(plan.c, plan.length, plan.q, code.size)
        if not args.quiet:
            print(f"built {code!r}, rate {rate}")
        if args.out:
            write_code_file(code, args.out)
            if not args.quiet:
                print(f"wrote {args.out}")
    return 0


def _cmd_oa(args) -> int:
    oa = build_oa_strength2(args.s)
    if args.out:
        write_oa_file(oa, args.out)
        if not args.quiet:
            print(f"wrote {args.out}: {oa!r}")
    else:
        sys.stdout.write(oa_to_text(oa))
    return 0


def _cmd_oa_verify(args) -> int:
    oa = read_oa_file(args.oafile)
    report = verify_oa(oa)
    if report.verdict:
        if not args.quiet:
            print(f"balanced {oa!r}, row subsets examined: {report.subsets_examined}")
        return 0
    print(f"NOT a valid orthogonal array: {oa!r}")
    _print_witness(report.witness, None)
    return 1


def _cmd_bounds(args) -> int:
    achieved = None
    if args.code:
        code = read_code_file(args.code)
        if (code.length, code.q) != (args.l, args.q):
            raise _UsageError(
                f"--code has l={code.length}, q={code.q}; flags say l={args.l}, q={args.q}"
            )
        achieved = code.size
    report = bound_report(args.c, args.l, args.q, achieved)
    if not args.quiet:
        print(f"cardinality bound   {report.ssw}")
        print(f"rate bound          {report.rate_upper}")
        print(f"asymptotic leading  {report.blackburn_leading}")
        if achieved is not None:
            print(f"achieved size       {report.achieved_size}")
            print(f"achieved rate       {report.achieved_rate}")
    lead = report.blackburn_leading
    got = "-" if achieved is None else str(achieved)
    print(f"c={args.c} l={args.l} q={args.q} ssw={report.ssw} "
          f"leading={lead.numerator}/{lead.denominator} achieved={got}")
    return 0


def _cmd_import(args) -> int:
    kind, obj = _load_any(args.file)
    if not args.quiet:
        print(f"{kind} ok: {obj!r}")
    return 0


def _cmd_export(args) -> int:
    kind, obj = _load_any(args.file)
    text = code_to_text(obj) if kind == "code" else oa_to_text(obj)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
        if not args.quiet:
            print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _load_any(path):
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    head = text.split(None, 1)[0] if text.split() else ""
    if head == "fpc1":
        return "code", code_from_text(text)
    if head == "oa1":
        return "oa", oa_from_text(text)
    raise ValueError(f"unrecognised file header {head!r}")


# --- selftest ---------------------------------------------------------------


def _random_code(rng: random.Random):
    q = rng.randint(2, 5)
    length = rng.randint(2, 5)
    target = rng.randint(2, min(12, q**length))
    words = set()
    while len(words) < target:
        words.add(tuple(rng.randrange(q) for _ in range(length)))
    return make_code(length, q, sorted(words))


def _selftest_bases() -> bool:
    ok = True
    for name, (q, length, size, c) in sorted(BASE_CODE_INFO.items()):
        code = base_code(name)
        ok &= (code.q, code.length, code.size) == (q, length, size)
        ok &= is_t_determined(code, 2).verdict
        ok &= is_frameproof_cover(code, c).verdict
        if name != "q10":  # quadratic pair scan suffices for the big fixture
            ok &= is_frameproof_naive(code, c).verdict
    return ok


def _selftest_oa() -> bool:
    ok = True
    for s in (2, 3, 4, 5, 7, 9):
        oa = build_oa_strength2(s)
        ok &= verify_oa(oa).verdict
        bad = oa.array.copy()
        bad[0, 0] = (bad[0, 0] + 1) % s
        ok &= not verify_oa(make_oa(bad, s, 2)).verdict
    return ok


def _selftest_lift() -> bool:
    lifted = polynomial_lift(base_code("q3"), 3, 2, 2)
    return (
        lifted.q == 7
        and lifted.size == 72
        and is_frameproof_naive(lifted, 2).verdict
        and is_t_determined(lifted, 2).verdict
    )


def _selftest_plans() -> bool:
    ok = True
    for c, q in ((2, 7), (2, 13), (3, 4), (3, 22)):
        plan = plan_code(c, q)
        code = execute_plan(plan)
        ok &= code.size == plan.expected_size
        ok &= is_frameproof_cover(code, c).verdict
    return ok


def _selftest_oracles(seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(200):
        code = _random_code(rng)
        c = rng.randint(2, 3)
        naive = is_frameproof_naive(code, c)
        cover = is_frameproof_cover(code, c)
        if naive.verdict != cover.verdict:
            return False
        for report in (naive, cover):
            if not report.verdict and not framed_witness_holds(report.witness):
                return False
    return True


def selftest(seed: int = 0, quiet: bool = False) -> int:
    checks = [
        ("base fixtures", _selftest_bases),
        ("orthogonal arrays", _selftest_oa),
        ("lift fixture", _selftest_lift),
        ("planned families", _selftest_plans),
        ("oracle cross-check", lambda: _selftest_oracles(seed)),
    ]
    failures = 0
    for name, fn in checks:
        ok = fn()
        failures += not ok
        if not quiet:
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
    print(f"selftest: {len(checks)} checks, {failures} failures")
    return 1 if failures else 0


# --- dispatch ---------------------------------------------------------------

_DISPATCH = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "plan": _cmd_plan,
    "oa": _cmd_oa,
    "oa-verify": _cmd_oa_verify,
    "bounds": _cmd_bounds,
    "selftest": lambda args: selftest(args.seed, args.quiet),
    "import": _cmd_import,
    "export": _cmd_export,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("a subcommand is required (see --help)")
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 64


def main() -> None:
    sys.exit(run(sys.argv[1:]))
