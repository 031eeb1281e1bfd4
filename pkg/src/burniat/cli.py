"""Command line front end.

Exit codes: 0 all consistent (and, when diffing, every cell matches print);
1 consistent but print disagrees somewhere; 2 internal failure or bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence


from .hodge import consistency_suite
from .hypotheses import full_report
from .report import FORMATS, TABLES, build_table, checker_table, diff_table, render, render_diff
from .scenarios import ALL_NAMES, ScenarioError, builtin, load_scenario

EXIT_OK, EXIT_ERRATA, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep the message on stderr
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_complex(text: str) -> complex:
    """Accept "a+bi" style strings, e.g. "i", "2i", "0.3+1.2i", "-0.5+i"."""
    s = text.strip().replace(" ", "").replace("I", "i").replace("j", "i")
    s = re.sub(r"(^|[+-])i", r"\g<1>1i", s)
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    names = ALL_NAMES if args.all or not args.family else (args.family,)
    try:
        scenarios = [builtin(n) for n in names]
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    reports = [full_report(s) for s in scenarios]
    audits = [consistency_suite(s) for s in scenarios]
    if args.format == "json":
        objs = []
        for r, a in zip(reports, audits):
            obj = r.to_json_obj()
            obj["audit"] = {c.name: c.passed for c in a.checks}
            objs.append(obj)
        text = json.dumps(objs if len(objs) > 1 or args.all else objs[0], indent=2, ensure_ascii=False) + "\n"
    else:
        text = render(checker_table(reports), args.format)
        if args.format == "md":
            text += "\n" + "\n".join(str(a) for a in audits) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(a.passed for a in audits) else EXIT_FAIL


def cmd_tables(args) -> int:
    table = build_table(args.which)
    text = render(table, args.format)
    code = EXIT_OK
    if args.diff_paper:
        d = diff_table(args.which)
        if args.format == "json":
            obj = json.loads(text)
            text = json.dumps({"schema": "1", "table": obj, "diff": d.to_json_obj()}, indent=2, ensure_ascii=False) + "\n"
        else:
            text += "\n" + render_diff(d, args.format)
        code = d.exit_code()
    _emit(text, args.out)
    return code


def cmd_numeric(args) -> int:
    from .numeric import backend
    from .numeric.checks import run_numeric_checks

    taus = (args.tau1, args.tau2, args.tau3)
    result = run_numeric_checks(taus, samples=args.samples, tol=args.tol, seed=args.seed)
    obj = {"schema": "1", "backend": backend(), **result}
    if args.format == "json":
        text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    else:
        lines = [f"numeric checks, tau = {', '.join(str(t) for t in taus)}, backend {backend()}", ""]
        for name, item in result["checks"].items():
            lines.append(f"- [{'ok' if item['passed'] else 'FAIL'}] {name}: {item['detail']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if result["passed"] else EXIT_FAIL


def cmd_check(args) -> int:
    try:
        s = load_scenario(args.file)
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_FAIL
    except ScenarioError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    audit = consistency_suite(s)
    try:
        report = full_report(s)
    except Exception as exc:  # inconsistent custom data surfaces as a failure, not a traceback
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        obj = report.to_json_obj()
        obj["audit"] = {c.name: c.passed for c in audit.checks}
        text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    else:
        text = render(checker_table([report]), args.format)
        if args.format == "md":
            text += "\n" + str(audit) + "\n"
    _emit(text, args.out)
    return EXIT_OK if audit.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="burniat", description="Recompute and audit the invariants of Burniat hypersurfaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="hypothesis checks and audits for built-in scenarios")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--family", help="one of " + ", ".join(ALL_NAMES))
    g.add_argument("--all", action="store_true")
    v.add_argument("--format", choices=FORMATS, default="md")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="regenerate a table, optionally diffed against print")
    t.add_argument("--which", choices=TABLES, required=True)
    t.add_argument("--format", choices=FORMATS, default="md")
    t.add_argument("--diff-paper", action="store_true")
    t.add_argument("--out")
    t.set_defaults(func=cmd_tables)

    n = sub.add_parser("numeric", help="floating point cross-checks of the sign model")
    n.add_argument("--tau1", type=parse_complex, default=1j)
    n.add_argument("--tau2", type=parse_complex, default=1j)
    n.add_argument("--tau3", type=parse_complex, default=1j)
    n.add_argument("--samples", type=int, default=100)
    n.add_argument("--tol", type=float, default=1e-9)
    n.add_argument("--seed", type=int, default=0)
    n.add_argument("--format", choices=("md", "json"), default="md")
    n.add_argument("--out")
    n.set_defaults(func=cmd_numeric)

    c = sub.add_parser("check", help="validate and check a custom scenario file")
    c.add_argument("file")
    c.add_argument("--format", choices=FORMATS, default="md")
    c.add_argument("--out")
    c.set_defaults(func=cmd_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if getattr(args, "command", None) == "numeric":
        for k in ("tau1", "tau2", "tau3"):
            if getattr(args, k).imag <= 0:
                print(f"error: --{k} needs a positive imaginary part", file=sys.stderr)
                return EXIT_FAIL
        if args.samples < 8 or args.tol <= 0:
            print("error: --samples must be >= 8 and --tol positive", file=sys.stderr)
            return EXIT_FAIL
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
