"""``parwb`` command line.

Exit codes: 0 success or positive verdict, 1 ``classes --check`` mismatch,
2 malformed input, 3 not locally confluent, 4 not globalizable, 5
hypotheses not applicable, 6 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import algebra_core as ac
from .criteria import build_report
from .falgebra import (
    decide_globalizable_algebra01,
    is_ideal_subspace,
    semigroup_view,
    validate_linear_pa01,
)
from .formats import (
    FormatError,
    action_from_json,
    algebra_pa_from_json,
    dumps,
    load_json,
    monoid_from_json,
    semigroup_from_json,
)
from .globalization import NotConfluentError, Reflection, set_globalization
from .mx_quotient import classes_g0_closed_form, classes_generic
from .partial_action import validate_partial_action
from .report import FAIL, PASS
from .rewriting import RewritingSystem, is_locally_confluent, reduct_graph_dot
from .workbench import FILTERS, enumerate_partial_actions

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_MALFORMED = 2
EXIT_NOT_CONFLUENT = 3
EXIT_NOT_GLOBALIZABLE = 4
EXIT_NA = 5
EXIT_CAP = 6


class UsageError(Exception):
    pass


def _fmt(w):
    if w is None:
        return ""
    if isinstance(w, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in w) + ")"
    return str(w)


def _load_action(path):
    alpha = action_from_json(load_json(path))
    verdicts = validate_partial_action(alpha)
    bad = [(k, v) for k, v in verdicts.items() if not v.ok]
    if bad:
        k, v = bad[0]
        raise FormatError("$.maps", f"not a strong partial action: {k} fails at {_fmt(v.witness)}")
    return alpha


def _load_structure(arg, loader):
    """A file path, or a constructor expression such as ``left_zero(3)``."""
    if os.path.exists(arg):
        return loader(load_json(arg))
    return loader(arg)


# -- subcommands ----------------------------------------------------------------

def cmd_validate(args, out):
    alpha = action_from_json(load_json(args.action))
    verdicts = validate_partial_action(alpha)
    for k, v in verdicts.items():
        print(f"{k:<24} {v.status:<6} {_fmt(v.witness)}", file=out)
    if all(v.ok for v in verdicts.values()):
        print("valid strong partial action", file=out)
        return EXIT_OK
    return EXIT_MALFORMED


def _print_partition(P, out):
    for c in range(P.n_classes):
        print("[" + ", ".join(P.member_names(c)) + "]", file=out)


def cmd_classes(args, out):
    alpha = _load_action(args.action)
    if args.check:
        if ac.g0_structure(alpha.monoid) is None:
            print("closed form needs M = G^0", file=sys.stderr)
            return EXIT_NA
        a, b = classes_generic(alpha), classes_g0_closed_form(alpha)
        if a.same_partition(b):
            _print_partition(a, out)
            print(f"closed form agrees ({a.n_classes} classes)", file=out)
            return EXIT_OK
        for c in range(a.n_classes):
            if a.members[c] not in b.members:
                print("generic only:     [" + ", ".join(a.member_names(c)) + "]", file=out)
        for c in range(b.n_classes):
            if b.members[c] not in a.members:
                print("closed form only: [" + ", ".join(b.member_names(c)) + "]", file=out)
        return EXIT_MISMATCH
    if args.closed_form:
        if ac.g0_structure(alpha.monoid) is None:
            print("closed form needs M = G^0", file=sys.stderr)
            return EXIT_NA
        P = classes_g0_closed_form(alpha)
    else:
        P = classes_generic(alpha)
    _print_partition(P, out)
    return EXIT_OK


_LETTER = re.compile(r"<([^<>]*)>")


def parse_word(P, text):
    """``"<m1,x1> <m2,x2>"`` to class ids; each letter splits at its first comma."""
    M, X = P.monoid, P.carrier
    rest = _LETTER.sub("", text).strip()
    if rest:
        raise FormatError("--word", f"unexpected text {rest!r}; letters look like <m,x>")
    letters = _LETTER.findall(text)
    if not letters:
        raise FormatError("--word", "empty word")
    w = []
    for i, tok in enumerate(letters):
        if "," not in tok:
            raise FormatError(f"--word[{i}]", f"letter <{tok}> has no comma")
        m, x = (s.strip() for s in tok.split(",", 1))
        if m not in M.elements:
            raise FormatError(f"--word[{i}]", f"unknown monoid element {m!r}")
        if x not in X.elements:
            raise FormatError(f"--word[{i}]", f"unknown carrier element {x!r}")
        w.append(P.cls(M.index(m), X.index(x)))
    return tuple(w)


def cmd_rewrite(args, out):
    alpha = _load_action(args.action)
    P = classes_generic(alpha)
    w = parse_word(P, args.word)
    out.write(reduct_graph_dot(RewritingSystem(P), w))
    return EXIT_OK


def cmd_confluence(args, out):
    alpha = _load_action(args.action)
    P = classes_generic(alpha)
    rs = RewritingSystem(P)
    v = is_locally_confluent(rs, cap=args.word_cap)
    if v.locally_confluent:
        print("locally confluent", file=out)
        return EXIT_OK
    w, w1, w2 = v.witness
    print("not locally confluent", file=out)
    for label, word in (("word", w), ("reduct 1", w1), ("reduct 2", w2)):
        letters = " ".join("[" + ", ".join(P.member_names(c)) + "]" for c in word)
        print(f"{label:<9} {letters}", file=out)
    return EXIT_NOT_CONFLUENT


def _verdict_exit(status):
    return {PASS: EXIT_OK, FAIL: EXIT_NOT_GLOBALIZABLE}.get(status, EXIT_NA)


def cmd_criteria(args, out):
    alpha = _load_action(args.action)
    rep = build_report(alpha, confluence=not args.no_confluence, cap=args.word_cap)
    if args.json:
        out.write(dumps(rep.to_dict()))
    else:
        rows = [(k, v) for k, v in rep.axioms.items()]
        rows += list(rep.conditions.items())
        if rep.confluence is not None:
            rows.append(("locally_confluent", rep.confluence))
        rows += list(rep.theorems.items())
        print(f"{'condition':<28} {'verdict':<15} witness", file=out)
        for k, v in rows:
            extra = _fmt(v.witness) if v.witness is not None else (v.reason or "")
            print(f"{k:<28} {v.status:<15} {extra}", file=out)
    return _verdict_exit(rep.globalizable.status)


def cmd_globalize(args, out):
    alpha = _load_action(args.action)
    P = classes_generic(alpha)
    beta, iota = set_globalization(alpha, P)
    M, X = alpha.monoid, alpha.carrier
    print(f"X_M: {P.n_classes} classes", file=out)
    for c in range(P.n_classes):
        print(f"  {c}: [" + ", ".join(P.member_names(c)) + "]", file=out)
    for m in range(M.n):
        print(f"beta_{M.name(m)}: " + " ".join(str(v) for v in beta.maps[m]), file=out)
    print("iota: " + " ".join(f"{X.name(x)}->{iota[x]}" for x in range(X.n)), file=out)
    if args.enumerate:
        try:
            R = Reflection(alpha, P)
        except NotConfluentError:
            print("not locally confluent: normal forms are not unique, no words listed", file=out)
            return EXIT_NOT_CONFLUENT
        words = R.enumerate(args.enumerate)
        print(f"normal forms up to length {args.enumerate}: {len(words)}", file=out)
        for w in words:
            print("  " + R.rs.word_name(w), file=out)
    return EXIT_OK


def cmd_algebra(args, out):
    pa = algebra_pa_from_json(load_json(args.algebra))
    checks = validate_linear_pa01(pa)
    for k, v in checks.items():
        print(f"{k:<20} {v.status:<6} {_fmt(v.witness)}", file=out)
    if not all(v.ok for v in checks.values()):
        return EXIT_MALFORMED
    A = pa.algebra
    print(f"dom alpha_0 ideal    {is_ideal_subspace(A, pa.dom0_basis)}", file=out)
    print(f"im alpha_0 ideal     {is_ideal_subspace(A, pa.image)}", file=out)
    print("ker alpha_0          span{" + ", ".join(A.vector_name(v) for v in pa.kernel) + "}", file=out)
    v = decide_globalizable_algebra01(pa)
    label = {PASS: "globalizable", FAIL: "not globalizable"}.get(v.status, "not applicable")
    print(f"algebra verdict      {label} {_fmt(v.witness) if v.witness else (v.reason or '')}".rstrip(), file=out)
    if A.p ** A.dim <= ac.size_cap():
        rep = build_report(semigroup_view(pa), confluence=False)
        g = rep.globalizable
        slabel = {PASS: "globalizable", FAIL: "not globalizable"}.get(g.status, "not applicable")
        print(f"semigroup verdict    {slabel}", file=out)
    return _verdict_exit(v.status)


def cmd_enumerate(args, out):
    M = _load_structure(args.monoid, monoid_from_json)
    X = _load_structure(args.carrier, semigroup_from_json)
    for f in args.filter:
        if f not in FILTERS:
            raise UsageError(f"unknown filter {f!r}; choose from {', '.join(FILTERS)}")
    count = 0
    for i, alpha in enumerate(enumerate_partial_actions(M, X, tuple(args.filter))):
        count += 1
        maps = {M.name(m): [None if y is None else X.name(y) for y in alpha.maps[m]] for m in range(M.n)}
        line = {"index": i, "maps": maps}
        if args.report:
            line.update(build_report(alpha, cap=args.word_cap).to_dict())
        out.write(json.dumps(line, sort_keys=True, ensure_ascii=False) + "\n")
    print(f"{count} actions", file=sys.stderr)
    return EXIT_OK


# -- entry point -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parwb", description="Strong partial actions of finite monoids on finite semigroups.")
    p.add_argument("--cap", type=int, default=None,
                   help="largest semigroup or X_M size accepted (env PARWB_CAP; default %d)" % ac.DEFAULT_SIZE_CAP)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the strong partial action axioms")
    s.add_argument("action")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("classes", help="print the classes of X_M")
    s.add_argument("action")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--closed-form", action="store_true", help="use the G^0 formulas")
    g.add_argument("--check", action="store_true", help="compare both constructions")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("rewrite", help="reduct graph of a word in DOT")
    s.add_argument("action")
    s.add_argument("--word", required=True, help='e.g. "<0,(0,2)> <0,(0,2)>"')
    s.set_defaults(func=cmd_rewrite)

    for name, func, hlp in (
        ("confluence", cmd_confluence, "decide local confluence"),
        ("criteria", cmd_criteria, "full criteria report"),
    ):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("action")
        s.add_argument("--cap", dest="word_cap", type=int, default=None,
                       help="largest |X_M|^3 word count swept (default 10^6)")
        if name == "criteria":
            s.add_argument("--json", action="store_true")
            s.add_argument("--no-confluence", action="store_true")
        s.set_defaults(func=func)

    s = sub.add_parser("globalize", help="X_M, beta, iota and normal forms")
    s.add_argument("action")
    s.add_argument("--enumerate", type=int, default=0, metavar="K")
    s.set_defaults(func=cmd_globalize)

    s = sub.add_parser("algebra", help="decide an algebra action of {1,0}")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_algebra)

    s = sub.add_parser("enumerate", help="JSON lines of every partial action")
    s.add_argument("--monoid", required=True, help="file or constructor expression")
    s.add_argument("--carrier", required=True, help="file or constructor expression")
    s.add_argument("--filter", action="append", default=[], help=", ".join(FILTERS))
    s.add_argument("--report", action="store_true")
    s.set_defaults(func=cmd_enumerate, word_cap=None)
    return p


def _cap_from(args):
    if args.cap is not None:
        return args.cap
    env = os.environ.get("PARWB_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"PARWB_CAP must be an integer, got {env!r}") from None
    return None


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    restore = []
    try:
        cap = _cap_from(args)
        if cap is not None:
            restore.append(ac.set_size_cap(cap))
        return args.func(args, out)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ac.SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    finally:
        if restore:
            ac.set_size_cap(restore[0])


if __name__ == "__main__":
    sys.exit(main())
