"""Command-line front end: ``quasisym <command> ...``.

Exit status: 0 on success, 1 on domain errors (bad table, not a group
isotope, not prime, failed verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .classify import CRITERIA, classify_table
from .core import Sigma, SymmetryClass, format_table, load_table, parastrophe, symmetry_group
from .errors import QuasigroupError
from .isotope import canonical_decomposition, is_group_isotope
from .linear import census, enumerate_linear_isotopes, linear_isotope_table, small_order_census, validate_enumeration
from .sweeps import verify_corpus

SIGMA_HELP = "; ".join(f"{s.value}={s.cycle_notation}" for s in Sigma)


class UsageError(Exception):
    pass


def _sigma_labels(group) -> list[str]:
    return [s.value for s in Sigma if s in group]


def cmd_check(args):
    t = load_table(args.file)
    iso = is_group_isotope(t)
    if args.format == "json":
        return json.dumps({"order": t.order, "valid": True, "group_isotope": iso}) + "\n"
    if args.format == "csv":
        return f"order,valid,group_isotope\n{t.order},true,{str(iso).lower()}\n"
    return f"ok: quasigroup of order {t.order}" + (" (group isotope)" if iso else "") + "\n"


def cmd_parastrophe(args):
    t = load_table(args.file)
    sigma = Sigma.parse(args.sigma)
    out = parastrophe(t, sigma)
    if args.format == "json":
        return json.dumps({"order": out.order, "sigma": sigma.value, "table": out.tolist()}) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(out.tolist())
        return buf.getvalue()
    return format_table(out)


def cmd_sym(args):
    t = load_table(args.file)
    group = symmetry_group(t)
    cls = SymmetryClass.from_group(group)
    labels = _sigma_labels(group)
    if args.format == "json":
        return json.dumps({"symmetry_group": labels, "class": cls.value}) + "\n"
    if args.format == "csv":
        return "sigma\n" + "".join(f"{s}\n" for s in labels)
    return "{" + ", ".join(labels) + "}  " + cls.value + "\n"


def cmd_classify(args):
    t = load_table(args.file)
    report = classify_table(t, 0, all_zeros=True)
    if args.format == "json":
        return report.to_json() + "\n"
    if args.format == "csv":
        rows = ["criterion,value"] + [f"{k},{str(report.checks[k]).lower()}" for k in CRITERIA]
        return "\n".join(rows) + "\n"
    lines = [report.cls.value]
    lines += [f"  {k:36s} {report.checks[k]}" for k in CRITERIA]
    lines.append(f"  {'zero-independent':36s} {report.zero_independent}")
    return "\n".join(lines) + "\n"


def cmd_decompose(args):
    t = load_table(args.file)
    if not 0 <= args.zero < t.order:
        raise UsageError(f"--zero must lie in 0..{t.order - 1}")
    d = canonical_decomposition(t, args.zero)
    if args.format == "json":
        return d.to_json() + "\n"
    if args.format == "csv":
        rows = ["x,alpha,beta"] + [f"{x},{d.alpha(x)},{d.beta(x)}" for x in range(t.order)]
        return "\n".join(rows) + "\n"
    return (
        f"x·y = alpha(x) + {d.a} + beta(y), neutral {d.zero}"
        f"{' (abelian)' if d.group.abelian else ''}\n"
        f"alpha: {list(d.alpha.images)}\n"
        f"beta:  {list(d.beta.images)}\n"
        + format_table(d.group.table, comment="decomposition group")
    )


def cmd_enumerate(args):
    if args.modulus < 2:
        raise UsageError("--modulus must be at least 2")
    specs = enumerate_linear_isotopes(args.modulus)
    rows = [(s, classify_table(linear_isotope_table(s)).cls) for s in specs]
    validated = None
    if args.validate:
        validated, problems = validate_enumeration(args.modulus)
        for triple, hits in problems:
            print(f"enumeration mismatch at {triple}: matches {[str(h) for h in hits]}", file=sys.stderr)
    if args.format == "json":
        data = {"m": args.modulus, "count": len(specs),
                "isotopes": [{"alpha": s.alpha, "beta": s.beta, "d": s.d, "class": c.code} for s, c in rows]}
        if validated is not None:
            data["validated"] = validated
        out = json.dumps(data, indent=2) + "\n"
    elif args.format == "csv":
        out = "class,alpha,beta,d\n" + "".join(f"{c.code},{s.alpha},{s.beta},{s.d}\n" for s, c in rows)
    else:
        out = f"Z_{args.modulus}: {len(specs)} linear isotopes up to isomorphism\n"
        out += "".join(f"{str(s):14s} {c.value}\n" for s, c in rows)
        if validated is not None:
            out += f"brute-force validation: {'ok' if validated else 'FAILED'}\n"
    if validated is False:
        sys.stdout.write(out)
        raise QuasigroupError("enumeration failed brute-force validation")
    return out


def _render_census(report, fmt):
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv()
    return report.to_text()


def cmd_census(args):
    return _render_census(census(args.prime), args.format)


def cmd_small_census(args):
    return _render_census(small_order_census(args.order), args.format)


def cmd_verify(args):
    if args.max_order < 2:
        raise UsageError("--max-order must be at least 2")
    report = verify_corpus(args.max_order, args.samples, args.seed)
    if args.format == "json":
        out = json.dumps({"checked": report.checked, "by_source": report.by_source,
                          "failures": report.failures, "ok": report.ok}, indent=2) + "\n"
    else:
        out = "".join(f"{src:10s} {n:6d} tables\n" for src, n in report.by_source.items())
        out += "".join(f"FAIL {f}\n" for f in report.failures)
        out += f"{report.checked} tables checked, {len(report.failures)} failures\n"
    if not report.ok:
        sys.stdout.write(out)
        raise QuasigroupError(f"verification found {len(report.failures)} disagreements")
    return out


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json", "csv"), default="table")

    parser = argparse.ArgumentParser(prog="quasisym", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help):
        p = sub.add_parser(name, parents=[fmt], help=help)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "validate a Cayley table").add_argument("file")
    p = add("parastrophe", cmd_parastrophe, "print a parastrophe of a table")
    p.add_argument("file")
    p.add_argument("--sigma", required=True, choices=[s.value for s in Sigma], help=SIGMA_HELP)
    add("sym", cmd_sym, "symmetry group of a table").add_argument("file")
    add("classify", cmd_classify, "classify a group isotope from its canonical decomposition").add_argument("file")
    p = add("decompose", cmd_decompose, "canonical decomposition x·y = αx + a + βy")
    p.add_argument("file")
    p.add_argument("--zero", type=int, default=0)
    p = add("enumerate", cmd_enumerate, "linear isotopes of Z_m up to isomorphism")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--validate", action="store_true", help="cross-check by brute-force isomorphism reduction")
    add("census", cmd_census, "prime-order census of linear isotopes").add_argument("--prime", type=int, required=True)
    add("small-census", cmd_small_census, "census of all quasigroups of order 2 or 3").add_argument(
        "--order", type=int, required=True, choices=(2, 3))
    p = add("verify", cmd_verify, "oracle vs criteria sweep")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--samples", type=int, default=100, help="random isotopes per group (default 100)")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"quasisym {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (QuasigroupError, OSError, ValueError) as exc:
        print(f"quasisym {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
