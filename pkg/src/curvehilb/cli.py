"""Command line entry point: ``curvehilb <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 a verification FAIL,
3 a resource limit was hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

from . import formulas, partitions, semigroup, verify
from .formulas import LciParams
from .partitions import Partition, RsnParams
from .qseries import LaurentPoly
from .semigroup import ResourceError

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", "-o", help="write here instead of standard output")


# rendering ------------------------------------------------------------------


def _series_rows(series: LaurentPoly, start: int, stop: int) -> list[tuple[int, int]]:
    return [(k, series.coeff(k)) for k in range(start, stop + 1)]


def render_series(series: LaurentPoly, start: int, stop: int, fmt: str,
                  meta: dict | None = None) -> str:
    rows = _series_rows(series, start, stop)
    if fmt == "json":
        obj = dict(meta or {})
        obj["series"] = series.to_json()
        obj["coefficients"] = {str(k): str(c) for k, c in rows}
        return json.dumps(obj, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exponent", "coefficient"])
        w.writerows(rows)
        return buf.getvalue()
    lines = []
    if meta:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in meta.items()))
    lines += [f"{k}\t{c}" for k, c in rows]
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# subcommands ----------------------------------------------------------------


def cmd_zseries(args) -> int:
    p = RsnParams(args.r, args.s, args.n)
    problems = p.hypothesis_violations()
    if problems and not args.force:
        raise UsageError("; ".join(problems) + " (use --force to explore anyway)")
    if args.method == "closed":
        series = formulas.Z_rsn_closed(p, args.order)
    elif args.method == "partitions":
        series = partitions.series_from_enumeration(p, args.order)
    else:
        if math.gcd(p.r, p.s) != 1:
            raise UsageError("the flag oracle needs gcd(r,s) = 1")
        series = semigroup.flag_series_oracle(p, args.order)
    meta = {"r": p.r, "s": p.s, "n": p.n, "order": args.order}
    if problems:
        meta["unsupported"] = True
    _emit(render_series(series, 0, args.order, args.format, meta), args.output)
    return EXIT_OK


def cmd_hilb(args) -> int:
    triple = (args.r, args.t, args.n)
    if args.gens and any(v is not None for v in triple):
        raise UsageError("give either --gens or --r/--t/--n, not both")
    meta: dict = {"order": args.order}
    if args.gens:
        if args.method == "formula":
            raise UsageError("--method formula needs --r/--t/--n")
        S = semigroup.semigroup_new(args.gens)
        meta["gens"] = ",".join(map(str, args.gens))
    else:
        if any(v is None for v in triple):
            raise UsageError("need --gens or all of --r, --t, --n")
        p = LciParams(*triple)
        problems = p.hypothesis_violations()
        if problems and not args.force:
            raise UsageError("; ".join(problems) + " (use --force to explore anyway)")
        if problems:
            meta["unsupported"] = True
        meta.update(p.as_dict())
        S = semigroup.space_curve_semigroup(p)
        if args.method == "formula":
            series = formulas.hilb_series_lci(p, args.order)
            _emit(render_series(series, 0, args.order, args.format, meta), args.output)
            return EXIT_OK
    series = semigroup.hilb_series_oracle(S.sized_for(args.order), args.order)
    _emit(render_series(series, 0, args.order, args.format, meta), args.output)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    S = semigroup.semigroup_new(args.gens)
    info = S.summary()
    if args.format == "json":
        text = json.dumps(info) + "\n"
    elif args.format == "csv":
        text = "generators,conductor,genus,gaps\n" + ",".join([
            '"' + " ".join(map(str, info["generators"])) + '"', str(info["conductor"]),
            str(info["genus"]), '"' + " ".join(map(str, info["gaps"])) + '"']) + "\n"
    else:
        text = (f"generators: {','.join(map(str, info['generators']))}\n"
                f"gaps: {','.join(map(str, info['gaps']))}\n"
                f"conductor: {info['conductor']}\n"
                f"genus: {info['genus']}\n")
    _emit(text, args.output)
    return EXIT_OK


def cmd_partitions(args) -> int:
    if args.t is not None or args.m is not None:
        if args.t is None or args.m is None:
            raise UsageError("P(t,m) needs both --t and --m")
        if args.check:
            members = [Partition.of(*args.check)] if partitions.is_member_tm(
                Partition.of(*args.check), args.t, args.m) else []
        else:
            members = partitions.enumerate_tm(args.t, args.m)
        header = {"t": args.t, "m": args.m}
    else:
        if None in (args.r, args.s, args.n):
            raise UsageError("need --r/--s/--n or --t/--m")
        p = RsnParams(args.r, args.s, args.n)
        header = p.as_dict()
        if args.check:
            mu = Partition.of(*args.check)
            members = [mu] if partitions.is_member_rsn(mu, p) else []
        else:
            members = partitions.enumerate_rsn(p, args.budget)
    if args.check:
        verdict = bool(members)
        if args.format == "json":
            text = json.dumps({**header, "partition": args.check, "member": verdict}) + "\n"
        elif args.format == "csv":
            text = f"partition,member\n\"{' '.join(map(str, args.check))}\",{str(verdict).lower()}\n"
        else:
            text = f"{Partition.of(*args.check)} {'is' if verdict else 'is not'} a member\n"
    elif args.format == "json":
        text = json.dumps({**header, "members": [mu.to_json() for mu in members]}) + "\n"
    elif args.format == "csv":
        text = "size,length,parts\n" + "".join(
            f"{mu.size},{mu.length},\"{' '.join(map(str, mu.parts))}\"\n" for mu in members)
    else:
        text = "".join(f"{mu.size}\t{mu}\n" for mu in members) + f"# {len(members)} partitions\n"
    _emit(text, args.output)
    return EXIT_OK


def load_suite(source: str) -> list[verify.CheckSpec]:
    if source == "default":
        return verify.default_suite()
    try:
        with open(source) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read suite {source!r}: {exc}") from None
    if not isinstance(data, list):
        raise UsageError("a suite file must hold a JSON array of check specs")
    return [verify.CheckSpec.from_json(obj) for obj in data]


def cmd_verify(args) -> int:
    try:
        specs = load_suite(args.suite)
        if args.max_order is not None:
            specs = [spec.capped(args.max_order) for spec in specs]
        for spec in specs:
            spec.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = verify.run_suite(specs, workers=args.jobs)
    payload = json.dumps([r.to_json(timing=not args.no_timing) for r in reports], indent=2) + "\n"
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(payload)
    if args.format == "json":
        _emit(payload, args.output)
    else:
        _emit(verify.render_table(reports) + "\n", args.output)
    statuses = {r.status for r in reports}
    if verify.Status.FAIL in statuses:
        return EXIT_FAIL
    if verify.Status.RESOURCE in statuses:
        return EXIT_RESOURCE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curvehilb",
                     description="Euler characteristics of punctual (Flag) Hilbert schemes "
                                 "of torus-invariant curve singularities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    z = sub.add_parser("zseries", help="Z_{r,s,n}(q) by closed form, partitions or flag oracle")
    z.add_argument("--r", type=int, required=True)
    z.add_argument("--s", type=int, required=True)
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--order", type=_nonneg, required=True)
    z.add_argument("--method", choices=("closed", "partitions", "flag-oracle"), default="closed")
    z.add_argument("--force", action="store_true", help="skip hypothesis checks")
    _add_output(z)
    z.set_defaults(func=cmd_zseries)

    h = sub.add_parser("hilb", help="punctual Hilbert series of a monomial curve")
    h.add_argument("--gens", type=_int_list)
    h.add_argument("--r", type=int)
    h.add_argument("--t", type=int)
    h.add_argument("--n", type=int)
    h.add_argument("--order", type=_nonneg, required=True)
    h.add_argument("--method", choices=("formula", "oracle"), default="oracle")
    h.add_argument("--force", action="store_true", help="skip hypothesis checks")
    _add_output(h)
    h.set_defaults(func=cmd_hilb)

    g = sub.add_parser("semigroup", help="gaps, conductor and genus")
    g.add_argument("--gens", type=_int_list, required=True)
    _add_output(g)
    g.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("partitions", help="dump or test members of P(r,s,n) or P(t,m)")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--budget", type=_nonneg, default=4, help="list members with |mu| - s <= budget")
    p.add_argument("--check", type=_int_list, help="test one partition, e.g. 5,5,3,3,1")
    _add_output(p)
    p.set_defaults(func=cmd_partitions)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="default", help="'default' or a JSON file of check specs")
    v.add_argument("--max-order", type=_nonneg)
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for reproducible reports")
    _add_output(v)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"curvehilb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"curvehilb: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
