"""Command-line front end.

Exit codes: 0 ok, 2 usage or parse error, 3 domain precondition failed,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Optional, Sequence

from .barcore import RouquierBlock, bar_core, bar_quotient, is_d_rouquier, make_rouquier_core, r_counts
from .branching import phitilde
from .partitions import format_multipartition, format_partition, parse_partition
from .polynomial import IntPolynomial
from .rock import (
    LabeledMatrix,
    decomp_matrix,
    qdecomp_matrix,
    unadjusted_cartan,
    wreath_cartan_relabeled,
)
from .symmfunc import inverse_kostka, kostka_foulkes, lr_coeff, lr_product, schur_p_expansion
from .verify import SUITES, run_suite
from .wreath import wreath_cartan_matrix

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4

SUITE_ALIASES = {"gg": "gg-oracle"}


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _is_odd_prime(n: int) -> bool:
    return n >= 3 and n % 2 == 1 and all(n % k for k in range(3, int(n**0.5) + 1, 2))


def _partition_arg(text: str) -> tuple[int, ...]:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse partition {text!r}: {exc}") from None


def _prime(args: argparse.Namespace) -> int:
    if args.p is None:
        raise UsageError("-p is required")
    if not _is_odd_prime(args.p):
        raise UsageError(f"p must be an odd prime, got {args.p}")
    return args.p


def _block(args: argparse.Namespace) -> RouquierBlock:
    p = _prime(args)
    if args.d is None or args.d < 0:
        raise UsageError("-d must be a nonnegative integer")
    d = args.d
    if d >= p:
        print(f"warning: d={d} >= p={p}; the Morita equivalence behind the closed formulas needs d < p", file=sys.stderr)
    rho = make_rouquier_core(p, d) if args.rho == "minimal" else _partition_arg(args.rho)
    if not is_d_rouquier(rho, p, d):
        raise DomainError(f"{format_partition(rho)} is not a {d}-Rouquier {p}-bar-core")
    return RouquierBlock(p, rho, d)


def _meta(block: RouquierBlock, **extra: Any) -> dict[str, Any]:
    return {"p": block.p, "rho": list(block.rho), "d": block.d, **extra}


def _emit_matrix(mat: LabeledMatrix, fmt: str, meta: dict[str, Any]) -> str:
    if fmt == "json":
        return mat.to_json(meta)
    if fmt == "csv":
        return mat.to_csv()
    return mat.to_table()


def _emit_record(record: dict[str, Any], fmt: str) -> str:
    """Flat key/value output for the scalar commands."""
    if fmt == "json":
        return json.dumps({"schema": 1, **record}, separators=(",", ":")) + "\n"
    rows = [(k, v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))) for k, v in record.items()]
    if fmt == "csv":
        return "key,value\n" + "".join(f'{k},"{v}"\n' for k, v in rows)
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


# --- commands ---------------------------------------------------------------------

def cmd_barcore(args: argparse.Namespace) -> str:
    p = _prime(args)
    la = _partition_arg(args.partition)
    try:
        core, weight = bar_core(la, p)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return _emit_record(
        {"p": p, "partition": format_partition(la), "core": format_partition(core), "weight": weight}, args.format
    )


def cmd_quotient(args: argparse.Namespace) -> str:
    block = _block(args)
    la = _partition_arg(args.partition)
    try:
        q = bar_quotient(la, block)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return _emit_record(
        {**_meta(block), "partition": format_partition(la), "quotient": format_multipartition(q)}, args.format
    )


def cmd_block(args: argparse.Namespace) -> str:
    block = _block(args)
    parts = block.partitions
    if args.action == "info":
        return _emit_record(
            {
                **_meta(block),
                "rouquier": True,
                "r_counts": list(r_counts(block.rho, block.p)),
                "all": len(parts.all),
                "strict": len(parts.strict),
                "restricted": len(parts.restricted),
                "p_prime": len(parts.p_prime),
            },
            args.format,
        )
    labels = {"all": parts.all, "strict": parts.strict, "restricted": parts.restricted, "p-prime": parts.p_prime}[
        args.kind
    ]
    rows = [(la, bar_quotient(la, block)) for la in labels]
    if args.format == "json":
        data = {
            "schema": 1,
            **_meta(block, kind=args.kind),
            "labels": [{"partition": list(la), "quotient": [list(c) for c in q]} for la, q in rows],
        }
        return json.dumps(data, separators=(",", ":")) + "\n"
    if args.format == "csv":
        return "partition,quotient\n" + "".join(
            f'"{format_partition(la)}","{format_multipartition(q)}"\n' for la, q in rows
        )
    width = max((len(format_partition(la)) for la, _ in rows), default=0)
    return "".join(f"{format_partition(la).ljust(width)}  {format_multipartition(q)}\n" for la, q in rows)


def cmd_decomp(args: argparse.Namespace) -> str:
    block = _block(args)
    return _emit_matrix(decomp_matrix(block, args.jobs), args.format, _meta(block, kind="decomp"))


def cmd_qdecomp(args: argparse.Namespace) -> str:
    block = _block(args)
    return _emit_matrix(qdecomp_matrix(block, args.jobs), args.format, _meta(block, kind="qdecomp"))


def cmd_cartan(args: argparse.Namespace) -> str:
    if args.method == "wreath" and args.ell is not None:
        if args.d is None or args.d < 0 or args.ell < 1:
            raise UsageError("--ell >= 1 and -d >= 0 are required")
        labels, entries = wreath_cartan_matrix(args.ell, args.d)
        mat = LabeledMatrix(labels, labels, entries)
        return _emit_matrix(mat, args.format, {"ell": args.ell, "d": args.d, "kind": "wreath-cartan"})
    block = _block(args)
    if args.method == "closed":
        mat = unadjusted_cartan(block, "closed_form", args.jobs)
    elif args.method == "from-decomp":
        mat = unadjusted_cartan(block, "from_decomp", args.jobs)
    else:
        mat = wreath_cartan_relabeled(block, "odd", args.jobs)
    # the method is left out of the metadata so the three routes give identical files
    return _emit_matrix(mat, args.format, _meta(block, kind="cartan"))


def _poly_text(v: IntPolynomial, fmt: str) -> Any:
    return v.to_json() if fmt == "json" else v.format("t")


def cmd_symfunc(args: argparse.Namespace) -> str:
    fmt = args.format
    if args.op == "lr":
        la = _partition_arg(args.partitions[0])
        factors = [_partition_arg(x) for x in args.partitions[1:]]
        if not factors:
            raise UsageError("lr needs a target and at least one factor")
        return _emit_record({"target": format_partition(la), "factors": [format_partition(f) for f in factors],
                             "value": lr_coeff(la, factors)}, fmt)
    if args.op == "product":
        if len(args.partitions) != 2:
            raise UsageError("product needs exactly two partitions")
        mu, nu = (_partition_arg(x) for x in args.partitions)
        out = lr_product(mu, nu)
        return _emit_record({format_partition(k): out[k] for k in sorted(out, reverse=True)}, fmt)
    if args.op in ("ikostka", "kostka-foulkes"):
        if len(args.partitions) != 2:
            raise UsageError(f"{args.op} needs exactly two partitions")
        a, b = (_partition_arg(x) for x in args.partitions)
        if sum(a) != sum(b):
            raise DomainError("partitions must have the same size")
        v = inverse_kostka(a, b) if args.op == "ikostka" else kostka_foulkes(a, b)
        if args.at is not None:
            return _emit_record({"value": v.evaluate(args.at)}, fmt)
        return _emit_record({"value": _poly_text(v, fmt)}, fmt)
    if args.op == "schur-p":
        if len(args.partitions) != 1:
            raise UsageError("schur-p needs one strict partition")
        la = _partition_arg(args.partitions[0])
        try:
            out = schur_p_expansion(la)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        return _emit_record({format_partition(k): out[k] for k in sorted(out, reverse=True)}, fmt)
    raise UsageError(f"unknown symfunc operation {args.op!r}")


def cmd_induce(args: argparse.Namespace) -> str:
    block = _block(args)
    la = _partition_arg(args.partition)
    try:
        vec = phitilde(la, block)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if args.format == "json":
        return vec.to_json()
    rows = [(format_partition(k), vec[k]) for k in vec.support()]
    if args.format == "csv":
        return "partition,coefficient\n" + "".join(f'"{k}",{v}\n' for k, v in rows)
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    names: list[str] = []
    for s in args.suite or ["all"]:
        if s == "all":
            names.extend(SUITES)
            continue
        s = SUITE_ALIASES.get(s, s)
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
        names.append(s)
    if args.p is not None:
        _prime(args)
        ps = [args.p]
    else:
        ps = [3, 5]
    ds = list(range(1, args.d + 1)) if args.d is not None else [1, 2]
    if args.slow and 3 not in ds:
        ds.append(3)
    lines, ok = [], True
    for name in names:
        start = time.perf_counter()
        checks = run_suite(name, ps, ds, args.jobs)
        lines.append(f"== {name} ({time.perf_counter() - start:.2f}s)")
        for c in checks:
            lines.append(c.line())
            ok = ok and c.passed
    lines.append("all passed" if ok else "FAILURES")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_VERIFY


# --- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, help="odd prime")
    common.add_argument("-d", "--d", dest="d", type=int, help="bar-weight")
    common.add_argument("--rho", default="minimal", help='"minimal" or an explicit core such as "4,1"')
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--jobs", type=int, default=None, help="worker threads (default: all cores)")

    parser = argparse.ArgumentParser(prog="spinrock", description="Spin RoCK block computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("barcore", parents=[common], help="p-bar-core and bar-weight")
    sp.add_argument("partition")
    sp.set_defaults(func=cmd_barcore)

    sp = sub.add_parser("quotient", parents=[common], help="bar-quotient relative to a Rouquier core")
    sp.add_argument("partition")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("block", parents=[common], help="block summary or label lists")
    sp.add_argument("action", choices=("list", "info"))
    sp.add_argument("--kind", choices=("all", "strict", "restricted", "p-prime"), default="all")
    sp.set_defaults(func=cmd_block)

    sp = sub.add_parser("decomp", parents=[common], help="decomposition matrix")
    sp.set_defaults(func=cmd_decomp)

    sp = sub.add_parser("qdecomp", parents=[common], help="q-decomposition matrix")
    sp.set_defaults(func=cmd_qdecomp)

    sp = sub.add_parser("cartan", parents=[common], help="unadjusted Cartan matrix")
    sp.add_argument("--method", choices=("closed", "from-decomp", "wreath"), default="closed")
    sp.add_argument("--ell", type=int, default=None, help="with --method wreath: label by J-multipartitions")
    sp.set_defaults(func=cmd_cartan)

    sp = sub.add_parser("symfunc", parents=[common], help="symmetric-function coefficients")
    sp.add_argument("op", choices=("lr", "product", "ikostka", "kostka-foulkes", "schur-p"))
    sp.add_argument("partitions", nargs="+")
    sp.add_argument("--at", type=int, default=None, help="evaluate the polynomial at this integer")
    sp.set_defaults(func=cmd_symfunc)

    sp = sub.add_parser("induce", parents=[common], help="induced projective character of a p' member")
    sp.add_argument("partition")
    sp.set_defaults(func=cmd_induce)

    sp = sub.add_parser("verify", parents=[common], help="run verification suites")
    sp.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)} or all (repeatable)")
    sp.add_argument("--slow", action="store_true", help="also run weight 3")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"spinrock: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"spinrock: precondition failed: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
