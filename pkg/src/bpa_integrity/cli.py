"""Command-line interface.

Exit codes:
    0  success
    1  BPA fails validation
    2  usage error
    3  parse error (malformed BPA file or sequence)
    4  too few network nodes (fewer than 3)
    5  I/O error
    6  computation error (sequence too short, zero tolerance)
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .apen import DegenerateTolerance, SequenceTooShort, apen_components, population_std
from .evidence import DEFAULT_EPSILON_SUM, BPAParseError, load_bpa, validate
from .logical_graph import TooFewNodes, slide
from .measure import DEFAULT_M, DEFAULT_R_FACTOR, InvalidBPA, ui
from .sweep import sweep_simplex, write_sweep

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_TOO_FEW_NODES = 4
EXIT_IO = 5
EXIT_COMPUTE = 6

DEFAULT_RESOLUTION = 100


class _Failure(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _classify(exc) -> int:
    if isinstance(exc, BPAParseError):
        return EXIT_PARSE
    if isinstance(exc, InvalidBPA):
        return EXIT_INVALID
    if isinstance(exc, TooFewNodes):
        return EXIT_TOO_FEW_NODES
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_COMPUTE


def _num(v, machine: bool):
    """Number formatting: 17 significant digits for machines, 6 for humans."""
    return format(v, ".17g") if machine else format(v, ".6g")


def _json(obj) -> str:
    # json.dumps prints floats with repr; the machine format pins 17 digits.
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot encode non-finite value {obj!r}")
        return format(obj, ".17g")
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _seq_text(seq) -> str:
    return ",".join(format(v, "g") for v in seq)


def _notice_overrides(args):
    explicit_r = getattr(args, "r", None) is not None
    if explicit_r or args.m != DEFAULT_M or args.r_factor != DEFAULT_R_FACTOR:
        print(
            f"notice: non-normative parameters (m={args.m}, r-factor={args.r_factor}); "
            f"UI is defined with m={DEFAULT_M}, r-factor={DEFAULT_R_FACTOR}",
            file=sys.stderr,
        )


def _load(path):
    try:
        return load_bpa(path)
    except BPAParseError as exc:
        raise _Failure(EXIT_PARSE, f"{path}: parse error: {exc}") from exc
    except OSError as exc:
        raise _Failure(EXIT_IO, f"{path}: {exc.strerror or exc}") from exc


def _ui_payload(res):
    return {
        "ui": res.ui,
        "signed_apen": res.signed_apen,
        "phi_m": res.phi_m,
        "phi_m_plus_1": res.phi_m_plus_1,
        "m": res.m,
        "r": res.r,
        "std": res.std,
        "n_nodes": res.n_nodes,
        "slide": list(res.slide),
        "flags": list(res.flags),
    }


def cmd_validate(args, out):
    bpa = _load(args.path)
    report = validate(bpa, args.epsilon_sum)
    if args.format == "json":
        print(_json({"file": args.path, "ok": report.ok, "violations": list(report.violations)}), file=out)
    elif report.ok:
        print(f"{args.path}: valid BPA ({len(bpa)} focal elements)", file=out)
    else:
        print(f"{args.path}: invalid BPA", file=out)
        for v in report.violations:
            print(f"  - {v}", file=out)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_ui(args, out):
    _notice_overrides(args)
    bpa = _load(args.path)
    try:
        res = ui(bpa, m=args.m, r_factor=args.r_factor, epsilon_sum=args.epsilon_sum)
    except (InvalidBPA, TooFewNodes, SequenceTooShort, DegenerateTolerance) as exc:
        raise _Failure(_classify(exc), f"{args.path}: {exc}") from exc
    if args.format == "json":
        payload = {"file": args.path}
        payload.update(_ui_payload(res))
        print(_json(payload), file=out)
        return EXIT_OK
    print(f"UI          {_num(res.ui, False)}", file=out)
    print(f"signed ApEn {_num(res.signed_apen, False)}", file=out)
    print(f"phi_{res.m}       {_num(res.phi_m, False)}", file=out)
    print(f"phi_{res.m + 1}       {_num(res.phi_m_plus_1, False)}", file=out)
    print(f"std         {_num(res.std, False)}", file=out)
    print(f"r           {_num(res.r, False)}", file=out)
    print(f"nodes       {res.n_nodes}", file=out)
    print(f"slide       {_seq_text(res.slide)}", file=out)
    if res.flags:
        print(f"flags       {','.join(res.flags)}", file=out)
    return EXIT_OK


def _read_sequence(source):
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except FileNotFoundError:
            text = source
        except OSError as exc:
            raise _Failure(EXIT_IO, f"{source}: {exc.strerror or exc}") from exc
    tokens = text.replace(",", " ").split()
    try:
        values = [float(t) for t in tokens]
    except ValueError as exc:
        raise _Failure(EXIT_PARSE, f"cannot parse sequence: {exc}") from exc
    if not values or not all(math.isfinite(v) for v in values):
        raise _Failure(EXIT_PARSE, "sequence must contain at least one finite number")
    return values


def cmd_apen(args, out):
    _notice_overrides(args)
    u = _read_sequence(args.sequence)
    machine = args.format == "json"
    std = population_std(u)
    r = args.r if args.r is not None else args.r_factor * std
    flags = []
    try:
        if len(u) < args.m + 1:
            raise SequenceTooShort(
                f"approximate entropy with m={args.m} needs at least {args.m + 1} points, got {len(u)}"
            )
        if args.r is None and std == 0.0:
            # Constant sequence: fully regular, ApEn 0 by the same policy as UI.
            phi_m = phi_next = 0.0
            flags.append("constant_sequence")
        else:
            phi_m, phi_next = apen_components(u, args.m, r)
    except ValueError as exc:
        raise _Failure(EXIT_COMPUTE, str(exc)) from exc
    value = phi_m - phi_next
    if machine:
        payload = {"apen": value, "phi_m": phi_m, "phi_m_plus_1": phi_next, "m": args.m, "r": r}
        if args.r is None:
            payload["std"] = std
            payload["r_factor"] = args.r_factor
        payload["flags"] = flags
        print(_json(payload), file=out)
        return EXIT_OK
    print(f"ApEn {_num(value, False)}", file=out)
    if args.r is None:
        print(f"std  {_num(std, False)}", file=out)
        print(f"r    {_num(r, False)}", file=out)
    if flags:
        print(f"flags {','.join(flags)}", file=out)
    return EXIT_OK


def cmd_slide(args, out):
    bpa = _load(args.path)
    seq = slide(bpa)
    if args.format == "json":
        print(_json({"file": args.path, "slide": list(seq)}), file=out)
    else:
        print(_seq_text(seq), file=out)
    return EXIT_OK


def cmd_sweep(args, out):
    _notice_overrides(args)
    if args.resolution < 1:
        raise _Failure(EXIT_USAGE, "resolution must be at least 1")
    records = sweep_simplex(args.resolution, m=args.m, r_factor=args.r_factor)
    if args.output in (None, "-"):
        write_sweep(records, out)
    else:
        try:
            write_sweep(records, args.output)
        except OSError as exc:
            raise _Failure(EXIT_IO, f"{args.output}: {exc.strerror or exc}") from exc
        print(f"wrote {len(records)} rows to {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_compare(args, out):
    _notice_overrides(args)
    if len(args.paths) < 2:
        raise _Failure(EXIT_USAGE, "compare needs at least two BPA files")
    rows, failures = [], []
    for path in args.paths:
        try:
            res = ui(_load(path), m=args.m, r_factor=args.r_factor, epsilon_sum=args.epsilon_sum)
        except _Failure as exc:
            failures.append((path, exc.code, str(exc)))
            continue
        except (InvalidBPA, TooFewNodes, SequenceTooShort, DegenerateTolerance) as exc:
            failures.append((path, _classify(exc), str(exc)))
            continue
        rows.append((path, res))
    rows.sort(key=lambda pr: pr[1].ui)

    if args.format == "json":
        doc = {
            "results": [
                {"file": p, "n_nodes": r.n_nodes, "ui": r.ui, "flags": list(r.flags)} for p, r in rows
            ],
            "errors": [{"file": p, "code": c, "message": msg} for p, c, msg in failures],
        }
        print(_json(doc), file=out)
    else:
        width = max(len(p) for p in args.paths)
        print(f"{'file':<{width}}  nodes  {'ui':>10}  flags", file=out)
        for p, r in rows:
            print(f"{p:<{width}}  {r.n_nodes:>5}  {_num(r.ui, False):>10}  {','.join(r.flags)}", file=out)
        for p, _, msg in failures:
            print(f"{p:<{width}}  error: {msg}", file=out)
    return failures[0][1] if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=DEFAULT_M, help="embedding dimension (default 2)")
    common.add_argument(
        "--r-factor", type=float, default=DEFAULT_R_FACTOR,
        help="tolerance as a multiple of the population std (default 0.2)",
    )
    common.add_argument(
        "--epsilon-sum", type=float, default=DEFAULT_EPSILON_SUM,
        help="tolerance on the mass sum (default 1e-9)",
    )
    common.add_argument("--format", choices=("human", "json"), default="human")

    parser = argparse.ArgumentParser(
        prog="bpa-integrity",
        description="Integrity uncertainty of basic probability assignments via approximate entropy.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the mass axioms of a BPA file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ui", parents=[common], help="compute UI of a BPA file")
    p.add_argument("path")
    p.set_defaults(func=cmd_ui)

    p = sub.add_parser("apen", parents=[common], help="approximate entropy of a number sequence")
    p.add_argument("sequence", help="comma/space separated numbers, a file of them, or '-' for stdin")
    p.add_argument("--r", type=float, default=None, help="explicit tolerance (overrides --r-factor)")
    p.set_defaults(func=cmd_apen)

    p = sub.add_parser("slide", parents=[common], help="print the slide degree sequence of a BPA file")
    p.add_argument("path")
    p.set_defaults(func=cmd_slide)

    p = sub.add_parser("sweep", parents=[common], help="UI of X_test over the (x, y) simplex as CSV")
    p.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    p.add_argument("--output", "-o", default=None, help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", parents=[common], help="rank BPA files by UI")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
