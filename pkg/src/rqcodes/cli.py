"""Command-line front end: ``rqcodes <subcommand> ...``.

Exit codes: 0 ok, 1 audit mismatch under ``--fail-on-mismatch``, 2 usage or
parameter error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .analysis import ENGINES, covering_radius, weight_distribution
from .audit import AuditBudget, AuditReport, run_audit, structural_checks
from .binary import BinaryCode, unpack_rows
from .constructions import FAMILIES, build_family
from .errors import ParameterError, ResourceLimitError, RqError
from .linalg import (
    RqMatrix,
    enumerate_code,
    format_binary_matrix,
    format_matrix,
    gray_image_matrix,
    parse_matrix,
    project_matrix,
    residue_code,
    torsion_code,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
BINARY_FAMILIES = ("binary-simplex-alpha", "binary-simplex-beta")
PARAM_FLAGS = ("q", "k", "u", "n", "c")


class _Parser(argparse.ArgumentParser):
    """argparse already exits 2 on usage errors; keep its message to one line."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(EXIT_USAGE, f"rqcodes: error: {message}\n")


def _compact(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


# ---------------------------------------------------------------- argument plumbing


def _add_source(p: argparse.ArgumentParser, binary_ok: bool = False) -> None:
    g = p.add_argument_group("code source (a family with parameters, or --input)")
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--input", metavar="FILE", help="rq-matrix text file ('-' for stdin)")
    g.add_argument("--q", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--u", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--c", help="repetition symbol: decimal mask, '1+u1', or 'theta'")
    g.add_argument("--gamma", help="homogeneous-weight scale, e.g. 4 or 1/2 (default 2^q)")
    p.set_defaults(binary_ok=binary_ok)


def _add_output(p: argparse.ArgumentParser, formats: Sequence[str] = ("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")


def _add_workers(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)


def _add_budget(p: argparse.ArgumentParser) -> None:
    d = AuditBudget()
    p.add_argument("--max-q", type=int, default=d.max_q)
    p.add_argument("--max-k", type=int, default=d.max_k)
    p.add_argument("--max-n", type=int, default=d.max_n)
    p.add_argument("--max-frontier", type=int, default=d.max_frontier)
    p.add_argument("--fail-on-mismatch", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rqcodes", description="Codes over F_2[u_1..u_q]/(u_i^2): build, enumerate, analyse, audit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a generator matrix")
    _add_source(p, binary_ok=True)
    _add_output(p)

    p = sub.add_parser("enum", help="list every codeword")
    _add_source(p)
    _add_output(p)

    p = sub.add_parser("wdist", help="weight distribution")
    _add_source(p)
    p.add_argument("--metric", choices=("hamming", "lee", "hom"), default="lee")
    _add_output(p)

    p = sub.add_parser("gray", help="Gray image of the generator matrix")
    _add_source(p)
    p.add_argument("--map", choices=("lee", "hom"), default="lee")
    p.add_argument("--mode", choices=("linear", "weight-exact"), default="linear")
    _add_output(p)

    p = sub.add_parser("torsion", help="torsion code Tor_A, or the residue code")
    _add_source(p)
    p.add_argument("--set", default="", help="A as comma-separated indices, 'theta' for {1..q}; empty by default")
    p.add_argument("--residue", action="store_true", help="{u : u + u_A v in C}; A defaults to {1..q}")
    _add_output(p)

    p = sub.add_parser("project", help="Gamma_q projection of the generator to R_{q-1}")
    _add_source(p)
    _add_output(p)

    p = sub.add_parser("covradius", help="exact covering radius")
    _add_source(p)
    p.add_argument("--metric", choices=("lee", "hom"), default="lee")
    p.add_argument("--engine", choices=("auto",) + tuple(ENGINES), default="auto")
    _add_workers(p)
    _add_output(p)

    p = sub.add_parser("audit", help="check every catalogued closed-form claim")
    _add_budget(p)
    _add_workers(p)
    _add_output(p, ("text", "json", "csv"))

    p = sub.add_parser("verify", help="structural (column-multiset) checks; --input additionally round-trips a matrix file")
    p.add_argument("--input", metavar="FILE")
    _add_budget(p)
    _add_workers(p)
    _add_output(p, ("text", "json", "csv"))
    return parser


def _params(args: argparse.Namespace) -> dict:
    return {f: getattr(args, f) for f in PARAM_FLAGS if getattr(args, f, None) is not None}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParameterError(f"cannot read {path}: {exc.strerror}") from None


def _source(args: argparse.Namespace) -> tuple[str, RqMatrix | np.ndarray]:
    if args.input is not None:
        if args.family is not None:
            raise ParameterError("give either --family or --input, not both")
        return "input", parse_matrix(_read_text(args.input), args.gamma)
    if args.family is None:
        raise ParameterError("a code source is required: --family or --input")
    if args.family in BINARY_FAMILIES and not args.binary_ok:
        raise ParameterError(f"{args.family} is a binary family; only 'gen' accepts it")
    gamma = Fraction(args.gamma) if args.gamma is not None else None
    return args.family, build_family(args.family, args.q, args.k, args.u, args.n, args.c, gamma)


def _header(args: argparse.Namespace, family: str) -> dict:
    return {"family": family, "params": _params(args)}


def _parse_set(text: str, q: int) -> tuple[int, ...]:
    s = text.strip().lower()
    if s in ("", "empty", "none"):
        return ()
    if s in ("theta", "all"):
        return tuple(range(1, q + 1))
    try:
        return tuple(sorted({int(t) for t in s.split(",")}))
    except ValueError:
        raise ParameterError(f"--set must be comma-separated indices, got {text!r}") from None


# ---------------------------------------------------------------- subcommands


def _cmd_gen(args: argparse.Namespace) -> str:
    family, G = _source(args)
    if isinstance(G, np.ndarray):
        if args.format == "json":
            return _compact({**_header(args, family), "matrix": ["".join(map(str, r)) for r in G]})
        return format_binary_matrix(G)
    if args.format == "json":
        return _compact({**_header(args, family), "q": G.ring.q, "matrix": G.entries.tolist()})
    return format_matrix(G)


def _cmd_enum(args: argparse.Namespace) -> str:
    family, G = _source(args)
    C = enumerate_code(G)
    words = C.codewords
    if args.format == "json":
        return _compact({**_header(args, family), "size": C.size, "codewords": words.tolist()})
    return "".join(" ".join(map(str, w)) + "\n" for w in words.tolist())


def _cmd_wdist(args: argparse.Namespace) -> str:
    family, G = _source(args)
    dist = weight_distribution(enumerate_code(G), args.metric)
    if args.format == "json":
        return _compact({**_header(args, family), "metric": args.metric, "distribution": dist.as_json()})
    return _compact(dist.as_json())


def _cmd_gray(args: argparse.Namespace) -> str:
    family, G = _source(args)
    img = gray_image_matrix(G, args.map, args.mode)
    if args.format == "json":
        rows = ["".join(map(str, r)) for r in np.atleast_2d(img)]
        return _compact({**_header(args, family), "map": args.map, "mode": args.mode, "matrix": rows})
    return format_binary_matrix(img)


def _cmd_torsion(args: argparse.Namespace) -> str:
    family, G = _source(args)
    C = enumerate_code(G)
    if args.residue:
        A = _parse_set(args.set, G.ring.q) if args.set else None
        code: BinaryCode = residue_code(C, A)
        label = "residue"
    else:
        A = _parse_set(args.set, G.ring.q)
        code = torsion_code(C, A)
        label = "torsion"
    basis = unpack_rows(sorted(code.basis, reverse=True), code.n)
    if args.format == "json":
        return _compact(
            {
                **_header(args, family),
                "operation": label,
                "set": list(A) if A is not None else "theta",
                "size": len(code),
                "dimension": code.rank,
                "basis": ["".join(map(str, r)) for r in basis],
            }
        )
    return format_binary_matrix(basis) if len(basis) else ""


def _cmd_project(args: argparse.Namespace) -> str:
    family, G = _source(args)
    P = project_matrix(G)
    if args.format == "json":
        return _compact({**_header(args, family), "q": P.ring.q, "matrix": P.entries.tolist()})
    return format_matrix(P)


def _cmd_covradius(args: argparse.Namespace) -> str:
    family, G = _source(args)
    res = covering_radius(enumerate_code(G), args.metric, args.engine, workers=max(1, args.workers))
    if args.format == "json":
        return _compact({**_header(args, family), **res.as_json()})
    return f"{_jsonable(res.value)}\n"


def _budget(args: argparse.Namespace) -> AuditBudget:
    for flag in ("max_q", "max_k", "max_n", "max_frontier"):
        if getattr(args, flag) < 1:
            raise ParameterError(f"--{flag.replace('_', '-')} must be >= 1")
    return AuditBudget(args.max_q, args.max_k, args.max_n, args.max_frontier, max(1, args.workers))


def _render_report(report: AuditReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv()
    return report.to_text()


def _cmd_audit(args: argparse.Namespace) -> tuple[str, int]:
    report = run_audit(_budget(args))
    code = EXIT_MISMATCH if args.fail_on_mismatch and report.has_mismatch() else EXIT_OK
    return _render_report(report, args.format), code


def _cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    prefix = ""
    if args.input is not None:
        G = parse_matrix(_read_text(args.input))
        if parse_matrix(format_matrix(G)) != G:
            raise ParameterError(f"{args.input}: matrix does not round-trip")
        prefix = f"{args.input}: rq-matrix q={G.ring.q} rows={G.rows} cols={G.cols} round-trips\n"
    report = structural_checks(_budget(args))
    code = EXIT_MISMATCH if args.fail_on_mismatch and report.has_mismatch() else EXIT_OK
    body = _render_report(report, args.format)
    return (prefix + body if args.format == "text" else body), code


COMMANDS = {
    "gen": _cmd_gen,
    "enum": _cmd_enum,
    "wdist": _cmd_wdist,
    "gray": _cmd_gray,
    "torsion": _cmd_torsion,
    "project": _cmd_project,
    "covradius": _cmd_covradius,
    "audit": _cmd_audit,
    "verify": _cmd_verify,
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
        text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
        _emit(text, args.out)
        return code
    except ResourceLimitError as exc:
        print(f"rqcodes: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (RqError, ValueError, ZeroDivisionError) as exc:
        print(f"rqcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"rqcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
