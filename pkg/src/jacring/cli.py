"""Command line front end.

Exit status: 0 on success, 1 on usage or input errors, 2 when a mathematical
consistency check fails (degenerate matrix, unexpected dimensions, grading).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .charvar import DEFAULT_INVARIANTS_PRIME
from .errors import DegenerateMatrix, JacringError, PipelineAssertion
from .higgs import block_report
from .matrixgen import CoeffMatrix, GenConfig, check_nondegenerate, generate_matrix, require_nondegenerate
from .pipeline import (
    Pipeline,
    StageError,
    charvar_payload,
    dumps,
    matrix_from_report,
    provenance,
    read_json,
    run_all,
    write_json,
)
from .scalar import Field

log = logging.getLogger("jacring")

ENV_FIELD = "JACRING_FIELD"  # "rational" or "gfp:<p>"
ENV_THREADS = "JACRING_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _field_default() -> tuple[str, int | None]:
    raw = os.environ.get(ENV_FIELD, "rational")
    if raw.startswith("gfp"):
        _, _, p = raw.partition(":")
        return "gfp", int(p) if p else None
    return raw, None


def _threads_default() -> int:
    try:
        return int(os.environ.get(ENV_THREADS, "1"))
    except ValueError:
        return 1


def _field_from_args(args) -> Field:
    if args.field == "rational":
        return Field()
    if args.modulus is None:
        raise UsageError("--field gfp needs --modulus")
    return Field(modulus=args.modulus)


def _parse_values(text: str) -> list[str]:
    return [v.strip() for v in text.replace(";", ",").split(",") if v.strip()]


def _emit(obj, out: str | None) -> None:
    if out:
        write_json(out, obj)
        log.info("wrote %s", out)
    else:
        sys.stdout.write(dumps(obj))


def _add_gen_options(p: argparse.ArgumentParser) -> None:
    field_kind, modulus = _field_default()
    g = p.add_argument_group("matrix generation")
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--user", dest="mode", action="store_const", const="user", help="use --entries as given")
    mode.add_argument("--random", dest="mode", action="store_const", const="random", help="random admissible matrix")
    mode.add_argument(
        "--hyperelliptic", dest="mode", action="store_const", const="hyperelliptic", help="Vandermonde matrix a_ij = lambda_j^i"
    )
    g.add_argument("--lambda", dest="lam", help="8 distinct comma-separated values (hyperelliptic)")
    g.add_argument("--entries", help="32 values, rows separated by ';' (user mode), or a matrix JSON path")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--randrange", type=int, default=10, help="entries are drawn from [-N+1, N-1]")
    g.add_argument("--max-attempts", type=int, default=10_000)
    g.add_argument("--field", choices=("rational", "gfp"), default=field_kind)
    g.add_argument("--modulus", type=int, default=modulus)


def _build_matrix(args) -> CoeffMatrix:
    field = _field_from_args(args)
    mode = args.mode or "hyperelliptic"
    cfg = GenConfig(mode, randrange=args.randrange, seed=args.seed, field=field, max_attempts=args.max_attempts)
    if mode == "user":
        if not args.entries:
            raise UsageError("--user needs --entries")
        if Path(args.entries).is_file():
            rows = read_json(args.entries)["entries"]
        else:
            rows = [_parse_values(r) for r in args.entries.split(";")]
        return generate_matrix(cfg, user_entries=[[field.parse(str(v)) for v in r] for r in rows])
    lam = [field.parse(v) for v in _parse_values(args.lam)] if args.lam else None
    if lam is not None and mode != "hyperelliptic":
        raise UsageError("--lambda only applies to --hyperelliptic")
    return generate_matrix(cfg, user_lambda=lam)


def _warn_user_matrix(A: CoeffMatrix, check: bool) -> None:
    if A.mode != "user":
        return
    if check:
        require_nondegenerate(A)
    else:
        log.warning("user-supplied matrix: 4x4 minors not checked (pass --check-user-matrix)")


def _load_matrix(args) -> CoeffMatrix:
    A = CoeffMatrix.from_json(read_json(args.matrix))
    try:
        _warn_user_matrix(A, args.check_user_matrix)
    except PipelineAssertion as exc:
        raise StageError("gen-matrix", exc) from exc
    return A


def _pipeline(args) -> Pipeline:
    return Pipeline(_load_matrix(args), compute_top=args.compute_top, workers=args.threads)


# -- subcommands ---------------------------------------------------------------


def cmd_gen_matrix(args) -> None:
    try:
        A = _build_matrix(args)
        if A.mode == "user":
            _warn_user_matrix(A, args.check_user_matrix)
    except JacringError as exc:
        raise StageError("gen-matrix", exc) from exc
    _emit(A.to_json(), args.out)


def cmd_check_matrix(args) -> None:
    A = CoeffMatrix.from_json(read_json(args.matrix))
    ok, bad = check_nondegenerate(A.entries, A.field)
    payload = {"nondegenerate": ok, "first_failing_columns": [c + 1 for c in bad] if bad else None, "subsets_checked": 70}
    _emit(payload, args.out)
    if not ok:
        raise StageError("gen-matrix", DegenerateMatrix(bad))


def cmd_cohomology(args) -> None:
    p = _pipeline(args)
    basis = p.basis
    if args.dump_gb:
        write_json(args.dump_gb, p.jr.ideal.to_json())
    _emit(basis.to_json(), args.out)


def cmd_higgs(args) -> None:
    p = _pipeline(args)
    theta = p.theta
    _emit({"provenance": provenance(p.A), **theta.to_json()}, args.out)
    text = block_report(theta) + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        sys.stderr.write(text)


def _invariants_field(args) -> Field:
    return Field() if args.invariants_rational else Field(modulus=args.invariants_modulus)


def _cmd_charvar(args, order: int) -> None:
    p = _pipeline(args)
    v = p.charvar(order)
    payload = charvar_payload(p, v)
    if args.invariants:
        payload["invariants"] = p.invariants(v, _invariants_field(args))
    _emit(payload, args.out)


def cmd_charvar1(args) -> None:
    _cmd_charvar(args, 1)


def cmd_charvar2(args) -> None:
    _cmd_charvar(args, 2)


def cmd_plethysm(args) -> None:
    p = _pipeline(args)
    report = p.plethysm()
    _emit({"provenance": provenance(p.A), **report.to_json()}, args.out)


def cmd_all(args) -> None:
    if args.replay:
        A = matrix_from_report(read_json(args.replay))
    elif args.matrix:
        A = _load_matrix(args)
    else:
        try:
            A = _build_matrix(args)
            _warn_user_matrix(A, args.check_user_matrix)
        except JacringError as exc:
            raise StageError("gen-matrix", exc) from exc
    inv = _invariants_field(args) if args.invariants else None
    report, timings = run_all(A, compute_top=args.compute_top, invariants_field=inv, workers=args.threads, outdir=args.outdir)
    _emit(report, args.out)
    for stage, secs in timings.items():
        log.info("%-22s %8.2fs", stage, secs)
    if args.timings:
        write_json(args.timings, {k: round(v, 3) for k, v in timings.items()})


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="jacring", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, matrix_required=True):
        if matrix_required:
            p.add_argument("--matrix", required=True, help="matrix JSON from gen-matrix")
        p.add_argument("-o", "--out", help="output JSON path (default: stdout)")
        p.add_argument("--compute-top", action="store_true", help="enumerate bidegree (6,3) instead of using x7^6*y4^3")
        p.add_argument("--check-user-matrix", action="store_true", help="verify the 4x4 minors of user matrices")
        p.add_argument("--threads", type=int, default=_threads_default(), help="worker processes for monomial scans")

    def invariants(p):
        p.add_argument("--invariants", action="store_true", help="also compute dimension and arithmetic genus")
        p.add_argument("--invariants-modulus", type=int, default=DEFAULT_INVARIANTS_PRIME)
        p.add_argument("--invariants-rational", action="store_true", help="compute the invariants over QQ")

    p = sub.add_parser("gen-matrix", help="produce an admissible coefficient matrix")
    _add_gen_options(p)
    p.add_argument("-o", "--out")
    p.add_argument("--check-user-matrix", action="store_true")
    p.set_defaults(func=cmd_gen_matrix)

    p = sub.add_parser("check-matrix", help="test all 70 4x4 minors of a matrix JSON")
    p.add_argument("--matrix", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_check_matrix)

    p = sub.add_parser("cohomology", help="graded basis of the invariant Jacobian ring")
    common(p)
    p.add_argument("--dump-gb", metavar="PATH", help="write the reduced Groebner basis as JSON")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("higgs", help="the nine 20x20 theta matrices")
    common(p)
    p.add_argument("--report", help="block-structure report path (default: stderr)")
    p.set_defaults(func=cmd_higgs)

    for name, fn in (("charvar1", cmd_charvar1), ("charvar2", cmd_charvar2)):
        p = sub.add_parser(name, help=f"equations of the {'first' if name == 'charvar1' else 'second'} characteristic subvariety")
        common(p)
        invariants(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("plethysm", help="U51 -> U42 -> U33 dimension check")
    common(p)
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("all", help="run every stage and write one report")
    _add_gen_options(p)
    common(p, matrix_required=False)
    invariants(p)
    p.add_argument("--matrix", help="start from a matrix JSON instead of generating one")
    p.add_argument("--replay", metavar="REPORT", help="rebuild the matrix recorded in an earlier report")
    p.add_argument("--outdir", help="also write one JSON file per stage here")
    p.add_argument("--timings", metavar="PATH", help="write per-stage wall times here")
    p.set_defaults(func=cmd_all)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else 1
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except StageError as exc:
        print(f"jacring: stage {exc}", file=sys.stderr)
        return 2 if exc.is_assertion else 1
    except (UsageError, JacringError, ValueError, OSError, KeyError) as exc:
        print(f"jacring {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
