"""Command-line interface: validation, structural analysis, series, the
check suite, and exhaustive enumeration.

Exit codes: 0 success / all pass, 1 mathematical failure (invalid algebra or
a failed check), 2 usage or I/O trouble, 3 budget exceeded.  Reports embed
the sha256 of every input so recorded runs stay reproducible; the JSON form
is stable across runs except for the elapsed_ms field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .algebra import AxiomViolation, PoissonAlgebra
from .corpus import (
    CorpusFormatError,
    enumerate_poisson_structures,
    parse_document,
    parse_manifest,
    serialize_document,
    serialize_manifest,
)
from .fields import FieldError
from .lattice import (
    BudgetExceededError,
    LatticeBudget,
    StructureReport,
    structure_report,
)
from .linalg import Subspace
from .series import SERIES_KINDS, SeriesReport, series_by_kind
from .theorems import REGISTRY, run_suite, summarise

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AxiomViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (OSError, CorpusFormatError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="palg",
                                     description="exact structure theory for Poisson algebras")
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("validate", help="check the defining identities of .palg files")
    p.add_argument("paths", nargs="+")
    _common_flags(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("analyze", help="full structure report for one algebra")
    p.add_argument("path")
    p.add_argument("--allow-invalid", action="store_true",
                   help="skip axiom validation (negative controls only)")
    _common_flags(p)
    _budget_flags(p)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("series", help="print a descending series")
    p.add_argument("path")
    p.add_argument("--kind", choices=SERIES_KINDS, default="derived")
    p.add_argument("--allow-invalid", action="store_true")
    _common_flags(p)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("check", help="run the check suite over a corpus manifest")
    p.add_argument("manifest")
    p.add_argument("--theorem", default=None, help="run only this check id")
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-invalid", action="store_true")
    _common_flags(p)
    _budget_flags(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("enumerate", help="exhaustively enumerate valid structures")
    p.add_argument("dim", type=int)
    p.add_argument("q", type=int)
    p.add_argument("outdir")
    _common_flags(p)
    p.set_defaults(handler=cmd_enumerate)
    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def _budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-dim", type=int, default=LatticeBudget().max_dim)
    p.add_argument("--budget-q", type=int, default=LatticeBudget().max_q)
    p.add_argument("--budget-subspaces", type=int, default=LatticeBudget().max_subspaces)


def _budget_from(args) -> LatticeBudget:
    return LatticeBudget(max_dim=args.budget_dim, max_q=args.budget_q,
                         max_subspaces=args.budget_subspaces)


def _sha256(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _envelope(command: str, inputs: list, result, started: float) -> dict:
    return {
        "tool": "palg",
        "version": __version__,
        "command": command,
        "inputs": [{"path": p, "sha256": _sha256(p)} for p in inputs],
        "result": result,
        "elapsed_ms": int((time.monotonic() - started) * 1000),
    }


def _emit(args, envelope: dict, text_lines: list) -> None:
    if args.format == "json":
        payload = json.dumps(envelope, indent=2) + "\n"
    else:
        payload = "\n".join(text_lines) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _space_json(s: Subspace | None):
    if s is None:
        return None
    return {"dim": s.dim, "basis": [[s.field.format_scalar(x) for x in row]
                                    for row in s.rows()]}


def _space_text(s: Subspace | None, labels) -> str:
    if s is None:
        return "(needs finite field)"
    if s.is_zero():
        return "0"
    parts = []
    for row in s.rows():
        terms = [f"{'' if x == 1 else s.field.format_scalar(x) + '*'}{labels[i]}"
                 for i, x in enumerate(row) if x != 0]
        parts.append(" + ".join(terms))
    return "span(" + ", ".join(parts) + ")"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    started = time.monotonic()
    results = []
    worst = EXIT_OK
    for path in args.paths:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            results.append({"path": path, "status": "io-error", "message": str(exc)})
            worst = EXIT_USAGE
            continue
        try:
            parse_document(text)
            results.append({"path": path, "status": "valid"})
        except CorpusFormatError as exc:
            results.append({"path": path, "status": "format-error", "message": str(exc)})
            worst = EXIT_USAGE
        except AxiomViolation as exc:
            results.append({"path": path, "status": "invalid", "axiom": exc.axiom,
                            "witness": list(exc.witness),
                            "residual": [str(x) for x in exc.residual]})
            if worst == EXIT_OK:
                worst = EXIT_MATH
    lines = []
    for r in results:
        if r["status"] == "valid":
            lines.append(f"{r['path']}: VALID")
        elif r["status"] == "invalid":
            lines.append(f"{r['path']}: INVALID {r['axiom']} at {tuple(r['witness'])} "
                         f"residual {r['residual']}")
        else:
            lines.append(f"{r['path']}: ERROR {r['message']}")
    inputs = [p for p in args.paths if Path(p).exists()]
    _emit(args, _envelope("validate", inputs, results, started), lines)
    return worst


def _load_algebra(path: str, allow_invalid: bool) -> PoissonAlgebra:
    return parse_document(Path(path).read_text(encoding="utf-8"), allow_invalid=allow_invalid)


def cmd_analyze(args) -> int:
    started = time.monotonic()
    try:
        alg = _load_algebra(args.path, args.allow_invalid)
    except AxiomViolation as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_MATH
    report = structure_report(alg, _budget_from(args))
    result = _report_json(report)
    labels = alg.labels()
    lines = [f"algebra {alg.name or args.path} over {alg.field} (dim {alg.dim})"]
    for key in ("radical", "nilradical", "socle", "zero_socle",
                "frattini_subalgebra", "frattini_ideal"):
        lines.append(f"  {key:20s} {_space_text(getattr(report, key), labels)}")
    if report.frattini_assoc is not None:
        lines.append(f"  {'frattini_assoc':20s} F={_space_text(report.frattini_assoc[0], labels)}"
                     f" phi={_space_text(report.frattini_assoc[1], labels)}")
        lines.append(f"  {'frattini_lie':20s} F={_space_text(report.frattini_lie[0], labels)}"
                     f" phi={_space_text(report.frattini_lie[1], labels)}")
    lines.append(f"  {'phi_free':20s} {report.phi_free}")
    if report.splitting is None and report.classification is not None:
        lines.append(f"  {'splitting':20s} none (no complement to the zero socle closes)")
    else:
        lines.append(f"  {'splitting':20s} {_space_text(report.splitting, labels)}")
    lines.append(f"  {'classification':20s} {report.classification}")
    for marker in report.markers:
        lines.append(f"  note: {marker}")
    _emit(args, _envelope("analyze", [args.path], result, started), lines)
    return EXIT_OK


def _report_json(report: StructureReport) -> dict:
    return {
        "algebra": report.algebra_name,
        "radical": _space_json(report.radical),
        "nilradical": _space_json(report.nilradical),
        "socle": _space_json(report.socle),
        "zero_socle": _space_json(report.zero_socle),
        "frattini_subalgebra": _space_json(report.frattini_subalgebra),
        "frattini_ideal": _space_json(report.frattini_ideal),
        "frattini_assoc": None if report.frattini_assoc is None else
            [_space_json(s) for s in report.frattini_assoc],
        "frattini_lie": None if report.frattini_lie is None else
            [_space_json(s) for s in report.frattini_lie],
        "phi_free": report.phi_free,
        "splitting": _space_json(report.splitting),
        "classification": report.classification,
        "idempotent": None if report.idempotent is None else
            [str(x) for x in report.idempotent],
        "markers": list(report.markers),
    }


def cmd_series(args) -> int:
    started = time.monotonic()
    try:
        alg = _load_algebra(args.path, args.allow_invalid)
    except AxiomViolation as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_MATH
    report = series_by_kind(alg, args.kind)
    result = _series_json(report)
    labels = alg.labels()
    verdict = (f"terminates at zero, step {report.step}" if report.terminates
               else f"stabilises nonzero at step {report.step}")
    lines = [f"{args.kind} series of {alg.name or args.path}: {verdict}"]
    for idx, term in enumerate(report.terms):
        lines.append(f"  term {idx}: {_space_text(term, labels)}")
    _emit(args, _envelope("series", [args.path], result, started), lines)
    return EXIT_OK


def _series_json(report: SeriesReport) -> dict:
    return {"kind": report.kind,
            "terms": [_space_json(t) for t in report.terms],
            "terminates": report.terminates,
            "step": report.step}


def cmd_check(args) -> int:
    started = time.monotonic()
    if args.list:
        for check in REGISTRY:
            print(f"{check.id:12s} {check.statement}")
        return EXIT_OK
    manifest_path = Path(args.manifest)
    members = parse_manifest(manifest_path.read_text(encoding="utf-8"))
    corpus = []
    inputs = [args.manifest]
    for member in members:
        member_path = manifest_path.parent / member
        inputs.append(str(member_path))
        corpus.append(parse_document(member_path.read_text(encoding="utf-8"),
                                     allow_invalid=args.allow_invalid))
    results = run_suite(corpus, theorem_filter=args.theorem,
                        budget=_budget_from(args), jobs=args.jobs)
    counts = summarise(results)
    payload = {"results": [r.to_json() for r in results], "summary": counts}
    lines = []
    for r in results:
        flag = "" if r.exercised else " (vacuous)"
        lines.append(f"{r.status.upper():15s} {r.theorem:12s} {r.algebra}{flag}")
        if r.status == "fail" and r.witness:
            lines.append(f"    witness: {json.dumps(r.witness)}")
    lines.append(f"summary: {counts['pass']} pass ({counts['vacuous']} vacuous), "
                 f"{counts['fail']} fail, {counts['not-applicable']} not applicable")
    _emit(args, _envelope("check", inputs, payload, started), lines)
    return EXIT_OK if counts["fail"] == 0 else EXIT_MATH


def cmd_enumerate(args) -> int:
    started = time.monotonic()
    algebras = enumerate_poisson_structures(args.dim, args.q)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    filenames = []
    for alg in algebras:
        filename = f"{alg.name}.palg"
        (outdir / filename).write_text(serialize_document(alg), encoding="utf-8")
        filenames.append(filename)
    (outdir / "manifest.json").write_text(serialize_manifest(filenames), encoding="utf-8")
    result = {"dim": args.dim, "q": args.q, "count": len(algebras),
              "manifest": str(outdir / "manifest.json")}
    lines = [f"wrote {len(algebras)} algebras to {outdir} (manifest.json included)"]
    _emit(args, _envelope("enumerate", [], result, started), lines)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
