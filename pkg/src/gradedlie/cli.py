"""Command-line front end.

Exit codes: 0 success (counterexamples are findings, not failures),
1 usage error, 2 parse or validation error, 3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classify as C
from . import corpus
from .algebra import GradedLieAlgebra, bracket, validate
from .formats import FormatError, ValidationFailed, ideal_to_dict, parse_algebra, parse_ideal_spec, parse_vector
from .ideals import IdealHandle, colon, derived_ideal, full_ideal, generated_ideal, zero_ideal
from .linalg import MAX_ENUM_DIM, DimensionError, ResourceGuardError, Subspace, UnsupportedFieldError, canonicalize
from .report import emit_report
from .theorems import theorem_suite

EXIT_USAGE, EXIT_PARSE, EXIT_GUARD = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_algebra(ref: str, allow_invalid: bool = False) -> GradedLieAlgebra:
    path = Path(ref)
    if path.is_file():
        return parse_algebra(path.read_text(encoding="utf-8"), allow_invalid)
    if ref in corpus.NAMES:
        return parse_algebra(corpus.corpus_text(ref), allow_invalid)
    raise FormatError(f"no such algebra file or corpus entry: {ref}")


def resolve_ideal(L: GradedLieAlgebra, raw: str) -> IdealHandle:
    path = Path(raw)
    spec = parse_ideal_spec(L, path.read_text(encoding="utf-8") if path.is_file() else raw)
    if spec == "zero":
        return zero_ideal(L)
    if spec == "full":
        return full_ideal(L)
    if spec == "derived":
        return derived_ideal(L)
    return IdealHandle(L, canonicalize(L.field, L.dim, spec))


def _rows(L, S: Subspace):
    return ideal_to_dict(L, S.rows)["generators"]


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _guard(L, args):
    if L.dim > args.max_dim:
        raise ResourceGuardError(f"{L.name} has dimension {L.dim} > --max-dim {args.max_dim}")


# subcommands


def cmd_validate(args) -> int:
    L = load_algebra(args.algebra, allow_invalid=True)
    violations = validate(L)
    payload = {"algebra": L.name, "violations": [
        {"axiom": v.axiom, "indices": list(v.indices), "residual": [str(c) for c in v.residual]} for v in violations]}
    text = f"{L.name}: ok" if not violations else f"{L.name}: {len(violations)} violation(s)\n" + "\n".join(
        f"  {v}" for v in violations)
    _emit(args, payload, text)
    return 0 if not violations else EXIT_PARSE


def cmd_ideal_gen(args) -> int:
    L = load_algebra(args.algebra, args.allow_invalid)
    gens = [parse_vector(L, g) for g in args.vectors]
    I = generated_ideal(L, gens)
    payload = {"algebra": L.name, "ideal": _rows(L, I.space), "dim": I.dim, "is_graded": I.is_graded,
               "iterations": I.iterations}
    _emit(args, payload, f"<{', '.join(L.format_vector(g) for g in gens)}> = {L.format_subspace(I.space)}"
                         f"  (dim {I.dim}, graded {I.is_graded}, {I.iterations} iterations)")
    return 0


def cmd_bracket(args) -> int:
    L = load_algebra(args.algebra, args.allow_invalid)
    v, w = parse_vector(L, args.v), parse_vector(L, args.w)
    z = bracket(L, v, w)
    payload = {"algebra": L.name, "result": ideal_to_dict(L, [z])["generators"][0]}
    _emit(args, payload, f"[{L.format_vector(v)}, {L.format_vector(w)}] = {L.format_vector(z)}")
    return 0


def cmd_colon(args) -> int:
    L = load_algebra(args.algebra, args.allow_invalid)
    I = resolve_ideal(L, args.ideal)
    if args.by is not None:
        second = parse_vector(L, args.by)
        label = L.format_vector(second)
    else:
        second = resolve_ideal(L, args.by_ideal)
        label = L.format_subspace(second.space)
    res = colon(L, I, second)
    payload = {"algebra": L.name, "colon": _rows(L, res.space), "is_ideal": res.is_ideal, "is_graded": res.is_graded}
    _emit(args, payload, f"({L.format_subspace(I.space)} : {label}) = {L.format_subspace(res.space)}"
                         f"  (ideal {res.is_ideal}, graded {res.is_graded})")
    return 0


def _verdict_doc(L, v: C.Verdict) -> dict:
    d = {"holds": v.holds, "method": v.method, "witness": v.describe(L) if v.witness else None}
    if v.empty:
        d["empty"] = True
    return d


def classify_ideal(L: GradedLieAlgebra, I: IdealHandle, variant: C.QuantifierVariant) -> dict:
    """All decision procedures for one ideal; shared by the CLI and its tests."""
    out = {"algebra": L.name, "ideal": L.format_subspace(I.space), "variant": variant.name,
           "is_ideal": I.is_ideal, "is_graded": I.is_graded, "verdicts": {}}
    if not I.is_ideal:
        return out
    verdicts = out["verdicts"]
    verdicts["prime_nongraded"] = _verdict_doc(L, C.is_prime_nongraded(L, I, "definition", variant))
    if not I.is_graded:
        return out
    for m in ("definition", "element", "colon"):
        verdicts[f"prime_{m}"] = _verdict_doc(L, C.is_graded_prime(L, I, m, variant))
    for m in ("definition", "element"):
        verdicts[f"semiprime_{m}"] = _verdict_doc(L, C.is_semiprime(L, I, m, variant))
    verdicts["irreducible"] = _verdict_doc(L, C.is_graded_irreducible(L, I, variant))
    for m in ("definition", "generated"):
        verdicts[f"total_prime_{m}"] = _verdict_doc(L, C.is_total_prime(L, I, m))
    verdicts["complement_closed"] = _verdict_doc(L, C.complement_mult_closed(L, I))
    return out


def cmd_classify(args) -> int:
    L = load_algebra(args.algebra, args.allow_invalid)
    I = resolve_ideal(L, args.ideal)
    if not L.field.is_finite:
        raise UnsupportedFieldError("decision requires a finite field")
    _guard(L, args)
    doc = classify_ideal(L, I, C.QuantifierVariant.from_name(args.variant))
    lines = [f"{L.name}, ideal {doc['ideal']} (variant {doc['variant']})",
             f"  ideal      {_mark(doc['is_ideal'])}", f"  graded     {_mark(doc['is_graded'])}"]
    for name, v in doc["verdicts"].items():
        extra = ""
        if v["witness"]:
            extra = "  witness: " + ", ".join(f"{k}={val}" for k, val in v["witness"].items())
        elif v.get("empty"):
            extra = "  (empty complement)"
        lines.append(f"  {name:<22} {_mark(v['holds'])}{extra}")
    _emit(args, doc, "\n".join(lines))
    return 0


def _mark(b: bool) -> str:
    return "yes" if b else "no"


def cmd_enumerate(args) -> int:
    L = load_algebra(args.algebra, args.allow_invalid)
    _guard(L, args)
    ideals = C.enumerate_ideals(L) if args.all else C.enumerate_graded_ideals(L, args.max_dim)
    payload = {"algebra": L.name, "kind": "all" if args.all else "graded",
               "ideals": [_rows(L, I.space) for I in ideals]}
    text = "\n".join([f"{L.name}: {len(ideals)} {'ideals' if args.all else 'graded ideals'}"] +
                     [f"  {L.format_subspace(I.space)}" for I in ideals])
    _emit(args, payload, text)
    return 0


def cmd_check_theorems(args) -> int:
    algebras = corpus.load_dir(args.corpus, args.allow_invalid) if args.corpus else corpus.default_corpus()
    for L in algebras:
        bad = validate(L)
        if bad:
            raise ValidationFailed(L.name, bad)
        if L.field.is_finite:
            _guard(L, args)
    report = theorem_suite(algebras, C.QuantifierVariant.from_name(args.variant), jobs=args.jobs,
                           only=args.only.split(",") if args.only else None)
    if args.json:
        sys.stdout.write(emit_report(report, "machine", timings=args.timings))
    else:
        sys.stdout.write(emit_report(report, "text", timings=not args.no_timings))
    return 0


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies use SUPPRESS so they do not reset flags given before the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    common.add_argument("--variant", choices=("literal", "proper"), default=d("literal"),
                        help="quantify over all ideals (literal) or proper ideals only")
    common.add_argument("--allow-invalid", action="store_true", default=d(False),
                        help="load algebras that fail validation")
    common.add_argument("--max-dim", type=int, default=d(MAX_ENUM_DIM), help="dimension guard for enumerations")
    common.add_argument("--seed", type=int, default=d(None), help="reserved; every procedure is deterministic")
    return common


def build_parser() -> argparse.ArgumentParser:
    top, common = _common_flags(False), _common_flags(True)

    p = _Parser(prog="gradedlie", description="Exact computations with graded ideals of graded Lie algebras.",
                parents=[top])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="check the Lie and grading axioms")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("ideal-gen", parents=[common], help="ideal generated by vectors")
    s.add_argument("algebra")
    s.add_argument("vectors", nargs="+", help="comma-separated scalars or a basis name")
    s.set_defaults(func=cmd_ideal_gen)

    s = sub.add_parser("bracket", parents=[common], help="bracket of two vectors")
    s.add_argument("algebra")
    s.add_argument("v")
    s.add_argument("w")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("colon", parents=[common], help="colon subspace (I : x) or (I : J)")
    s.add_argument("algebra")
    s.add_argument("--ideal", required=True, help="preset, generator list, or ideal file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--by", help="vector x")
    g.add_argument("--by-ideal", help="ideal J")
    s.set_defaults(func=cmd_colon)

    s = sub.add_parser("classify", parents=[common], help="run every decision procedure on an ideal")
    s.add_argument("algebra")
    s.add_argument("--ideal", required=True, help="preset (zero, full, derived), generator list, or ideal file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", parents=[common], help="list graded ideals (or all ideals)")
    s.add_argument("algebra")
    s.add_argument("--all", action="store_true", help="all ideals, not only graded ones")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check-theorems", parents=[common], help="exhaustive theorem check over a corpus")
    s.add_argument("--corpus", help="directory of algebra JSON files (default: built-in corpus)")
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.add_argument("--only", help="comma-separated theorem ids")
    s.add_argument("--timings", action="store_true", help="include wall-clock millis in --json output")
    s.add_argument("--no-timings", action="store_true", help="omit wall-clock times from text output")
    s.set_defaults(func=cmd_check_theorems)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (FormatError, ValidationFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UnsupportedFieldError, C.ClassifyError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
