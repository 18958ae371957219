"""Command line interface.

Exit codes: 0 on success (or when every table row matches), 1 when a
verification or an expected value fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .catalog import (
    SurfaceSpec,
    UnsupportedSurface,
    expected_h1,
    mcg_action,
    mcg_module,
    mcg_presentation,
    prop4_generators,
    surface_specs,
)
from .coefficients import ModuleIncompatible, check_action_compatibility, load_module, trivial_module
from .exact_linalg import DimensionError
from .homology import CycleViolation, H1Result, twisted_h1, verify_kernel_generators
from .presentation import (
    PresentationError,
    PresentationSyntaxError,
    format_presentation,
    load_presentation,
    presentation_to_json,
)
from .representation import RepresentationInvalid, load_representation, trivial_representation, verify_representation

INPUT_ERRORS = (
    UnsupportedSurface,
    PresentationError,
    PresentationSyntaxError,
    RepresentationInvalid,
    ModuleIncompatible,
    CycleViolation,
    DimensionError,
    OSError,
)


class UsageError(ValueError):
    pass


def _catalog_inputs(spec: SurfaceSpec, coeffs: str):
    p = mcg_presentation(spec)
    if coeffs == "trivial":
        return p, trivial_representation(p), trivial_module()
    return p, mcg_action(spec), mcg_module(spec)


def _result_doc(result: H1Result, genus=None, boundary=None, coeffs=None, matched=None) -> dict:
    return {
        "genus": genus,
        "boundary": boundary,
        "coefficients": coeffs,
        "free_rank": result.invariants.free_rank,
        "torsion": list(result.invariants.torsion),
        "kernel_rank": result.kernel_rank,
        "matched_expected": matched,
    }


def _emit(doc: dict, out) -> None:
    out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def _print_result(result: H1Result, out) -> None:
    out.write(f"{result.invariants}\n")
    out.write(f"  free rank: {result.invariants.free_rank}\n")
    out.write(f"  torsion: {list(result.invariants.torsion)}\n")
    out.write(f"  cycle lattice rank: {result.kernel_rank}\n")
    out.write(f"  relation vectors: {result.num_relation_vectors}\n")


def cmd_compute(args, out) -> int:
    spec = SurfaceSpec(args.g, args.s)
    result = twisted_h1(*_catalog_inputs(spec, args.coeffs))
    matched = result.invariants == expected_h1(spec) if args.coeffs == "twisted" else None
    if args.json:
        _emit(_result_doc(result, spec.genus, spec.boundary, args.coeffs, matched), out)
    else:
        out.write(f"H_1(M({spec}); {'H_1(N; Z)' if args.coeffs == 'twisted' else 'Z'}) = ")
        _print_result(result, out)
    return 0


def _table_row(spec: SurfaceSpec) -> tuple[SurfaceSpec, H1Result]:
    return spec, twisted_h1(*_catalog_inputs(spec, "twisted"))


def cmd_table(args, out) -> int:
    if args.g_min > args.g_max:
        raise UsageError("empty genus range")
    boundaries = {"0": (0,), "1": (1,), "both": (1, 0)}[args.s]
    specs = surface_specs(args.g_min, args.g_max, boundaries)
    if not specs:
        raise UsageError(f"no supported surfaces with genus in {args.g_min}..{args.g_max}")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_table_row, specs))
    else:
        rows = [_table_row(spec) for spec in specs]
    all_ok = True
    docs = []
    lines = [f"{'g':>3} {'s':>2}  {'computed':<20} {'expected':<20} match"]
    for spec, result in rows:
        expected = expected_h1(spec)
        ok = result.invariants == expected
        all_ok &= ok
        docs.append(_result_doc(result, spec.genus, spec.boundary, "twisted", ok))
        lines.append(f"{spec.genus:>3} {spec.boundary:>2}  {str(result.invariants):<20} {str(expected):<20} {'yes' if ok else 'NO'}")
    if args.json:
        _emit({"rows": docs, "all_matched": all_ok}, out)
    else:
        out.write("\n".join(lines) + "\n")
    return 0 if all_ok else 1


def cmd_verify(args, out) -> int:
    spec = SurfaceSpec(args.g, args.s)
    p, rep, m = _catalog_inputs(spec, "twisted")
    if args.what == "action":
        report = verify_representation(p, rep, m.lattice)
        compatible = check_action_compatibility(m, rep)
        ok = report.passed and compatible
        if args.json:
            _emit({
                "genus": spec.genus,
                "boundary": spec.boundary,
                "relations": [{"label": c.label, "holds": c.holds, "exact": c.exact} for c in report.relations],
                "inverses": report.inverse_checks,
                "module_compatible": compatible,
                "passed": ok,
            }, out)
        else:
            for c in report.relations:
                status = "ok" if c.exact else ("ok (modulo module relations)" if c.holds else "FAIL")
                out.write(f"{c.label:<12} {status}\n")
            bad_inv = [n for n, good in report.inverse_checks.items() if not good]
            out.write(f"inverses: {'ok' if not bad_inv else 'FAIL ' + ', '.join(bad_inv)}\n")
            out.write(f"module compatibility: {'ok' if compatible else 'FAIL'}\n")
            out.write(f"{'PASS' if ok else 'FAIL'}\n")
        return 0 if ok else 1
    report = verify_kernel_generators(p, rep, m, prop4_generators(spec))
    if args.json:
        _emit({
            "genus": spec.genus,
            "boundary": spec.boundary,
            "membership": report.membership,
            "generation": report.generation,
            "independence": report.independence,
            "variant": report.variant,
            "passing_variants": report.passing_variants,
            "kernel_rank": report.kernel_rank,
            "passed": report.passed,
        }, out)
    else:
        out.write(f"membership: {'ok' if report.membership else 'FAIL ' + ', '.join(report.outside)}\n")
        out.write(f"generation: {'ok' if report.generation else 'FAIL'}\n")
        if report.independence is not None:
            out.write(f"independence: {'ok' if report.independence else 'FAIL'}\n")
        out.write(f"G10 sign variants passing: {', '.join(report.passing_variants) or 'none'}\n")
        out.write(f"{'PASS' if report.passed else 'FAIL'}\n")
    return 0 if report.passed else 1


def cmd_run(args, out) -> int:
    p = load_presentation(args.presentation)
    if (args.representation is None) != (args.module is None):
        raise UsageError("--representation and --module must be given together")
    if args.representation is None:
        rep, m = trivial_representation(p), trivial_module()
    else:
        rep, m = load_representation(args.representation), load_module(args.module)
    result = twisted_h1(p, rep, m)
    if args.json:
        _emit(_result_doc(result, coeffs="trivial" if args.representation is None else "file"), out)
    else:
        out.write(f"H_1({p.name}; M) = ")
        _print_result(result, out)
    return 0


def cmd_emit(args, out) -> int:
    spec = SurfaceSpec(args.g, args.s)
    if args.part == "presentation":
        p = mcg_presentation(spec)
        if args.format == "dsl":
            out.write(format_presentation(p))
        else:
            _emit(presentation_to_json(p), out)
        return 0
    if args.format == "dsl":
        raise UsageError(f"--format dsl only applies to the presentation, not the {args.part}")
    if args.part == "representation":
        _emit(mcg_action(spec).to_json(), out)
    else:
        _emit(mcg_module(spec).to_json(), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grouphom", description="First homology of finitely presented groups with twisted coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    def surface_args(sp):
        sp.add_argument("--g", type=int, required=True, help="genus")
        sp.add_argument("--s", type=int, required=True, help="number of boundary components (0 or 1)")

    sp = sub.add_parser("compute", help="H_1 of a catalog mapping class group")
    surface_args(sp)
    sp.add_argument("--coeffs", choices=("twisted", "trivial"), default="twisted")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("table", help="compare computed and expected values over a genus range")
    sp.add_argument("--g-min", type=int, required=True)
    sp.add_argument("--g-max", type=int, required=True)
    sp.add_argument("--s", choices=("0", "1", "both"), default="both")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="check the action or the cycle-lattice generators")
    surface_args(sp)
    sp.add_argument("what", choices=("action", "kernel"))
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("run", help="H_1 for user-supplied files")
    sp.add_argument("presentation", help="presentation file (DSL, or .json)")
    sp.add_argument("--representation", help="representation JSON file")
    sp.add_argument("--module", help="coefficient module JSON file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("emit", help="write catalog inputs to standard output")
    surface_args(sp)
    sp.add_argument("--format", choices=("dsl", "json"), default="dsl")
    sp.add_argument("--part", choices=("presentation", "representation", "module"), default="presentation")
    sp.set_defaults(func=cmd_emit)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, *INPUT_ERRORS) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
